#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ffsunit/cli.hpp"
#include "ffsunit/errors.hpp"
#include "ffsunit/parser.hpp"

namespace py = pybind11;

namespace {

using ffsunit::Json;

py::object to_py(const Json& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

ffsunit::PlaceSet make_places(const std::vector<std::string>& s) {
    std::vector<ffsunit::Poly> finite;
    bool inf = false;
    for (const std::string& tok : s) {
        if (tok == "inf") inf = true;
        else finite.push_back(ffsunit::parse_poly(tok));
    }
    return ffsunit::PlaceSet::make(finite, inf);
}

ffsunit::Recurrence make_rec(const std::vector<std::string>& coeffs,
                             const std::vector<std::string>& roots) {
    std::vector<ffsunit::RatFunc> fs, as;
    for (const std::string& s : coeffs) fs.push_back(ffsunit::parse_ratfunc(s));
    for (const std::string& s : roots) as.push_back(ffsunit::parse_ratfunc(s));
    return ffsunit::Recurrence(std::move(fs), std::move(as));
}

Json spec_json(const std::vector<std::string>& coeffs, const std::vector<std::string>& roots,
               const std::vector<std::string>& s, const std::string& mode) {
    Json j;
    j["coefficients"] = coeffs;
    j["roots"] = roots;
    j["S"] = s;
    j["mode"] = mode;
    return j;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact S-unit solver for split linear recurrences over Q(x)";

    py::register_exception<ffsunit::ParseError>(m, "ExprSyntaxError", PyExc_ValueError);
    py::register_exception<ffsunit::HypothesisError>(m, "HypothesisViolation", PyExc_ValueError);
    py::register_exception<ffsunit::SpecError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ffsunit::DomainError>(m, "MathDomainError", PyExc_ValueError);

    m.def("parse", [](const std::string& expr) {
        return ffsunit::ratfunc_str(ffsunit::parse_ratfunc(expr));
    }, py::arg("expr"), "parse an expression and return its canonical rendering");

    m.def("height", [](const std::string& expr) -> py::object {
        auto h = ffsunit::height(ffsunit::parse_ratfunc(expr));
        if (!h) return py::none();
        return py::int_(*h);
    }, py::arg("expr"), "height of a rational function (None for the zero function)");

    m.def("divisor", [](const std::string& expr) {
        return to_py(ffsunit::run_divisor(expr).at("divisor"));
    }, py::arg("expr"));

    m.def("is_s_unit", [](const std::string& expr, const std::vector<std::string>& s) {
        return ffsunit::is_s_unit(ffsunit::parse_ratfunc(expr), make_places(s));
    }, py::arg("expr"), py::arg("s"));

    m.def("lattice_gap", [](const std::string& a, const std::string& b) {
        return ffsunit::rat_str(
            ffsunit::lattice_gap(ffsunit::parse_ratfunc(a), ffsunit::parse_ratfunc(b)));
    }, py::arg("a"), py::arg("b"), "minimal height growth rate of a^n / b^m, as 'p/q'");

    m.def("term", [](const std::vector<std::string>& coeffs,
                     const std::vector<std::string>& roots, long n) {
        return ffsunit::ratfunc_str(make_rec(coeffs, roots).term(n));
    }, py::arg("coefficients"), py::arg("roots"), py::arg("n"));

    m.def("bound", [](const std::vector<std::string>& coeffs,
                      const std::vector<std::string>& roots,
                      const std::vector<std::string>& s, const std::string& mode) {
        Json j = spec_json(coeffs, roots, s, mode);
        ffsunit::ProblemSpec spec = ffsunit::load_spec_string(j.dump());
        return to_py(ffsunit::run_bound(spec, 1));
    }, py::arg("coefficients"), py::arg("roots"), py::arg("s"), py::arg("mode"));

    m.def("solve", [](const std::vector<std::string>& coeffs,
                      const std::vector<std::string>& roots,
                      const std::vector<std::string>& s, const std::string& mode,
                      int threads) {
        Json j = spec_json(coeffs, roots, s, mode);
        ffsunit::ProblemSpec spec = ffsunit::load_spec_string(j.dump());
        return to_py(ffsunit::run_solve(spec, threads));
    }, py::arg("coefficients"), py::arg("roots"), py::arg("s"), py::arg("mode"),
       py::arg("threads") = 1);

    m.def("verify", [](const std::vector<std::string>& coeffs,
                       const std::vector<std::string>& roots,
                       const std::vector<std::string>& s, const std::vector<long>& indices) {
        Json j = spec_json(coeffs, roots, s, "verify");
        j["indices"] = indices;
        ffsunit::ProblemSpec spec = ffsunit::load_spec_string(j.dump());
        return to_py(ffsunit::run_verify(spec));
    }, py::arg("coefficients"), py::arg("roots"), py::arg("s"), py::arg("indices"));

    m.def("window_scan", [](const std::vector<std::string>& coeffs,
                            const std::vector<std::string>& roots,
                            const std::vector<std::string>& s, const std::string& mode,
                            long lo, long hi) {
        ffsunit::WindowReport w = ffsunit::window_scan(make_rec(coeffs, roots), make_places(s),
                                                       mode == "pair", lo, hi);
        py::list hits;
        for (const auto& h : w.hits) {
            py::dict e;
            e["n"] = h.n;
            if (mode == "pair") e["m"] = h.m;
            hits.append(std::move(e));
        }
        return hits;
    }, py::arg("coefficients"), py::arg("roots"), py::arg("s"), py::arg("mode"),
       py::arg("lo"), py::arg("hi"));
}
