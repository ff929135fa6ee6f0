#include "ffsunit/cli.hpp"

#include <istream>
#include <sstream>

#include "ffsunit/errors.hpp"
#include "ffsunit/parser.hpp"

namespace ffsunit {

namespace {

std::vector<std::string> str_array(const Json& j, const std::string& key, bool required) {
    if (!j.contains(key)) {
        if (required) throw SpecError("missing key: " + key);
        return {};
    }
    const Json& a = j.at(key);
    if (!a.is_array()) throw SpecError("key must be an array: " + key);
    std::vector<std::string> out;
    for (const Json& e : a) {
        if (!e.is_string()) throw SpecError("entries of " + key + " must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

long int_field(const Json& e, const std::string& where) {
    if (!e.is_number_integer()) throw SpecError(where + " must be an integer");
    return e.get<long>();
}

} // namespace

ProblemSpec load_spec(std::istream& in) {
    Json j = Json::parse(in);
    if (!j.is_object()) throw SpecError("problem description must be a JSON object");
    static const char* known[] = {"coefficients", "roots", "S", "mode", "indices", "window"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw SpecError("unknown key: " + key);
    }

    ProblemSpec spec;
    spec.coefficients = str_array(j, "coefficients", true);
    spec.roots = str_array(j, "roots", true);
    for (const std::string& tok : str_array(j, "S", false)) {
        if (tok == "inf") spec.s_infinity = true;
        else spec.s_places.push_back(tok);
    }
    if (!j.contains("mode") || !j.at("mode").is_string())
        throw SpecError("missing or non-string key: mode");
    spec.mode = j.at("mode").get<std::string>();
    if (spec.mode != "single" && spec.mode != "pair" && spec.mode != "verify")
        throw SpecError("mode must be \"single\", \"pair\" or \"verify\"");

    if (j.contains("indices")) {
        if (!j.at("indices").is_array()) throw SpecError("indices must be an array");
        std::vector<long> idx;
        for (const Json& e : j.at("indices")) idx.push_back(int_field(e, "index"));
        spec.indices = std::move(idx);
    }
    if (j.contains("window")) {
        const Json& w = j.at("window");
        if (!w.is_array() || w.size() != 2) throw SpecError("window must be [lo, hi]");
        spec.window = {int_field(w[0], "window bound"), int_field(w[1], "window bound")};
    }
    if (spec.mode == "verify" && !spec.indices)
        throw SpecError("verify mode requires indices");
    if (spec.mode != "verify" && spec.indices)
        throw SpecError("indices are only valid in verify mode");
    if (spec.mode == "verify" && spec.window)
        throw SpecError("window is not valid in verify mode");
    return spec;
}

ProblemSpec load_spec_string(const std::string& text) {
    std::istringstream in(text);
    return load_spec(in);
}

Problem build_problem(const ProblemSpec& spec) {
    std::vector<RatFunc> coeffs, roots;
    for (const std::string& s : spec.coefficients) coeffs.push_back(parse_ratfunc(s));
    for (const std::string& s : spec.roots) roots.push_back(parse_ratfunc(s));
    std::vector<Poly> places;
    for (const std::string& s : spec.s_places) {
        Poly p = parse_poly(s);
        if (p.is_zero()) throw SpecError("places must be nonzero polynomials");
        if (p.is_constant()) throw SpecError("places must be nonconstant polynomials");
        places.push_back(std::move(p));
    }
    return Problem{Recurrence(std::move(coeffs), std::move(roots)),
                   PlaceSet::make(places, spec.s_infinity)};
}

// --- JSON assembly ---------------------------------------------------------

namespace {

Json place_set_json(const PlaceSet& s) {
    Json j;
    Json finite = Json::array();
    for (const Poly& b : s.finite()) finite.push_back(poly_str(b));
    j["finite"] = std::move(finite);
    j["infinity"] = s.has_infinity();
    j["place_count"] = s.place_count();
    return j;
}

Json divisor_json(const Divisor& d) {
    Json j;
    Json fin = Json::array();
    for (const auto& [b, v] : d.finite) {
        Json e;
        e["place"] = poly_str(b);
        e["valuation"] = v;
        fin.push_back(std::move(e));
    }
    j["finite"] = std::move(fin);
    j["infinity"] = d.at_infinity;
    return j;
}

Json bound_json(const BoundReport& br) {
    Json j;
    j["mode"] = br.mode;
    Json consts;
    for (const auto& [name, v] : br.constants) consts[name] = rat_str(v);
    j["constants"] = std::move(consts);
    if (br.mode == "pair") {
        Json gaps = Json::array();
        for (const auto& [i, k, gp] : br.gaps) {
            Json e;
            e["i"] = i;
            e["j"] = k;
            e["gap"] = rat_str(gp);
            gaps.push_back(std::move(e));
        }
        j["gaps"] = std::move(gaps);
        j["S_prime"] = place_set_json(br.S_prime);
        Json shifts = Json::array();
        for (const PerShiftBound& ps : br.per_shift) {
            Json e;
            e["b"] = ps.b;
            e["coeff_ratio_height"] = rat_str(ps.coeff_ratio_height);
            e["value"] = rat_str(ps.value);
            shifts.push_back(std::move(e));
        }
        j["per_shift"] = std::move(shifts);
    }
    j["final_bound"] = br.final_bound;
    return j;
}

Json witness_json(const Witness& w) {
    Json j;
    j["value"] = ratfunc_str(w.value);
    j["divisor"] = divisor_json(w.div);
    return j;
}

Json single_solutions_json(const std::vector<SingleSolution>& sols) {
    Json a = Json::array();
    for (const SingleSolution& s : sols) {
        Json e;
        e["n"] = s.n;
        e.update(witness_json(s.witness));
        a.push_back(std::move(e));
    }
    return a;
}

Json pair_solutions_json(const std::vector<PairSolution>& sols) {
    Json a = Json::array();
    for (const PairSolution& s : sols) {
        Json e;
        e["n"] = s.n;
        e["m"] = s.m;
        e.update(witness_json(s.witness));
        a.push_back(std::move(e));
    }
    return a;
}

Json window_json(const WindowReport& w, bool pair_mode) {
    Json j;
    j["lo"] = w.lo;
    j["hi"] = w.hi;
    j["count"] = w.hits.size();
    Json hits = Json::array();
    for (const WindowHit& h : w.hits) {
        Json e;
        e["n"] = h.n;
        if (pair_mode) e["m"] = h.m;
        hits.push_back(std::move(e));
    }
    j["hits"] = std::move(hits);
    return j;
}

Json input_json(const ProblemSpec& spec, const Problem& p) {
    Json j;
    Json coeffs = Json::array();
    for (const RatFunc& f : p.rec.coefficients()) coeffs.push_back(ratfunc_str(f));
    j["coefficients"] = std::move(coeffs);
    Json roots = Json::array();
    for (const RatFunc& a : p.rec.roots()) roots.push_back(ratfunc_str(a));
    j["roots"] = std::move(roots);
    // The echo is itself a valid problem description, so a report's "input"
    // can be fed back in and reproduces the identical report.
    Json s = Json::array();
    for (const Poly& b : p.S.finite()) s.push_back(poly_str(b));
    if (p.S.has_infinity()) s.push_back("inf");
    j["S"] = std::move(s);
    j["mode"] = spec.mode;
    if (spec.indices) j["indices"] = *spec.indices;
    if (spec.window) j["window"] = {spec.window->first, spec.window->second};
    return j;
}

Json report_head(const char* command, const ProblemSpec& spec, const Problem& p) {
    Json j;
    j["tool"] = "ffsunit";
    j["command"] = command;
    j["input"] = input_json(spec, p);
    return j;
}

} // namespace

Json run_bound(const ProblemSpec& spec, int threads) {
    Problem p = build_problem(spec);
    bool pair_mode = spec.mode == "pair";
    if (spec.mode == "verify") throw SpecError("bound requires mode single or pair");
    BoundReport br = pair_mode ? bound_pair(p.rec, p.S) : bound_single(p.rec, p.S);
    Json j = report_head("bound", spec, p);
    j["enlarged_S"] = place_set_json(br.enlarged_S);
    j["bound"] = bound_json(br);
    if (spec.window)
        j["window_scan"] = window_json(
            window_scan(p.rec, p.S, pair_mode, spec.window->first, spec.window->second, threads),
            pair_mode);
    return j;
}

Json run_solve(const ProblemSpec& spec, int threads) {
    Problem p = build_problem(spec);
    if (spec.mode == "verify") throw SpecError("solve requires mode single or pair");
    bool pair_mode = spec.mode == "pair";
    Json j = report_head("solve", spec, p);
    if (pair_mode) {
        SolvePairReport rep = solve_pair(p.rec, p.S, threads);
        j["enlarged_S"] = place_set_json(rep.bound.enlarged_S);
        j["bound"] = bound_json(rep.bound);
        Json sols;
        sols["enlarged"] = pair_solutions_json(rep.enlarged);
        sols["user"] = pair_solutions_json(rep.user);
        j["solutions"] = std::move(sols);
    } else {
        SolveSingleReport rep = solve_single(p.rec, p.S, threads);
        j["enlarged_S"] = place_set_json(rep.bound.enlarged_S);
        j["bound"] = bound_json(rep.bound);
        Json sols;
        sols["enlarged"] = single_solutions_json(rep.enlarged);
        sols["user"] = single_solutions_json(rep.user);
        j["solutions"] = std::move(sols);
    }
    if (spec.window)
        j["window_scan"] = window_json(
            window_scan(p.rec, p.S, pair_mode, spec.window->first, spec.window->second, threads),
            pair_mode);
    return j;
}

Json run_verify(const ProblemSpec& spec) {
    if (spec.mode != "verify") throw SpecError("verify requires mode verify");
    Problem p = build_problem(spec);
    VerifyReport rep = verify_sum(p.rec, p.S, *spec.indices);
    Json j = report_head("verify", spec, p);
    Json v;
    v["indices"] = rep.indices;
    v["value"] = ratfunc_str(rep.value);
    v["is_unit"] = rep.is_unit;
    v["is_unit_user"] = rep.is_unit_user;
    v["divisor"] = rep.witness ? divisor_json(rep.witness->div) : Json(nullptr);
    j["verify"] = std::move(v);
    return j;
}

Json run_height(const std::string& expr) {
    RatFunc f = parse_ratfunc(expr);
    Json j;
    j["tool"] = "ffsunit";
    j["command"] = "height";
    j["expression"] = expr;
    j["value"] = ratfunc_str(f);
    auto h = height(f);
    j["height"] = h ? Json(*h) : Json(nullptr);
    return j;
}

Json run_divisor(const std::string& expr) {
    RatFunc f = parse_ratfunc(expr);
    Json j;
    j["tool"] = "ffsunit";
    j["command"] = "divisor";
    j["expression"] = expr;
    j["value"] = ratfunc_str(f);
    auto [d, basis] = divisor(f);
    (void)basis;
    j["divisor"] = divisor_json(d);
    return j;
}

// --- human rendering ---------------------------------------------------------

namespace {

std::string place_set_line(const Json& s) {
    std::string out = "{";
    bool first = true;
    for (const Json& b : s.at("finite")) {
        if (!first) out += ", ";
        out += b.get<std::string>();
        first = false;
    }
    if (s.at("infinity").get<bool>()) {
        if (!first) out += ", ";
        out += "inf";
    }
    out += "}";
    out += " (" + std::to_string(s.at("place_count").get<long>()) + " places)";
    return out;
}

void divisor_lines(std::ostringstream& out, const Json& d, const std::string& indent) {
    for (const Json& e : d.at("finite"))
        out << indent << "ord at " << e.at("place").get<std::string>() << " = "
            << e.at("valuation").get<long>() << "\n";
    out << indent << "ord at inf = " << d.at("infinity").get<long>() << "\n";
}

void solutions_lines(std::ostringstream& out, const Json& sols, const char* label) {
    out << label << " (" << sols.size() << "):\n";
    for (const Json& e : sols) {
        out << "  n = " << e.at("n").get<long>();
        if (e.contains("m")) out << ", m = " << e.at("m").get<long>();
        out << ": " << e.at("value").get<std::string>() << "\n";
        divisor_lines(out, e.at("divisor"), "    ");
    }
}

} // namespace

std::string human_report(const Json& report) {
    std::ostringstream out;
    if (report.contains("error")) {
        const Json& e = report.at("error");
        out << "error (" << e.at("type").get<std::string>() << "): "
            << e.at("message").get<std::string>() << "\n";
        return out.str();
    }
    std::string cmd = report.at("command").get<std::string>();
    if (cmd == "height") {
        const Json& h = report.at("height");
        out << "value: " << report.at("value").get<std::string>() << "\n";
        out << "height: " << (h.is_null() ? std::string("inf") : std::to_string(h.get<long>()))
            << "\n";
        return out.str();
    }
    if (cmd == "divisor") {
        out << "value: " << report.at("value").get<std::string>() << "\n";
        out << "divisor:\n";
        divisor_lines(out, report.at("divisor"), "  ");
        return out.str();
    }
    if (report.contains("enlarged_S"))
        out << "enlarged S: " << place_set_line(report.at("enlarged_S")) << "\n";
    if (report.contains("bound")) {
        const Json& b = report.at("bound");
        out << "mode: " << b.at("mode").get<std::string>() << "\n";
        for (const auto& [name, v] : b.at("constants").items())
            out << "  " << name << " = " << v.get<std::string>() << "\n";
        if (b.contains("S_prime"))
            out << "  S' = " << place_set_line(b.at("S_prime")) << "\n";
        out << "final bound: " << b.at("final_bound").get<long>() << "\n";
    }
    if (report.contains("solutions")) {
        solutions_lines(out, report.at("solutions").at("enlarged"), "solutions (enlarged S)");
        solutions_lines(out, report.at("solutions").at("user"), "solutions (user S)");
    }
    if (report.contains("verify")) {
        const Json& v = report.at("verify");
        out << "value: " << v.at("value").get<std::string>() << "\n";
        out << "S-unit (enlarged): " << (v.at("is_unit").get<bool>() ? "yes" : "no") << "\n";
        out << "S-unit (user S): " << (v.at("is_unit_user").get<bool>() ? "yes" : "no") << "\n";
        if (!v.at("divisor").is_null()) {
            out << "divisor:\n";
            divisor_lines(out, v.at("divisor"), "  ");
        }
    }
    if (report.contains("window_scan")) {
        const Json& w = report.at("window_scan");
        out << "window [" << w.at("lo").get<long>() << ", " << w.at("hi").get<long>()
            << "]: " << w.at("count").get<long>() << " hits\n";
        for (const Json& h : w.at("hits")) {
            out << "  n = " << h.at("n").get<long>();
            if (h.contains("m")) out << ", m = " << h.at("m").get<long>();
            out << "\n";
        }
    }
    return out.str();
}

Json error_json(const std::string& type, const std::string& message) {
    Json e;
    e["type"] = type;
    e["message"] = message;
    Json j;
    j["error"] = std::move(e);
    return j;
}

std::pair<Json, int> classify_error(const std::exception& e) {
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
        Json j = error_json("parse", pe->what());
        j["error"]["expression"] = pe->expression;
        j["error"]["offset"] = pe->offset;
        return {j, 3};
    }
    if (dynamic_cast<const nlohmann::json::exception*>(&e))
        return {error_json("json", e.what()), 3};
    if (auto* he = dynamic_cast<const HypothesisError*>(&e)) {
        Json j = error_json("hypothesis", he->what());
        j["error"]["hypothesis"] = he->hypothesis;
        return {j, 2};
    }
    if (dynamic_cast<const SpecError*>(&e)) return {error_json("input", e.what()), 2};
    if (dynamic_cast<const DomainError*>(&e)) return {error_json("domain", e.what()), 2};
    return {error_json("internal", e.what()), 70};
}

} // namespace ffsunit
