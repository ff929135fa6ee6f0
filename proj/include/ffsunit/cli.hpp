#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffsunit/solver.hpp"

namespace ffsunit {

using Json = nlohmann::ordered_json;

// A problem description as read from a JSON file:
//   {
//     "coefficients": ["x", "-x - 1"],
//     "roots":        ["x + 1", "x"],
//     "S":            ["x^2 + x", "inf"],
//     "mode":         "single" | "pair" | "verify",
//     "indices":      [2, 1],          // verify mode only
//     "window":       [5, 8]           // optional extra scan for bound/solve
//   }
// Finite places are expressions; the token "inf" adds the infinite place.
struct ProblemSpec {
    std::vector<std::string> coefficients;
    std::vector<std::string> roots;
    std::vector<std::string> s_places;
    bool s_infinity = false;
    std::string mode;
    std::optional<std::vector<long>> indices;
    std::optional<std::pair<long, long>> window;
};

// Parse and structurally validate a problem description.  Throws SpecError
// for structural problems; JSON syntax errors propagate as
// nlohmann::json::exception.
ProblemSpec load_spec(std::istream& in);
ProblemSpec load_spec_string(const std::string& text);

// The compiled problem: parsed expressions, validated recurrence, user set.
struct Problem {
    Recurrence rec;
    PlaceSet S;
};

Problem build_problem(const ProblemSpec& spec);

// Machine-readable reports.  All numbers are exact: integers or "p/q"
// strings; key order is fixed, so equal inputs give byte-identical output.
Json run_bound(const ProblemSpec& spec, int threads);
Json run_solve(const ProblemSpec& spec, int threads);
Json run_verify(const ProblemSpec& spec);

// Ad-hoc expression queries.
Json run_height(const std::string& expr);
Json run_divisor(const std::string& expr);

// Render a report for humans (one value per line, exact numbers).
std::string human_report(const Json& report);

// Error-object JSON for the CLI: {"error": {"type": ..., ...}}.
Json error_json(const std::string& type, const std::string& message);

// Map an exception to (error object, exit code).  Exit codes: 2 hypothesis or
// input-validation failure, 3 syntax error (expression or JSON).
std::pair<Json, int> classify_error(const std::exception& e);

} // namespace ffsunit
