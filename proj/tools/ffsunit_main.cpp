#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ffsunit/cli.hpp"
#include "ffsunit/errors.hpp"

namespace {

ffsunit::ProblemSpec read_spec(const std::string& path) {
    if (path == "-") return ffsunit::load_spec(std::cin);
    std::ifstream in(path);
    if (!in) throw ffsunit::SpecError("cannot open file: " + path);
    return ffsunit::load_spec(in);
}

void emit(const ffsunit::Json& report, bool as_json) {
    if (as_json) std::cout << report.dump(2) << "\n";
    else std::cout << ffsunit::human_report(report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact S-unit solver for split linear recurrences over Q(x)"};
    app.require_subcommand(1);
    bool as_json = false;
    int threads = 1;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_option("--threads", threads, "worker threads for enumeration")
        ->check(CLI::PositiveNumber);

    std::string spec_path;
    std::string expr;
    // Let --json / --threads appear after the subcommand as well.
    app.fallthrough();
    CLI::App* cmd_bound = app.add_subcommand("bound", "compute the index bound");
    cmd_bound->add_option("spec", spec_path, "problem JSON file ('-' for stdin)")->required();
    CLI::App* cmd_solve =
        app.add_subcommand("solve", "compute the bound and enumerate all solutions");
    cmd_solve->add_option("spec", spec_path, "problem JSON file ('-' for stdin)")->required();
    CLI::App* cmd_verify = app.add_subcommand("verify", "check one sum of terms");
    cmd_verify->add_option("spec", spec_path, "problem JSON file ('-' for stdin)")->required();
    CLI::App* cmd_height = app.add_subcommand("height", "height of a rational function");
    cmd_height->add_option("expr", expr, "expression in x")->required();
    CLI::App* cmd_divisor = app.add_subcommand("divisor", "divisor of a rational function");
    cmd_divisor->add_option("expr", expr, "expression in x")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage problems (unknown subcommand, missing arguments) exit 64.
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 64;
    }

    try {
        if (cmd_bound->parsed()) emit(ffsunit::run_bound(read_spec(spec_path), threads), as_json);
        else if (cmd_solve->parsed()) emit(ffsunit::run_solve(read_spec(spec_path), threads), as_json);
        else if (cmd_verify->parsed()) emit(ffsunit::run_verify(read_spec(spec_path)), as_json);
        else if (cmd_height->parsed()) emit(ffsunit::run_height(expr), as_json);
        else if (cmd_divisor->parsed()) emit(ffsunit::run_divisor(expr), as_json);
        return 0;
    } catch (const std::exception& e) {
        auto [report, code] = ffsunit::classify_error(e);
        if (as_json) std::cout << report.dump(2) << "\n";
        else std::cerr << ffsunit::human_report(report);
        return code;
    }
}
