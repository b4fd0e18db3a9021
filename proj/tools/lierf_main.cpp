#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lierf/parser.hpp"
#include "lierf/suites.hpp"

using namespace lierf;

int main(int argc, char** argv) {
    CLI::App app{"lierf: symbolic and numeric verification of a deformed field algebra"};
    std::string suite, config_path, expr;
    uint64_t seed = 0;
    int grid = 0, dim = 0, threads = 0;
    double du = 0, lambda = 0, c_phase = 0;
    std::string format, out;

    std::string names;
    for (const auto& n : kSuiteNames) names += (names.empty() ? "" : "|") + n;
    app.add_option("suite", suite, "one of " + names + ", or 'eval'")->required();
    app.add_option("expr", expr, "expression (eval only)");
    auto* oconfig = app.add_option("--config", config_path, "key=value config file (flags win)");
    auto* oseed = app.add_option("--seed", seed, "fixture seed");
    auto* ogrid = app.add_option("--grid", grid, "points per grid axis (even)");
    auto* odim = app.add_option("--dim", dim, "spacetime dimension (1..4)");
    auto* odu = app.add_option("--du", du, "grid spacing");
    auto* olambda = app.add_option("--lambda", lambda, "coupling");
    auto* ocphase = app.add_option("--c-phase", c_phase, "extra kurtosis phase theta");
    auto* oformat = app.add_option("--format", format, "text|csv|json")
                        ->check(CLI::IsMember({"text", "csv", "json"}));
    auto* oout = app.add_option("--out", out, "output path (default stdout)");
    auto* othreads = app.add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors
    }

    try {
        RunConfig cfg;
        if (oconfig->count()) cfg = load_config(config_path);
        if (oseed->count()) cfg.seed = seed;
        if (ogrid->count()) cfg.grid_n = grid;
        if (odim->count()) cfg.dim = dim;
        if (odu->count()) cfg.du = du;
        if (olambda->count()) cfg.lambda = lambda;
        if (ocphase->count()) cfg.c_phase = c_phase;
        if (oformat->count()) cfg.format = format;
        if (oout->count()) cfg.out = out;
        if (othreads->count()) cfg.threads = threads;
        if (const char* env = std::getenv("LIERF_THREADS"))
            cfg.threads = std::min(cfg.threads, std::max(1, std::atoi(env)));
        cfg.validate();

        if (suite == "eval") {
            if (expr.empty()) {
                std::cerr << "error: eval requires an expression argument\n";
                return 2;
            }
            try {
                ExprValue v = eval_expr(*parse_expr(expr));
                if (std::holds_alternative<OpPoly>(v))
                    std::cout << normal_order(std::get<OpPoly>(v)).str() << "\n";
                else
                    std::cout << std::get<Ket>(v).str() << "\n";
            } catch (const ParseError& e) {
                std::cerr << "syntax error at " << e.line << ":" << e.col << ": " << e.what();
                if (!e.expected.empty()) {
                    std::cerr << "; expected:";
                    for (const auto& t : e.expected) std::cerr << " " << t;
                }
                std::cerr << "\n";
                return 2;
            }
            return 0;
        }

        Report rep = run_suite(suite, cfg);
        std::string rendered = emit_table(rep, cfg.format);
        if (!cfg.out.empty()) {
            std::ofstream f(cfg.out);
            if (!f) {
                std::cerr << "error: cannot write " << cfg.out << "\n";
                return 2;
            }
            f << rendered;
        } else {
            std::cout << rendered;
        }
        return rep.pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
