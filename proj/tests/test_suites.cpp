#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "lierf/suites.hpp"

using namespace lierf;

TEST_CASE("fast suites pass with the default config") {
    RunConfig cfg;
    Report jac = run_suite("jacobi", cfg);
    CHECK(jac.pass());
    CHECK(jac.checks.size() == 52);  // 2 fixed + 50 seeded triples

    Report t1 = run_suite("table1", cfg);
    CHECK(t1.pass());
    CHECK(t1.checks.size() == 16);
    CHECK(!t1.preamble.empty());

    Report mult = run_suite("multiplicity", cfg);
    CHECK(mult.pass());
    CHECK(mult.checks.size() == 11);  // partitions of 1..4

    Report ker = run_suite("kernel", cfg);
    CHECK(ker.pass());

    Report cot = run_suite("cotangent", cfg);
    CHECK(cot.pass());

    CHECK_THROWS_AS(run_suite("bogus", cfg), std::invalid_argument);
}

TEST_CASE("reports are byte-stable for a fixed seed") {
    RunConfig cfg;
    Report a = run_suite("jacobi", cfg), b = run_suite("jacobi", cfg);
    CHECK(emit_table(a, "csv") == emit_table(b, "csv"));
    CHECK(report_json(a) == report_json(b));
}

TEST_CASE("json report round-trips") {
    RunConfig cfg;
    Report r = run_suite("table1", cfg);
    nlohmann::json j = nlohmann::json::parse(report_json(r));
    CHECK(j["suite"] == "table1");
    CHECK(j["pass"] == true);
    CHECK(j["seed"] == 1);
    CHECK(j["checks"].size() == r.checks.size());
    CHECK(j["parameters"]["grid"] == cfg.grid_n);
    CHECK(nlohmann::json::parse(report_json(r)) == j);
}

TEST_CASE("emit_table renders failures") {
    Report r{"demo", RunConfig{}, {{"bad-check", "p", 1.0, 1e-12, false}}, ""};
    CHECK_FALSE(r.pass());
    std::string text = emit_table(r, "text");
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(emit_table(r, "csv").find("false") != std::string::npos);
    CHECK_THROWS_AS(emit_table(r, "html"), std::invalid_argument);
}

TEST_CASE("config files") {
    std::string path = "/tmp/lierf_test_cfg.ini";
    {
        std::ofstream f(path);
        f << "# comment\n[grid]\ngrid = 16\ndu = 0.5\n\n[run]\nseed=7\nformat = csv  # trailing\n";
    }
    RunConfig cfg = load_config(path);
    CHECK(cfg.grid_n == 16);
    CHECK(cfg.du == 0.5);
    CHECK(cfg.seed == 7);
    CHECK(cfg.format == "csv");
    CHECK(cfg.lambda == 0.2);  // untouched default

    {
        std::ofstream f(path);
        f << "mystery = 1\n";
    }
    CHECK_THROWS_AS(load_config(path), std::invalid_argument);
    {
        std::ofstream f(path);
        f << "grid = lots\n";
    }
    CHECK_THROWS_AS(load_config(path), std::invalid_argument);
    {
        std::ofstream f(path);
        f << "grid = 33\n";
    }
    CHECK_THROWS_AS(load_config(path), std::invalid_argument);
    CHECK_THROWS_AS(load_config("/nonexistent/cfg"), std::invalid_argument);
    std::remove(path.c_str());

    RunConfig bad;
    bad.format = "html";
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = RunConfig{};
    bad.tol_psd = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("seed changes the seeded fixtures but not the verdict") {
    RunConfig cfg;
    cfg.seed = 99;
    Report r = run_suite("jacobi", cfg);
    CHECK(r.pass());
    RunConfig base;
    CHECK(emit_table(r, "csv") != emit_table(run_suite("jacobi", base), "csv"));
}
