#pragma once

#include <string>
#include <vector>

#include "lierf/kernels.hpp"

namespace lierf {

struct RunConfig {
    uint64_t seed = 1;
    int grid_n = 32;
    int dim = 2;          // 1+1 by default
    double du = 0.35;
    double lambda = 0.2;
    double c_phase = 0.0;  // extra kurtosis phase on top of the pinned three
    double tol_identity = 1e-12;
    double tol_psd = 1e-10;
    std::string format = "text";  // text | csv | json
    std::string out;              // empty = stdout
    int threads = 1;

    void validate() const;  // throws invalid_argument on bad values
};

// Flat key=value file; [section] headers are allowed and ignored for key
// lookup, '#' starts a comment. Unknown keys are errors. Command-line flags
// are applied after loading, so flags win.
RunConfig load_config(const std::string& path);

struct CheckResult {
    std::string check;
    std::string parameters;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    std::string suite;
    RunConfig cfg;
    std::vector<CheckResult> checks;
    std::string preamble;  // extra text-format block (e.g. the table1 grid)

    bool pass() const;
};

extern const std::vector<std::string> kSuiteNames;

// jacobi | table1 | multiplicity | recursion | kernel | moments | gram |
// cotangent; throws invalid_argument for unknown names.
Report run_suite(const std::string& name, const RunConfig& cfg);

std::string report_json(const Report& r);  // canonical: sorted keys, 2-space indent
std::string emit_table(const Report& r, const std::string& format);

}  // namespace lierf
