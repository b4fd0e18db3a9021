#include "lierf/suites.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace lierf {

namespace {

using nlohmann::json;

CheckResult bound_check(std::string name, std::string params, double residual, double tol) {
    return CheckResult{std::move(name), std::move(params), residual, tol, residual <= tol};
}

// negative controls must land ABOVE the tolerance
CheckResult exceed_check(std::string name, std::string params, double residual, double tol) {
    return CheckResult{std::move(name), std::move(params), residual, tol, residual > tol};
}

CheckResult exact_check(std::string name, std::string params, bool ok) {
    return CheckResult{std::move(name), std::move(params), ok ? 0.0 : 1.0, 0.0, ok};
}

std::vector<XiIndex> random_args(TestRand& rng, size_t n) {
    std::vector<XiIndex> v;
    for (size_t i = 0; i < n; ++i) v.push_back(random_index(rng));
    return v;
}

// ---- jacobi ----

Report suite_jacobi(const RunConfig& cfg) {
    Report r{"jacobi", cfg, {}, {}};
    XiIndex x = XiIndex::gen("X"), y = XiIndex::gen("Y"), z = XiIndex::gen("Z");
    r.checks.push_back(exact_check("jacobi-base", "X,Y,Z", check_jacobi(x, y, z).is_zero()));
    r.checks.push_back(exact_check("jacobi-degenerate", "X,X,X", check_jacobi(x, x, x).is_zero()));
    TestRand rng(cfg.seed);
    for (int i = 0; i < 50; ++i) {
        XiIndex a = random_index(rng), b = random_index(rng), c = random_index(rng);
        r.checks.push_back(exact_check("jacobi-seeded-" + std::to_string(i),
                                       a.str() + "," + b.str() + "," + c.str(),
                                       check_jacobi(a, b, c).is_zero()));
    }
    return r;
}

// ---- table1 ----

Report suite_table1(const RunConfig& cfg) {
    Report r{"table1", cfg, {}, {}};
    auto ip = [](std::vector<Name> a, std::vector<Name> l) {
        return Coefficient(IPSymbol(std::move(a), std::move(l)));
    };
    Coefficient free2 =
        ip({"Y1"}, {"X1"}) * ip({"Y2"}, {"X2"}) + ip({"Y1"}, {"X2"}) * ip({"Y2"}, {"X1"});
    Coefficient full2 = ip({"Y1", "Y2"}, {"X1", "X2"});
    Coefficient y_x12 = ip({"Y1"}, {"X1", "X2"});
    Coefficient y12_x = ip({"Y1", "Y2"}, {"X1"});
    Coefficient zero;
    std::array<std::array<Coefficient, 4>, 4> expect = {{
        {ip({"Y1"}, {"X1"}), y_x12, y_x12, zero},
        {y12_x, free2 + Coefficient(3) * full2, full2, free2 + Coefficient(2) * full2},
        {y12_x, full2, full2, zero},
        {zero, free2 + Coefficient(2) * full2, zero, free2 + Coefficient(2) * full2},
    }};
    auto got = table1();
    static const char* labels[4] = {"|Y1>_1", "a'a'|0>", "|xi(;Y1,Y2)>_1", "|Y1,Y2>_2"};
    std::ostringstream grid;
    for (int i = 0; i < 4; ++i) {
        grid << labels[i] << ":\n";
        for (int j = 0; j < 4; ++j) grid << "  [" << j << "] " << got[i][j].str() << "\n";
        for (int j = 0; j < 4; ++j) {
            r.checks.push_back(exact_check(
                "table1-" + std::to_string(i) + std::to_string(j),
                std::string(labels[i]) + " x col " + std::to_string(j), got[i][j] == expect[i][j]));
        }
    }
    r.preamble = grid.str();
    return r;
}

// ---- multiplicity ----

const std::vector<std::vector<int>>& partitions_of(int n) {
    static const std::vector<std::vector<std::vector<int>>> table = {
        {},
        {{1}},
        {{2}, {1, 1}},
        {{3}, {2, 1}, {1, 1, 1}},
        {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}},
    };
    return table[n];
}

std::string partition_str(const std::vector<int>& p) {
    std::string s = "{";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "}";
}

Report suite_multiplicity(const RunConfig& cfg) {
    Report r{"multiplicity", cfg, {}, {}};
    for (int n = 1; n <= 4; ++n) {
        std::vector<XiIndex> ys, xs;
        std::vector<Name> yn, xn;
        for (int i = 1; i <= n; ++i) {
            yn.push_back("Y" + std::to_string(i));
            xn.push_back("X" + std::to_string(i));
            ys.push_back(XiIndex::gen(yn.back()));
            xs.push_back(XiIndex::gen(xn.back()));
        }
        Coefficient inner = inner_recursive(ys, xs);
        for (const auto& part : partitions_of(n)) {
            Monomial mono;
            int at = 0;
            for (int block : part) {
                std::vector<Name> ba(yn.begin() + at, yn.begin() + at + block);
                std::vector<Name> bl(xn.begin() + at, xn.begin() + at + block);
                mono.push_back(IPSymbol(std::move(ba), std::move(bl)));
                at += block;
            }
            std::sort(mono.begin(), mono.end());
            bool ok = inner.coeff(mono) == GRat(multiplicity(part));
            r.checks.push_back(exact_check("multiplicity-n" + std::to_string(n),
                                           partition_str(part) + " -> " +
                                               std::to_string(multiplicity(part)),
                                           ok));
        }
    }
    return r;
}

// ---- recursion (+ the closed annihilator form) ----

bool closed_form_matches(int n) {
    // a_Y a'_X1..a'_Xn |0> = sum over non-empty subsets S of
    // (a'_xi(Y;S) + (Y;S)) applied to the remaining creators.
    std::vector<Name> pool = {"X1", "X2", "X3", "X4"};
    Word w{annihilator("Y")};
    for (int i = 0; i < n; ++i) w.push_back(creator(pool[i]));
    OpPoly no = normal_order(OpPoly::word(w));
    OpPoly applied;
    for (const auto& [ww, c] : no.terms()) {
        bool creators_only = true;
        for (const auto& op : ww)
            if (op.kind == DressedOp::Annihilator) creators_only = false;
        if (creators_only) applied.add(ww, c);
    }
    OpPoly expect;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<XiIndex> s{XiIndex::gen("Y")};
        std::vector<XiIndex> sub;
        Word rest;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i))
                sub.push_back(XiIndex::gen(pool[i]));
            else
                rest.push_back(creator(pool[i]));
        }
        expect += OpPoly::word(rest, Coefficient(ip_of(std::span(s), std::span(sub))));
        Word withcre{creator(xi_of(std::span(s), std::span(sub)))};
        withcre.insert(withcre.end(), rest.begin(), rest.end());
        expect += OpPoly::word(withcre);
    }
    return normal_order(applied) == normal_order(expect);
}

Report suite_recursion(const RunConfig& cfg) {
    Report r{"recursion", cfg, {}, {}};
    TestRand rng(cfg.seed);
    for (int i = 0; i < 20; ++i) {
        size_t n = 1 + rng.index(4);
        std::vector<XiIndex> bra = random_args(rng, n), ket = random_args(rng, n);
        bool ok = inner_recursive(bra, ket) == inner_bruteforce(ket_n(bra), ket_n(ket));
        r.checks.push_back(
            exact_check("recursion-vs-oracle-" + std::to_string(i), "n=" + std::to_string(n), ok));
    }
    for (int m = 0; m <= 4; ++m) {
        for (int n = 0; n <= 4; ++n) {
            if (m == n) continue;
            // dressed arguments at low levels, base generators once 4 is involved
            std::vector<XiIndex> bra, ket;
            if (std::max(m, n) <= 3) {
                bra = random_args(rng, m);
                ket = random_args(rng, n);
            } else {
                for (int i = 0; i < m; ++i) bra.push_back(XiIndex::gen("Y" + std::to_string(i)));
                for (int i = 0; i < n; ++i) ket.push_back(XiIndex::gen("X" + std::to_string(i)));
            }
            bool ok = inner_bruteforce(ket_n(bra), ket_n(ket)).is_zero();
            r.checks.push_back(exact_check(
                "cross-level-zero", "m=" + std::to_string(m) + " n=" + std::to_string(n), ok));
        }
    }
    for (int n = 1; n <= 4; ++n)
        r.checks.push_back(
            exact_check("annihilator-closed-form", "n=" + std::to_string(n), closed_form_matches(n)));
    return r;
}

// ---- kernel ----

std::vector<double> kernel_phases(const RunConfig& cfg) {
    std::vector<double> phases = {0.0, std::numbers::pi / 2, std::numbers::pi / 4};
    if (cfg.c_phase != 0.0) phases.push_back(cfg.c_phase);
    return phases;
}

Report suite_kernel(const RunConfig& cfg) {
    Report r{"kernel", cfg, {}, {}};
    MomentumGrid grid(cfg.dim, cfg.grid_n, cfg.du);
    for (double phi : kernel_phases(cfg)) {
        KernelSpec k = make_symmetric_kernel(grid, phi, 0.7, 2.0, cfg.lambda);
        std::string tag = "phi=" + std::to_string(phi);
        SymmetryCheck sym = kernel_symmetry_check(k);
        r.checks.push_back(bound_check("symmetry-residual", tag, sym.residual, cfg.tol_identity));
        r.checks.push_back(bound_check("symmetry-phase-recovery", tag,
                                       std::abs(sym.c - std::polar(1.0, phi)), 1e-10));
        r.checks.push_back(bound_check("commutator-residual", tag,
                                       commutator_residual(k, 6, 4, cfg.seed), cfg.tol_identity));
        r.checks.push_back(exact_check("classify-random-field", tag,
                                       spectrum_support_classify(k) == SupportClass::RandomField));
    }
    KernelSpec broken = make_broken_kernel(grid, 2.0, cfg.lambda);
    r.checks.push_back(exceed_check("broken-symmetry-residual (negative control)", "broken",
                                    kernel_symmetry_check(broken).residual, 1e-3));
    r.checks.push_back(exceed_check("broken-commutator-residual (negative control)", "broken",
                                    commutator_residual(broken, 6, 4, cfg.seed), 1e-3));
    KernelSpec cone = make_forward_cone_kernel(grid, 1.0, cfg.lambda);
    r.checks.push_back(exact_check("classify-spectrum-condition", "forward-cone",
                                   spectrum_support_classify(cone) ==
                                       SupportClass::SpectrumCondition));
    r.checks.push_back(exact_check("cone-is-not-random-field", "forward-cone",
                                   !kernel_symmetry_check(cone).pass));
    return r;
}

// ---- moments ----

Report suite_moments(const RunConfig& cfg) {
    Report r{"moments", cfg, {}, {}};
    MomentumGrid grid(cfg.dim, cfg.grid_n, cfg.du);
    TestRand rng(cfg.seed);
    GimelField fraw = real_test_field(grid, rng);

    for (double phi : kernel_phases(cfg)) {
        KernelSpec k = make_symmetric_kernel(grid, phi, 0.7, 2.0, cfg.lambda);
        FieldBinding b(k, {{"f", gimel_transform(fraw, k)}});
        double m2 = moment("f", 2, b);
        double m4 = moment("f", 4, b);
        double ip4 = b.ip_value(IPSymbol({"f", "f"}, {"f", "f"})).real();
        double expect = (4.0 + 2.0 * std::cos(phi)) * ip4 + 3.0 * m2 * m2;
        std::string tag = "phi=" + std::to_string(phi);
        r.checks.push_back(
            bound_check("fourth-moment-identity", tag,
                        std::abs(m4 - expect) / std::max(std::abs(expect), 1e-300), 1e-10));
        r.checks.push_back(exact_check("connected-part-nonnegative", tag,
                                       (4.0 + 2.0 * std::cos(phi)) * ip4 >= 0));
    }

    KernelSpec k0 = make_symmetric_kernel(grid, 0.0, 0.7, 2.0, 0.0);
    FieldBinding b0(k0, {{"f", gimel_transform(fraw, k0)}});
    double w2 = moment("f", 2, b0);
    r.checks.push_back(bound_check("free-field-m4", "lambda=0",
                                   std::abs(moment("f", 4, b0) - 3 * w2 * w2) / (3 * w2 * w2),
                                   1e-10));
    r.checks.push_back(bound_check("free-field-m6", "lambda=0",
                                   std::abs(moment("f", 6, b0) - 15 * w2 * w2 * w2) /
                                       (15 * w2 * w2 * w2),
                                   1e-10));

    // sweeping the phase moves the connected coefficient across [2, 6]
    double lo = 1e300, hi = -1e300, m2_min = 1e300, m2_max = -1e300;
    for (int s = 0; s <= 8; ++s) {
        double phi = std::numbers::pi * s / 8.0;
        KernelSpec k = make_symmetric_kernel(grid, phi, 0.7, 2.0, cfg.lambda);
        FieldBinding b(k, {{"f", gimel_transform(fraw, k)}});
        double m2 = moment("f", 2, b);
        double ip4 = b.ip_value(IPSymbol({"f", "f"}, {"f", "f"})).real();
        double coef = (moment("f", 4, b) - 3.0 * m2 * m2) / ip4;
        lo = std::min(lo, coef);
        hi = std::max(hi, coef);
        m2_min = std::min(m2_min, m2);
        m2_max = std::max(m2_max, m2);
    }
    r.checks.push_back(bound_check("phase-sweep-max", "expect 6", std::abs(hi - 6.0), 1e-8));
    r.checks.push_back(bound_check("phase-sweep-min", "expect 2", std::abs(lo - 2.0), 1e-8));
    r.checks.push_back(
        bound_check("m2-phase-invariant", "sweep", (m2_max - m2_min) / m2_max, 1e-12));
    return r;
}

// ---- gram ----

Report suite_gram(const RunConfig& cfg) {
    Report r{"gram", cfg, {}, {}};
    MomentumGrid grid(2, 16, 0.5);  // small grid: positivity is grid-size independent
    TestRand rng(cfg.seed);
    const double phases[3] = {0.0, std::numbers::pi / 4, std::numbers::pi / 2};
    for (int iter = 0; iter < 30; ++iter) {
        KernelSpec k = make_symmetric_kernel(grid, phases[iter % 3], 0.7, 2.0, cfg.lambda);
        FieldBinding b(k, {});
        std::vector<Name> names = {"f1", "f2", "f3"};
        for (const Name& n : names) b.fields[n] = gimel_transform(random_field(grid, rng), k);
        size_t count = 3 + rng.index(10);  // up to 12
        std::vector<Ket> kets;
        for (size_t i = 0; i < count; ++i) {
            size_t lvl = 1 + rng.index(3);
            std::vector<XiIndex> args;
            for (size_t j = 0; j < lvl; ++j)
                args.push_back(XiIndex::gen(names[rng.index(names.size())]));
            kets.push_back(ket_n(args));
        }
        PsdResult p = psd_check(gram_matrix(kets, b), cfg.tol_psd);
        double residual = std::max(0.0, -p.min_eigenvalue) /
                          std::max(p.max_abs_eigenvalue, 1e-300);
        r.checks.push_back(bound_check("gram-psd-" + std::to_string(iter),
                                       "size=" + std::to_string(count) +
                                           " phi=" + std::to_string(phases[iter % 3]),
                                       residual, cfg.tol_psd));
    }
    return r;
}

// ---- cotangent ----

Cplx cotangent_poly_ip(const CotangentKernelSpec& ck, int deg, int half) {
    CotangentFn f = [deg](std::span<const double> u, std::span<const double> p) {
        double fu = std::exp(-(u[0] * u[0] + u[1] * u[1]) / 4.0);
        double vp = p[0] + 0.3 * p[1];
        double r = fu;
        for (int i = 0; i < deg; ++i) r *= vp;
        return Cplx(r, 0);
    };
    return cotangent_ip(f, f, ck, half);
}

Report suite_cotangent(const RunConfig& cfg) {
    Report r{"cotangent", cfg, {}, {}};
    MomentumGrid ug(2, 8, 0.7);
    CotangentKernelSpec gauss =
        make_cotangent_kernel(CotangentKernelSpec::Gaussian, 1.0, 0.0, ug, 0.5, cfg.lambda);
    CotangentKernelSpec pl =
        make_cotangent_kernel(CotangentKernelSpec::PowerLaw, 1.0, 5.0, ug, 0.5, cfg.lambda);

    std::array<double, 2> u_on = {2.1, 0.0}, u_off = {0.7, 0.0};
    std::array<double, 2> p_fwd = {1.0, 0.3}, p_back = {-1.0, 0.3};
    r.checks.push_back(exact_check("gaussian-support-theta", "u off mass support / p backward",
                                   gauss.gval(u_off, p_fwd) == 0.0 &&
                                       gauss.gval(u_on, p_back) == 0.0 &&
                                       gauss.gval(u_on, p_fwd) > 0.0));

    auto growth = [&](const CotangentKernelSpec& ck, int deg) {
        std::vector<double> vals;
        for (int half : {4, 8, 16, 32}) vals.push_back(cotangent_poly_ip(ck, deg, half).real());
        return vals;
    };
    auto last_increment = [](const std::vector<double>& v) {
        return (v[3] - v[2]) / std::max(std::abs(v[3]), 1e-300);
    };
    for (int deg : {0, 2, 4}) {
        std::vector<double> v = growth(gauss, deg);
        r.checks.push_back(exact_check("gaussian-finite", "p-degree " + std::to_string(deg),
                                       !divergent_p_growth(v)));
    }
    for (int deg : {0, 2}) {
        std::vector<double> v = growth(pl, deg);
        r.checks.push_back(exact_check("power-law-finite", "r=5 p-degree " + std::to_string(deg),
                                       !divergent_p_growth(v)));
    }
    std::vector<double> v4 = growth(pl, 4);
    CheckResult div = exceed_check("power-law-divergent (growth across 3 doublings)",
                                   "r=5 p-degree 4", last_increment(v4), 1e-3);
    div.pass = div.pass && divergent_p_growth(v4);
    r.checks.push_back(div);
    return r;
}

}  // namespace

void RunConfig::validate() const {
    if (grid_n < 2 || grid_n % 2 != 0) throw std::invalid_argument("config: grid must be even and >= 2");
    if (dim < 1 || dim > 4) throw std::invalid_argument("config: dim must be 1..4");
    if (du <= 0) throw std::invalid_argument("config: du must be > 0");
    if (tol_identity <= 0 || tol_psd <= 0) throw std::invalid_argument("config: tolerances must be > 0");
    if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
    if (format != "text" && format != "csv" && format != "json")
        throw std::invalid_argument("config: format must be text, csv or json");
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    RunConfig cfg;
    std::string line;
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r");
        size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line.substr(0, line.find('#')));
        if (s.empty()) continue;
        if (s.front() == '[' && s.back() == ']') continue;  // sections only group keys
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = trim(s.substr(0, eq)), val = trim(s.substr(eq + 1));
        try {
            if (key == "seed") cfg.seed = std::stoull(val);
            else if (key == "grid") cfg.grid_n = std::stoi(val);
            else if (key == "dim") cfg.dim = std::stoi(val);
            else if (key == "du") cfg.du = std::stod(val);
            else if (key == "lambda") cfg.lambda = std::stod(val);
            else if (key == "c_phase") cfg.c_phase = std::stod(val);
            else if (key == "tol_identity") cfg.tol_identity = std::stod(val);
            else if (key == "tol_psd") cfg.tol_psd = std::stod(val);
            else if (key == "format") cfg.format = val;
            else if (key == "out") cfg.out = val;
            else if (key == "threads") cfg.threads = std::stoi(val);
            else
                throw std::invalid_argument("config: unknown key '" + key + "' on line " +
                                            std::to_string(lineno));
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("config: bad value for '" + key + "' on line " +
                                        std::to_string(lineno));
        }
    }
    cfg.validate();
    return cfg;
}

bool Report::pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

const std::vector<std::string> kSuiteNames = {"jacobi", "table1",  "multiplicity", "recursion",
                                              "kernel", "moments", "gram",         "cotangent"};

Report run_suite(const std::string& name, const RunConfig& cfg) {
    cfg.validate();
    set_max_threads(cfg.threads);
    if (name == "jacobi") return suite_jacobi(cfg);
    if (name == "table1") return suite_table1(cfg);
    if (name == "multiplicity") return suite_multiplicity(cfg);
    if (name == "recursion") return suite_recursion(cfg);
    if (name == "kernel") return suite_kernel(cfg);
    if (name == "moments") return suite_moments(cfg);
    if (name == "gram") return suite_gram(cfg);
    if (name == "cotangent") return suite_cotangent(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

std::string report_json(const Report& r) {
    json j;
    j["suite"] = r.suite;
    j["pass"] = r.pass();
    j["seed"] = r.cfg.seed;
    j["parameters"] = {{"grid", r.cfg.grid_n},
                       {"dim", r.cfg.dim},
                       {"du", r.cfg.du},
                       {"lambda", r.cfg.lambda},
                       {"c_phase", r.cfg.c_phase},
                       {"tol_identity", r.cfg.tol_identity},
                       {"tol_psd", r.cfg.tol_psd},
                       {"threads", r.cfg.threads},
                       {"hbar", 1}};
    json checks = json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"check", c.check},
                          {"parameters", c.parameters},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

std::string emit_table(const Report& r, const std::string& format) {
    if (format == "json") return report_json(r);
    std::ostringstream os;
    if (format == "csv") {
        os << "check,parameters,residual,tolerance,pass\n";
        auto quote = [](const std::string& s) {
            std::string q = "\"";
            for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        };
        char buf[64];
        for (const CheckResult& c : r.checks) {
            std::snprintf(buf, sizeof buf, "%.12e,%.12e", c.residual, c.tolerance);
            os << quote(c.check) << "," << quote(c.parameters) << "," << buf << ","
               << (c.pass ? "true" : "false") << "\n";
        }
        return os.str();
    }
    if (format != "text") throw std::invalid_argument("emit_table: unknown format " + format);
    os << "suite " << r.suite << "  (seed " << r.cfg.seed << ")\n";
    if (!r.preamble.empty()) os << r.preamble;
    char buf[128];
    for (const CheckResult& c : r.checks) {
        std::snprintf(buf, sizeof buf, "%-5s %-44s %12.4e / %8.1e", c.pass ? "ok" : "FAIL",
                      c.check.c_str(), c.residual, c.tolerance);
        os << buf << "  " << c.parameters << "\n";
    }
    os << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks)\n";
    return os.str();
}

}  // namespace lierf
