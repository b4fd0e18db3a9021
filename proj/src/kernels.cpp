#include "lierf/kernels.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace lierf {

namespace {

int g_max_threads = 1;

// Deterministic chunked reduction: each output slot is computed by exactly
// one worker, so results are bit-stable at any thread count.
template <typename F>
void parallel_for(size_t count, F body) {
    int t = g_max_threads;
    if (t <= 1 || count < 2048) {
        body(size_t(0), count);
        return;
    }
    size_t chunk = (count + t - 1) / size_t(t);
    std::vector<std::thread> workers;
    for (size_t lo = 0; lo < count; lo += chunk) {
        size_t hi = std::min(count, lo + chunk);
        workers.emplace_back(body, lo, hi);
    }
    for (auto& w : workers) w.join();
}

double mdot(std::span<const double> a, std::span<const double> b) {
    double s = a[0] * b[0];
    for (size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
    return s;
}

double theta(double x) { return x > 0 ? 1.0 : 0.0; }

std::vector<Cplx> conj_all(const std::vector<Cplx>& a) {
    std::vector<Cplx> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::conj(a[i]);
    return r;
}

// out(t) = sum_u a(u) b(t-u), periodic.
std::vector<Cplx> convolve(const MomentumGrid& g, const std::vector<Cplx>& a,
                           const std::vector<Cplx>& b) {
    size_t sz = g.size();
    std::vector<Cplx> out(sz);
    parallel_for(sz, [&](size_t lo, size_t hi) {
        for (size_t t = lo; t < hi; ++t) {
            Cplx s(0, 0);
            for (size_t u = 0; u < sz; ++u) s += a[u] * b[g.sub(t, u)];
            out[t] = s;
        }
    });
    return out;
}

double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

void set_max_threads(int n) { g_max_threads = n < 1 ? 1 : n; }
int max_threads() { return g_max_threads; }

MomentumGrid::MomentumGrid(int dim, int points, double spacing) : d(dim), n(points), du(spacing) {
    if (d < 1 || n < 2 || n % 2 != 0 || du <= 0)
        throw std::invalid_argument("MomentumGrid: need d >= 1, even n >= 2, du > 0");
}

size_t MomentumGrid::size() const {
    size_t s = 1;
    for (int i = 0; i < d; ++i) s *= size_t(n);
    return s;
}

std::vector<int> MomentumGrid::coords(size_t idx) const {
    std::vector<int> c(d);
    for (int i = d - 1; i >= 0; --i) {
        c[i] = int(idx % size_t(n));
        idx /= size_t(n);
    }
    return c;
}

size_t MomentumGrid::flat(std::span<const int> c) const {
    size_t idx = 0;
    for (int i = 0; i < d; ++i) idx = idx * size_t(n) + size_t(((c[i] % n) + n) % n);
    return idx;
}

size_t MomentumGrid::add(size_t a, size_t b) const {
    size_t idx = 0, base = 1;
    for (int i = 0; i < d; ++i) base *= size_t(n);
    for (int i = 0; i < d; ++i) {
        base /= size_t(n);
        size_t ka = (a / base) % size_t(n), kb = (b / base) % size_t(n);
        idx = idx * size_t(n) + (ka + kb) % size_t(n);
    }
    return idx;
}

size_t MomentumGrid::sub(size_t a, size_t b) const {
    size_t idx = 0, base = 1;
    for (int i = 0; i < d; ++i) base *= size_t(n);
    for (int i = 0; i < d; ++i) {
        base /= size_t(n);
        size_t ka = (a / base) % size_t(n), kb = (b / base) % size_t(n);
        idx = idx * size_t(n) + (ka + size_t(n) - kb) % size_t(n);
    }
    return idx;
}

size_t MomentumGrid::neg(size_t a) const {
    size_t idx = 0, base = 1;
    for (int i = 0; i < d; ++i) base *= size_t(n);
    for (int i = 0; i < d; ++i) {
        base /= size_t(n);
        size_t ka = (a / base) % size_t(n);
        idx = idx * size_t(n) + (size_t(n) - ka) % size_t(n);
    }
    return idx;
}

std::vector<double> MomentumGrid::phys(size_t idx) const {
    std::vector<int> c = coords(idx);
    std::vector<double> p(d);
    for (int i = 0; i < d; ++i) p[i] = signed_coord(c[i]) * du;
    return p;
}

GimelField GimelField::conjugate_reflect() const {
    GimelField r(grid);
    for (size_t i = 0; i < v.size(); ++i) r.v[grid.neg(i)] = std::conj(v[i]);
    return r;
}

KernelSpec make_kernel(MomentumGrid grid, std::string label, double lambda,
                       const std::function<Cplx(std::span<const double>)>& fn) {
    KernelSpec k;
    k.grid = grid;
    k.lambda = lambda;
    k.label = std::move(label);
    k.g.resize(grid.size());
    for (size_t i = 0; i < k.g.size(); ++i) {
        std::vector<double> u = grid.phys(i);
        k.g[i] = fn(u);
    }
    return k;
}

namespace {

double envelope(const MomentumGrid& g, const std::vector<int>& c, double width) {
    double e = 1.0;
    for (int i = 0; i < g.d; ++i) {
        double s = std::sin(std::numbers::pi * c[i] / g.n);
        e *= std::exp(-width * s * s);
    }
    return e;
}

}  // namespace

KernelSpec make_symmetric_kernel(MomentumGrid grid, double phi, double alpha, double width,
                                 double lambda) {
    KernelSpec k;
    k.grid = grid;
    k.lambda = lambda;
    k.label = "symmetric(phi=" + std::to_string(phi) + ")";
    k.c_declared = std::polar(1.0, phi);
    k.g.resize(grid.size());
    for (size_t i = 0; i < k.g.size(); ++i) {
        std::vector<int> c = grid.coords(i);
        double odd = 0.0;
        for (int a = 0; a < grid.d; ++a) odd += std::sin(2.0 * std::numbers::pi * c[a] / grid.n);
        k.g[i] = std::polar(envelope(grid, c, width), 0.5 * phi + alpha * odd);
    }
    return k;
}

KernelSpec make_broken_kernel(MomentumGrid grid, double width, double lambda) {
    KernelSpec k;
    k.grid = grid;
    k.lambda = lambda;
    k.label = "broken";
    k.g.resize(grid.size());
    for (size_t i = 0; i < k.g.size(); ++i) {
        std::vector<int> c = grid.coords(i);
        double bump = grid.signed_coord(c[0]) > 0 ? 1.5 : 1.0;  // one-sided
        k.g[i] = Cplx(envelope(grid, c, width) * bump, 0);
    }
    return k;
}

KernelSpec make_forward_cone_kernel(MomentumGrid grid, double width, double lambda) {
    KernelSpec k;
    k.grid = grid;
    k.lambda = lambda;
    k.label = "forward-cone";
    k.g.resize(grid.size());
    for (size_t i = 0; i < k.g.size(); ++i) {
        std::vector<double> u = grid.phys(i);
        bool cone = u[0] >= 0 && mdot(u, u) >= 0;  // closed forward cone, (+,-,-,-)
        k.g[i] = cone ? Cplx(envelope(grid, grid.coords(i), width), 0) : Cplx(0, 0);
    }
    return k;
}

GimelField gimel_transform(const GimelField& f, const KernelSpec& k) {
    if (f.grid != k.grid) throw std::invalid_argument("gimel_transform: grid mismatch");
    GimelField h(f.grid);
    for (size_t i = 0; i < h.v.size(); ++i) h.v[i] = k.g[i] * f.v[i];
    return h;
}

GimelField eval_xi(const GimelField& f, const GimelField& g, double lambda) {
    if (f.grid != g.grid) throw std::invalid_argument("eval_xi: grid mismatch");
    const MomentumGrid& grid = f.grid;
    double meas = lambda * ipow(grid.du, grid.d);
    GimelField out(grid);
    size_t sz = grid.size();
    parallel_for(sz, [&](size_t lo, size_t hi) {
        for (size_t s = lo; s < hi; ++s) {
            Cplx acc(0, 0);
            for (size_t u = 0; u < sz; ++u) acc += std::conj(f.v[u]) * g.v[grid.add(u, s)];
            out.v[s] = meas * acc;
        }
    });
    return out;
}

Cplx eval_ip(std::span<const GimelField> anti, std::span<const GimelField> lin, double lambda) {
    if (anti.empty() || lin.empty())
        throw std::invalid_argument("eval_ip: both slots must be non-empty");
    const MomentumGrid& grid = anti[0].grid;
    for (const auto& f : anti)
        if (f.grid != grid) throw std::invalid_argument("eval_ip: grid mismatch");
    for (const auto& f : lin)
        if (f.grid != grid) throw std::invalid_argument("eval_ip: grid mismatch");

    // A(t) = sum over anti momenta summing to t of prod conj h_i;
    // B(t) likewise for lin; the conservation constraint is A.B.
    std::vector<Cplx> a = conj_all(anti[0].v);
    for (size_t i = 1; i < anti.size(); ++i) a = convolve(grid, a, conj_all(anti[i].v));
    std::vector<Cplx> b = lin[0].v;
    for (size_t j = 1; j < lin.size(); ++j) b = convolve(grid, b, lin[j].v);

    Cplx s(0, 0);
    for (size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
    int arity = int(anti.size() + lin.size());
    double w = ipow(lambda, arity - 2) * ipow(ipow(grid.du, grid.d), arity - 1);
    return w * s;
}

SymmetryCheck kernel_symmetry_check(const KernelSpec& k, double tol) {
    double scale = 0.0;
    for (const Cplx& v : k.g) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) throw std::domain_error("kernel_symmetry_check: degenerate kernel");

    // least squares for G(v) = c G*(-v)
    Cplx num(0, 0);
    double den = 0.0;
    for (size_t i = 0; i < k.g.size(); ++i) {
        Cplx m = k.g[k.grid.neg(i)];
        num += m * k.g[i];
        den += std::norm(m);
    }
    SymmetryCheck r;
    r.c = num / den;
    for (size_t i = 0; i < k.g.size(); ++i)
        r.residual = std::max(r.residual, std::abs(k.g[i] - r.c * std::conj(k.g[k.grid.neg(i)])));
    r.residual /= scale;
    r.pass = r.residual <= tol && std::abs(std::abs(r.c) - 1.0) <= tol;
    return r;
}

double commutator_residual(const KernelSpec& k, int s_samples, int x_samples, uint64_t seed) {
    TestRand rng(seed);
    const MomentumGrid& g = k.grid;
    const int half = g.n / 2;
    double worst = 0.0;

    // enumerate vm = (z-s)/2 over the full signed range; vp = vm + s must
    // stay on the grid too, which keeps z -> -z inside the sample set.
    std::vector<int> vm(g.d), vp(g.d);
    for (int si = 0; si < s_samples; ++si) {
        std::vector<int> s(g.d);
        for (int i = 0; i < g.d; ++i) s[i] = int(rng.index(7)) - 3;

        std::vector<Cplx> w;
        std::vector<std::vector<double>> z;
        std::function<void(int)> walk = [&](int axis) {
            if (axis == g.d) {
                Cplx term = std::conj(k.g[g.flat(vm)]) * k.g[g.flat(vp)];
                std::vector<double> zp(g.d);
                for (int i = 0; i < g.d; ++i) zp[i] = (vm[i] + vp[i]) * g.du;
                w.push_back(term);
                z.push_back(std::move(zp));
                return;
            }
            for (int c = -(half - 1); c <= half - 1; ++c) {
                vm[axis] = c;
                vp[axis] = c + s[axis];
                if (std::abs(vp[axis]) > half - 1) continue;
                walk(axis + 1);
            }
        };
        walk(0);
        if (w.empty()) continue;

        double sum_abs = 0.0, max_abs = 0.0;
        for (const Cplx& t : w) {
            sum_abs += std::abs(t);
            max_abs = std::max(max_abs, std::abs(t));
        }
        if (max_abs == 0.0) continue;

        // direct z -> -z defect: reflect (vm, vp) -> (-vp, -vm)
        size_t idx = 0;
        std::function<void(int)> walk2 = [&](int axis) {
            if (axis == g.d) {
                std::vector<int> rm(g.d), rp(g.d);
                for (int i = 0; i < g.d; ++i) {
                    rm[i] = -vp[i];
                    rp[i] = -vm[i];
                }
                Cplx refl = std::conj(k.g[g.flat(rm)]) * k.g[g.flat(rp)];
                worst = std::max(worst, std::abs(w[idx] - refl) / max_abs);
                ++idx;
                return;
            }
            for (int c = -(half - 1); c <= half - 1; ++c) {
                vm[axis] = c;
                vp[axis] = c + s[axis];
                if (std::abs(vp[axis]) > half - 1) continue;
                walk2(axis + 1);
            }
        };
        walk2(0);

        for (int xi = 0; xi < x_samples; ++xi) {
            std::vector<double> x(g.d);
            for (int i = 0; i < g.d; ++i) x[i] = rng.uniform(-2.0, 2.0);
            Cplx acc(0, 0);
            for (size_t t = 0; t < w.size(); ++t) {
                double ph = 0.0;
                for (int i = 0; i < g.d; ++i) ph += x[i] * z[t][i];
                acc += w[t] * Cplx(0, 2.0 * std::sin(ph));  // e^{ixz} - e^{-ixz}
            }
            worst = std::max(worst, std::abs(acc) / sum_abs);
        }
    }
    return worst;
}

SupportClass spectrum_support_classify(const KernelSpec& k) {
    SymmetryCheck sym = kernel_symmetry_check(k, 1e-10);
    if (sym.pass) return SupportClass::RandomField;

    double scale = 0.0;
    for (const Cplx& v : k.g) scale = std::max(scale, std::abs(v));
    bool cone = true;
    for (size_t i = 0; i < k.g.size() && cone; ++i) {
        if (std::abs(k.g[i]) <= 1e-14 * scale) continue;
        std::vector<double> u = k.grid.phys(i);
        if (!(u[0] >= 0 && mdot(u, u) >= 0)) cone = false;
    }
    return cone ? SupportClass::SpectrumCondition : SupportClass::Neither;
}

std::string support_class_name(SupportClass s) {
    switch (s) {
        case SupportClass::RandomField: return "random-field";
        case SupportClass::SpectrumCondition: return "spectrum-condition";
        default: return "neither";
    }
}

Cplx FieldBinding::ip_value(const IPSymbol& s) const {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    auto lookup = [&](const std::vector<Name>& names) {
        std::vector<GimelField> fs;
        for (const Name& n : names) {
            auto f = fields.find(n);
            if (f == fields.end())
                throw std::invalid_argument("FieldBinding: unbound generator " + n);
            fs.push_back(f->second);
        }
        return fs;
    };
    std::vector<GimelField> anti = lookup(s.anti), lin = lookup(s.lin);
    Cplx v = eval_ip(anti, lin, kernel.lambda);
    cache_.emplace(s, v);
    return v;
}

Cplx FieldBinding::value(const Coefficient& c) const {
    Cplx acc(0, 0);
    for (const auto& [mono, g] : c.terms()) {
        Cplx term(g.re.to_double(), g.im.to_double());
        for (const IPSymbol& s : mono) term *= ip_value(s);
        acc += term;
    }
    return acc;
}

HermitianMatrix gram_matrix(const std::vector<Ket>& kets, const FieldBinding& b) {
    HermitianMatrix m(kets.size());
    for (size_t i = 0; i < kets.size(); ++i)
        for (size_t j = 0; j < kets.size(); ++j)
            m.at(i, j) = b.value(inner_bruteforce(kets[i], kets[j]));
    return m;  // Hermitian up to rounding; the eigensolver checks the defect
}

double moment(const Name& f, int order, const FieldBinding& b) {
    if (order < 0 || order > 6) throw std::invalid_argument("moment: order must be in 0..6");
    static std::map<std::pair<Name, int>, Coefficient> cache;
    static std::mutex mtx;
    Coefficient sym;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({f, order});
        if (it != cache.end()) sym = it->second;
    }
    if (sym.is_zero() && order > 0) {
        OpPoly p(Coefficient(1));
        OpPoly field = phi(f);
        for (int i = 0; i < order; ++i) p = p * field;
        sym = vev(p);
        std::lock_guard<std::mutex> lock(mtx);
        cache.emplace(std::make_pair(f, order), sym);
    }
    if (order == 0) return 1.0;
    return b.value(sym).real();
}

GimelField random_field(const MomentumGrid& grid, TestRand& rng) {
    GimelField f(grid);
    for (Cplx& v : f.v) v = Cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return f;
}

GimelField real_test_field(const MomentumGrid& grid, TestRand& rng) {
    GimelField g = random_field(grid, rng);
    GimelField f(grid);
    for (size_t i = 0; i < f.v.size(); ++i)
        f.v[i] = 0.5 * (g.v[i] + std::conj(g.v[grid.neg(i)]));
    return f;
}

Bivector em_bivector(const std::array<Cplx, 3>& e, const std::array<Cplx, 3>& b) {
    Bivector f{};
    for (int i = 0; i < 3; ++i) {
        f[0][i + 1] = e[i];
        f[i + 1][0] = -e[i];
    }
    // F_ij = eps_ijk b_k
    f[1][2] = b[2];
    f[2][1] = -b[2];
    f[2][3] = b[0];
    f[3][2] = -b[0];
    f[3][1] = b[1];
    f[1][3] = -b[1];
    return f;
}

Cplx em_integrand(const Bivector& E, const Bivector& F, const std::array<double, 4>& u) {
    auto check = [](const Bivector& m) {
        double scale = 0.0, defect = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                scale = std::max(scale, std::abs(m[i][j]));
                defect = std::max(defect, std::abs(m[i][j] + m[j][i]));
            }
        if (defect > 1e-12 * std::max(scale, 1.0))
            throw std::invalid_argument("em_integrand: bivector not antisymmetric");
    };
    check(E);
    check(F);
    // contraction sign fixed by the published null-direction value; the raised
    // beta index carries diag(-1,1,1,1) here
    static const double gbar[4] = {-1, 1, 1, 1};
    Cplx acc(0, 0);
    for (int b = 0; b < 4; ++b) {
        Cplx a(0, 0), c(0, 0);
        for (int mu = 0; mu < 4; ++mu) {
            a += std::conj(E[mu][b]) * u[mu];
            c += F[mu][b] * u[mu];
        }
        acc += gbar[b] * a * c;
    }
    return acc;
}

double CotangentKernelSpec::gval(std::span<const double> u, std::span<const double> p) const {
    double uu = mdot(u, u), pp = mdot(p, p), up = mdot(u, p);
    double th = theta(uu - m * m) * theta(pp) * theta(p[0]);
    if (th == 0.0) return 0.0;
    if (kind == Gaussian) return std::exp(-(2.0 * up * up / uu - pp) / (2.0 * m * m));
    return 1.0 / std::pow(m * m * m * m + 2.0 * up * up - uu * pp, r / 2.0);
}

CotangentKernelSpec make_cotangent_kernel(CotangentKernelSpec::Kind kind, double m, double r,
                                          MomentumGrid ugrid, double dp, double lambda) {
    if (m <= 0) throw std::invalid_argument("make_cotangent_kernel: m must be > 0");
    if (kind == CotangentKernelSpec::PowerLaw && r <= 0)
        throw std::invalid_argument("make_cotangent_kernel: power-law needs r > 0");
    if (dp <= 0) throw std::invalid_argument("make_cotangent_kernel: dp must be > 0");
    CotangentKernelSpec ck;
    ck.kind = kind;
    ck.m = m;
    ck.r = r;
    ck.lambda = lambda;
    ck.ugrid = ugrid;
    ck.dp = dp;

    // spot check of the z -> -z invariance of G*((z-s)/2,p) G((z+s)/2,p)
    TestRand rng(12345);
    int d = ugrid.d;
    std::vector<double> z(d), s(d), p(d), a(d), b(d);
    for (int iter = 0; iter < 50; ++iter) {
        for (int i = 0; i < d; ++i) {
            z[i] = rng.uniform(-3.0, 3.0);
            s[i] = rng.uniform(-3.0, 3.0);
            p[i] = rng.uniform(-3.0, 3.0);
        }
        for (int i = 0; i < d; ++i) {
            a[i] = 0.5 * (z[i] - s[i]);
            b[i] = 0.5 * (z[i] + s[i]);
        }
        double q1 = ck.gval(a, p) * ck.gval(b, p);
        for (int i = 0; i < d; ++i) {
            a[i] = 0.5 * (-z[i] - s[i]);
            b[i] = 0.5 * (-z[i] + s[i]);
        }
        double q2 = ck.gval(a, p) * ck.gval(b, p);
        if (std::abs(q1 - q2) > 1e-12 * std::max({std::abs(q1), std::abs(q2), 1.0}))
            throw std::logic_error("make_cotangent_kernel: z -> -z symmetry check failed");
    }
    return ck;
}

namespace {

// iterate the symmetric integer box {-P..P}^d
template <typename F>
void for_p_box(int d, int half, double dp, F body) {
    std::vector<int> c(d, -half);
    std::vector<double> p(d);
    for (;;) {
        for (int i = 0; i < d; ++i) p[i] = c[i] * dp;
        body(p);
        int axis = d - 1;
        while (axis >= 0 && ++c[axis] > half) c[axis--] = -half;
        if (axis < 0) break;
    }
}

}  // namespace

Cplx cotangent_ip(const CotangentFn& f, const CotangentFn& g, const CotangentKernelSpec& ck,
                  int p_half_range) {
    const MomentumGrid& ug = ck.ugrid;
    Cplx acc(0, 0);
    for_p_box(ug.d, p_half_range, ck.dp, [&](std::span<const double> p) {
        for (size_t ui = 0; ui < ug.size(); ++ui) {
            std::vector<double> u = ug.phys(ui);
            double gv = ck.gval(u, p);
            if (gv == 0.0) continue;
            acc += std::conj(gv * f(u, p)) * (gv * g(u, p));
        }
    });
    return acc * ipow(ug.du, ug.d) * ipow(ck.dp, ug.d);
}

std::vector<Cplx> cotangent_xi(const CotangentFn& f, const CotangentFn& g,
                               const CotangentKernelSpec& ck, std::span<const double> p) {
    const MomentumGrid& ug = ck.ugrid;
    size_t sz = ug.size();
    std::vector<Cplx> hf(sz), hg(sz);
    for (size_t ui = 0; ui < sz; ++ui) {
        std::vector<double> u = ug.phys(ui);
        double gv = ck.gval(u, p);
        hf[ui] = gv * f(u, p);
        hg[ui] = gv * g(u, p);
    }
    std::vector<Cplx> out(sz);
    double meas = ck.lambda * ipow(ug.du, ug.d);
    for (size_t s = 0; s < sz; ++s) {
        Cplx acc(0, 0);
        for (size_t u = 0; u < sz; ++u) acc += std::conj(hf[u]) * hg[ug.add(u, s)];
        out[s] = meas * acc;
    }
    return out;
}

namespace {

nlohmann::json grid_json(const MomentumGrid& g) {
    return {{"dim", g.d}, {"n", g.n}, {"du", g.du}};
}

MomentumGrid grid_from_json(const nlohmann::json& j) {
    return MomentumGrid(j.at("dim").get<int>(), j.at("n").get<int>(), j.at("du").get<double>());
}

nlohmann::json cplx_array(const std::vector<Cplx>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const Cplx& c : v) {
        a.push_back(c.real());
        a.push_back(c.imag());
    }
    return a;
}

std::vector<Cplx> cplx_from_array(const nlohmann::json& a, size_t expect) {
    if (!a.is_array() || a.size() != 2 * expect)
        throw std::invalid_argument("complex array has the wrong length");
    std::vector<Cplx> v(expect);
    for (size_t i = 0; i < expect; ++i)
        v[i] = Cplx(a[2 * i].get<double>(), a[2 * i + 1].get<double>());
    return v;
}

}  // namespace

std::string kernel_to_json(const KernelSpec& k) {
    nlohmann::json j = {{"grid", grid_json(k.grid)},
                        {"label", k.label},
                        {"lambda", k.lambda},
                        {"c", {k.c_declared.real(), k.c_declared.imag()}},
                        {"g", cplx_array(k.g)}};
    return j.dump(2) + "\n";
}

KernelSpec kernel_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    KernelSpec k;
    k.grid = grid_from_json(j.at("grid"));
    k.label = j.value("label", "");
    k.lambda = j.at("lambda").get<double>();
    auto c = j.value("c", std::vector<double>{1.0, 0.0});
    k.c_declared = Cplx(c.at(0), c.at(1));
    k.g = cplx_from_array(j.at("g"), k.grid.size());
    return k;
}

std::string field_to_json(const GimelField& f) {
    nlohmann::json j = {{"grid", grid_json(f.grid)}, {"v", cplx_array(f.v)}};
    return j.dump(2) + "\n";
}

GimelField field_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GimelField f(grid_from_json(j.at("grid")));
    f.v = cplx_from_array(j.at("v"), f.grid.size());
    return f;
}

bool divergent_p_growth(const std::vector<double>& values) {
    if (values.size() < 4)
        throw std::invalid_argument("divergent_p_growth: need >= 3 doublings (4 values)");
    std::vector<double> inc;
    for (size_t i = 1; i < values.size(); ++i) inc.push_back(values[i] - values[i - 1]);
    for (double d : inc)
        if (d <= 0) return false;
    // convergent tails collapse geometrically; log-or-worse growth keeps
    // increments from shrinking much between doublings
    for (size_t i = 1; i < inc.size(); ++i)
        if (inc[i] < 0.4 * inc[i - 1]) return false;
    return inc.back() > 1e-3 * std::abs(values.back());
}

}  // namespace lierf
