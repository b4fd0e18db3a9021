#pragma once

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lierf/fock.hpp"
#include "lierf/jacobi_eigen.hpp"
#include "lierf/testrand.hpp"

namespace lierf {

// Periodic momentum grid, n points per axis, axis 0 slowest in the flat
// index. Signed coordinates run over [-n/2, n/2), so the point set is
// closed under negation and momentum conservation is an exact index
// congruence mod n.
struct MomentumGrid {
    int d = 2;
    int n = 32;
    double du = 0.35;

    MomentumGrid() = default;
    MomentumGrid(int dim, int points, double spacing);

    size_t size() const;
    std::vector<int> coords(size_t idx) const;       // 0..n-1 per axis
    size_t flat(std::span<const int> c) const;        // inputs taken mod n
    size_t add(size_t a, size_t b) const;
    size_t sub(size_t a, size_t b) const;
    size_t neg(size_t a) const;
    int signed_coord(int k) const { return k < n / 2 ? k : k - n; }
    std::vector<double> phys(size_t idx) const;       // signed coords * du

    friend bool operator==(const MomentumGrid&, const MomentumGrid&) = default;
};

// Complex field tabulated on a grid. Used both for raw Fourier data f~ and
// for the gimel representation h~ = G~ f~; nothing here ever divides by G~.
struct GimelField {
    MomentumGrid grid;
    std::vector<Cplx> v;

    GimelField() = default;
    explicit GimelField(MomentumGrid g) : grid(g), v(g.size()) {}

    GimelField conjugate_reflect() const;  // f*(u) := conj(f(-u))
};

struct KernelSpec {
    MomentumGrid grid;
    std::vector<Cplx> g;      // G~ tabulated on grid
    double lambda = 0.2;
    Cplx c_declared{1, 0};    // phase metadata when the symmetry is declared
    std::string label;
};

KernelSpec make_kernel(MomentumGrid grid, std::string label, double lambda,
                       const std::function<Cplx(std::span<const double>)>& fn);

// Shipped fixtures. The symmetric family satisfies G~(v) = c G~*(-v) with
// c = exp(i*phi) by construction; the broken one adds a one-sided bump.
KernelSpec make_symmetric_kernel(MomentumGrid grid, double phi, double alpha, double width,
                                 double lambda);
KernelSpec make_broken_kernel(MomentumGrid grid, double width, double lambda);
KernelSpec make_forward_cone_kernel(MomentumGrid grid, double width, double lambda);

GimelField gimel_transform(const GimelField& f, const KernelSpec& k);

// Gimel representation of xi(f;g): out(s) = lambda * du^d * sum_u h_f*(u) h_g(u+s).
GimelField eval_xi(const GimelField& f, const GimelField& g, double lambda);

// lambda^(m+n-2) * du^(d*(m+n-1)) * constrained momentum sum; validated in
// the tests against iterated eval_xi plus the m=n=1 pairing.
Cplx eval_ip(std::span<const GimelField> anti, std::span<const GimelField> lin, double lambda);

struct SymmetryCheck {
    Cplx c{0, 0};
    double residual = 0.0;  // max |G(v) - c G*(-v)| / max |G|
    bool pass = false;
};
SymmetryCheck kernel_symmetry_check(const KernelSpec& k, double tol = 1e-10);

// Max over sampled (s, x) of the relative commutator sum
//   sum_z G~*((z-s)/2) G~((z+s)/2) (e^{i x.z} - e^{-i x.z})
// restricted to even-index z +- s that stay on the grid, combined with the
// direct z -> -z symmetry defect of the product.
double commutator_residual(const KernelSpec& k, int s_samples, int x_samples, uint64_t seed);

enum class SupportClass { RandomField, SpectrumCondition, Neither };
SupportClass spectrum_support_classify(const KernelSpec& k);
std::string support_class_name(SupportClass s);

// Binds generator names to gimel fields so symbolic Coefficients can be
// evaluated numerically. IPSymbol values are cached per binding.
struct FieldBinding {
    KernelSpec kernel;
    std::map<Name, GimelField> fields;

    FieldBinding() = default;
    FieldBinding(KernelSpec k, std::map<Name, GimelField> f)
        : kernel(std::move(k)), fields(std::move(f)) {}

    Cplx ip_value(const IPSymbol& s) const;
    Cplx value(const Coefficient& c) const;

  private:
    mutable std::map<IPSymbol, Cplx> cache_;
};

HermitianMatrix gram_matrix(const std::vector<Ket>& kets, const FieldBinding& b);

// <0| phi_f^order |0> via the symbolic vev, then numeric binding. The bound
// field must represent a real test function (f~(-u) = conj f~(u)).
double moment(const Name& f, int order, const FieldBinding& b);

// Deterministic random fields on a grid; the real variant is Hermitian-
// symmetrized so it represents a real test function.
GimelField random_field(const MomentumGrid& grid, TestRand& rng);
GimelField real_test_field(const MomentumGrid& grid, TestRand& rng);

// ---- electromagnetic bivector inner product (integrand only) ----

using Bivector = std::array<std::array<Cplx, 4>, 4>;

Bivector em_bivector(const std::array<Cplx, 3>& e, const std::array<Cplx, 3>& b);

// E*_{mu beta} u^mu u^nu F_nu^beta at one 4-momentum u. Cone and mass-shell
// predicates elsewhere use signature (+,-,-,-); this contraction carries the
// opposite overall sign so that the null-direction value is the positive
// form u0^2 [(e1+b2)^2 + (e2-b1)^2]. hbar = 1.
Cplx em_integrand(const Bivector& E, const Bivector& F, const std::array<double, 4>& u);

// ---- cotangent-manifold kernels ----

struct CotangentKernelSpec {
    enum Kind { Gaussian, PowerLaw };
    Kind kind = Gaussian;
    double m = 1.0;
    double r = 0.0;       // power-law exponent; ignored for Gaussian
    double lambda = 0.2;
    MomentumGrid ugrid;
    double dp = 0.5;

    double gval(std::span<const double> u, std::span<const double> p) const;
};

// Tabulation parameters plus a spot check of the z -> -z invariance of
// G~*((z-s)/2, p) G~((z+s)/2, p) on continuum sample points.
CotangentKernelSpec make_cotangent_kernel(CotangentKernelSpec::Kind kind, double m, double r,
                                          MomentumGrid ugrid, double dp, double lambda);

using CotangentFn = std::function<Cplx(std::span<const double> u, std::span<const double> p)>;

// sum over the u grid and the symmetric p box {-P..P}^d * dp of
// (G f)* (G g) du^d dp^d.
Cplx cotangent_ip(const CotangentFn& f, const CotangentFn& g, const CotangentKernelSpec& ck,
                  int p_half_range);

// xi analogue at fixed p: s-indexed array over the u grid.
std::vector<Cplx> cotangent_xi(const CotangentFn& f, const CotangentFn& g,
                               const CotangentKernelSpec& ck, std::span<const double> p);

// Divergence detection over >= 3 successive p-range doublings: monotone
// growth with non-collapsing increments.
bool divergent_p_growth(const std::vector<double>& values);

// JSON serialization: {"grid": {"dim", "n", "du"}, ...} with complex data as
// flat row-major [re, im, re, im, ...] arrays.
std::string kernel_to_json(const KernelSpec& k);
KernelSpec kernel_from_json(const std::string& text);
std::string field_to_json(const GimelField& f);
GimelField field_from_json(const std::string& text);

// Worker-thread cap for grid reductions (deterministic chunking).
void set_max_threads(int n);
int max_threads();

}  // namespace lierf
