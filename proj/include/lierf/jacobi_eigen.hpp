#pragma once

#include <complex>
#include <vector>

namespace lierf {

using Cplx = std::complex<double>;

// Dense Hermitian matrix, row-major.
struct HermitianMatrix {
    size_t n = 0;
    std::vector<Cplx> a;

    HermitianMatrix() = default;
    explicit HermitianMatrix(size_t dim) : n(dim), a(dim * dim) {}
    Cplx& at(size_t i, size_t j) { return a[i * n + j]; }
    const Cplx& at(size_t i, size_t j) const { return a[i * n + j]; }

    // max |A - A^H| entry over max |A| entry
    double hermiticity_defect() const;
};

// Eigenvalues by cyclic Jacobi rotations with a fixed sweep order;
// intended for the small dense matrices produced by Gram checks (n <= 64).
// Throws if the input is not Hermitian within `herm_tol` (relative).
std::vector<double> jacobi_eigenvalues(HermitianMatrix m, double herm_tol = 1e-8);

struct PsdResult {
    double min_eigenvalue = 0.0;
    double max_abs_eigenvalue = 0.0;
    bool pass = false;
};

// pass iff min eigenvalue >= -tol * max |eigenvalue|
PsdResult psd_check(const HermitianMatrix& m, double tol);

}  // namespace lierf
