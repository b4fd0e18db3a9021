#include "lierf/jacobi_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lierf {

double HermitianMatrix::hermiticity_defect() const {
    double defect = 0.0, scale = 0.0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            scale = std::max(scale, std::abs(at(i, j)));
            defect = std::max(defect, std::abs(at(i, j) - std::conj(at(j, i))));
        }
    }
    return scale > 0 ? defect / scale : 0.0;
}

std::vector<double> jacobi_eigenvalues(HermitianMatrix m, double herm_tol) {
    if (m.hermiticity_defect() > herm_tol)
        throw std::invalid_argument("jacobi_eigenvalues: matrix is not Hermitian");
    const size_t n = m.n;
    if (n == 0) return {};
    // symmetrize exactly so rounding in the input cannot accumulate
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Cplx v = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
            m.at(i, j) = v;
            m.at(j, i) = std::conj(v);
        }

    double scale = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m.at(i, j)));
    if (scale == 0.0) return std::vector<double>(n, 0.0);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += std::norm(m.at(p, q));
        if (std::sqrt(off) <= 1e-15 * scale * double(n)) break;

        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                Cplx z = m.at(p, q);
                double az = std::abs(z);
                if (az <= 1e-300) continue;
                Cplx phase = z / az;
                double app = m.at(p, p).real();
                double aqq = m.at(q, q).real();
                // rotation angle zeroing the (p,q) entry
                double t;
                if (app == aqq) {
                    t = 1.0;
                } else {
                    double tau = (app - aqq) / (2.0 * az);
                    t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                // columns: col_p' = c*col_p + s*conj(phase)... apply V on the
                // right and V^H on the left, V = [[c, -s*phase],[s*conj(phase), c]]
                for (size_t i = 0; i < n; ++i) {
                    Cplx aip = m.at(i, p), aiq = m.at(i, q);
                    m.at(i, p) = c * aip + s * std::conj(phase) * aiq;
                    m.at(i, q) = -s * phase * aip + c * aiq;
                }
                for (size_t j = 0; j < n; ++j) {
                    Cplx apj = m.at(p, j), aqj = m.at(q, j);
                    m.at(p, j) = c * apj + s * phase * aqj;
                    m.at(q, j) = -s * std::conj(phase) * apj + c * aqj;
                }
                m.at(p, q) = Cplx(0, 0);
                m.at(q, p) = Cplx(0, 0);
                m.at(p, p) = Cplx(m.at(p, p).real(), 0);
                m.at(q, q) = Cplx(m.at(q, q).real(), 0);
            }
        }
    }
    std::vector<double> eig(n);
    for (size_t i = 0; i < n; ++i) eig[i] = m.at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

PsdResult psd_check(const HermitianMatrix& m, double tol) {
    std::vector<double> eig = jacobi_eigenvalues(m);
    PsdResult r;
    if (eig.empty()) {
        r.pass = true;
        return r;
    }
    r.min_eigenvalue = eig.front();
    for (double e : eig) r.max_abs_eigenvalue = std::max(r.max_abs_eigenvalue, std::abs(e));
    r.pass = r.min_eigenvalue >= -tol * std::max(r.max_abs_eigenvalue, 1e-300);
    return r;
}

}  // namespace lierf
