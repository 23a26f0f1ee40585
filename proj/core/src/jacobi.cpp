// SPDX-License-Identifier: Apache-2.0
#include "qrip/jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace qrip {

namespace {

double off_diagonal_frobenius(const RealMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += a.at(r, c) * a.at(r, c);
    return std::sqrt(s);
}

double frobenius(const RealMatrix& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const RealMatrix& sym,
                                       const JacobiOptions& opts) {
    if (!sym.is_symmetric(kQuatTol))
        throw std::invalid_argument("jacobi_eigenvalues: matrix is not symmetric");
    const std::size_t n = sym.rows();
    RealMatrix a = sym;
    if (n <= 1) {
        return n == 1 ? std::vector<double>{a.at(0, 0)} : std::vector<double>{};
    }

    const double stop = opts.tol * std::max(1.0, frobenius(a));
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        if (off_diagonal_frobenius(a) <= stop) {
            std::vector<double> eig(n);
            for (std::size_t i = 0; i < n; ++i) eig[i] = a.at(i, i);
            return eig;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double app = a.at(p, p);
                const double aqq = a.at(q, q);
                // Rotation angle from tan(2*theta) = 2*apq / (app - aqq),
                // picking the smaller root for stability.
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                     : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a.at(k, p);
                    const double akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a.at(p, k);
                    const double aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    if (off_diagonal_frobenius(a) <= stop) {
        std::vector<double> eig(n);
        for (std::size_t i = 0; i < n; ++i) eig[i] = a.at(i, i);
        return eig;
    }
    throw std::runtime_error("jacobi_eigenvalues: no convergence within sweep limit");
}

double spectral_radius(const RealMatrix& sym, const JacobiOptions& opts) {
    double m = 0.0;
    for (double ev : jacobi_eigenvalues(sym, opts)) m = std::max(m, std::fabs(ev));
    return m;
}

double op_norm_hermitian(const QuatMatrix& psi, const JacobiOptions& opts) {
    if (psi.rows() != psi.cols())
        throw std::invalid_argument("op_norm_hermitian: matrix is not square");
    if (!psi.is_hermitian())
        throw std::invalid_argument("op_norm_hermitian: matrix is not Hermitian");
    return spectral_radius(embed(psi), opts);
}

}  // namespace qrip
