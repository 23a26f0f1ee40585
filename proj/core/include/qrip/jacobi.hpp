// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qrip/embedding.hpp"
#include "qrip/linalg.hpp"

namespace qrip {

struct JacobiOptions {
    /// Convergence: off-diagonal Frobenius norm <= tol * max(1, ||A||_F).
    double tol = 1e-12;
    int max_sweeps = 100;
};

/// Eigenvalues of a symmetric real matrix via cyclic Jacobi rotations,
/// in no particular order. Throws std::invalid_argument if the input is
/// not symmetric and std::runtime_error if the sweep limit is reached
/// before convergence.
std::vector<double> jacobi_eigenvalues(const RealMatrix& sym,
                                       const JacobiOptions& opts = {});

/// Largest absolute eigenvalue of a symmetric real matrix.
double spectral_radius(const RealMatrix& sym, const JacobiOptions& opts = {});

/// Operator norm ||Psi||_{2->2} of a Hermitian quaternion matrix, computed
/// as the spectral radius of its (symmetric) real embedding. Every Rayleigh
/// value |<Psi x, x>| / ||x||^2 is bounded by the returned value.
/// Throws std::invalid_argument if Psi is not square Hermitian.
double op_norm_hermitian(const QuatMatrix& psi, const JacobiOptions& opts = {});

}  // namespace qrip
