// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "qrip/gamma.hpp"

namespace qrip {

/// Sub-exponential certificate (sigma^2, delta): the centered moment
/// generating function satisfies E e^{t(X - EX)} <= exp(sigma^2 t^2 / 2)
/// for |t| <= delta.
struct SubExpParams {
    double sigma_sq;
    double delta;
};

/// A Gamma(alpha, beta) variable is sub-exponential with
/// sigma^2 = (5/2) * Var X = (5/2) * alpha / beta^2 and delta = beta / 5.
SubExpParams subexp_params_for_gamma(const GammaParams& params);

struct MgfReport {
    double max_ratio;     // max over the grid of exact MGF / certificate bound
    double t_at_max;
    std::size_t grid;
    bool passed;          // max_ratio <= 1
};

/// Deterministic check of the sub-exponential certificate: evaluates the
/// exact centered MGF (1 - t/beta)^(-alpha) e^(-t alpha / beta) on a uniform
/// grid of t in [-beta/5, beta/5] against exp(sigma^2 t^2 / 2). A failed
/// report signals an implementation bug, not sampling noise.
/// Throws std::invalid_argument for grid < 2.
MgfReport verify_mgf_bound(const GammaParams& params, std::size_t grid);

/// Concentration bound for the Rayleigh quotient of an m-row quaternion
/// Gaussian matrix: P(|R - 1| >= t) <= 2 exp(-2 m t^2 / 5), valid for
/// 0 <= t <= 1/2. Throws std::domain_error outside that range.
double tail_bound(std::size_t m, double t);

}  // namespace qrip
