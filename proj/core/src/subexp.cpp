// SPDX-License-Identifier: Apache-2.0
#include "qrip/subexp.hpp"

#include <cmath>
#include <stdexcept>

namespace qrip {

SubExpParams subexp_params_for_gamma(const GammaParams& params) {
    return {2.5 * params.variance(), params.beta / 5.0};
}

MgfReport verify_mgf_bound(const GammaParams& params, std::size_t grid) {
    if (grid < 2)
        throw std::invalid_argument("verify_mgf_bound: grid must have at least 2 points");
    const SubExpParams se = subexp_params_for_gamma(params);
    const double mean = params.mean();

    // Compare in log space: log LHS - log RHS, exactly 0 at t = 0.
    double max_log_ratio = -1.0 / 0.0;
    double t_at_max = 0.0;
    for (std::size_t i = 0; i < grid; ++i) {
        const double t = -se.delta +
                         (2.0 * se.delta) * static_cast<double>(i) /
                             static_cast<double>(grid - 1);
        const double log_lhs = -params.alpha * std::log1p(-t / params.beta) - t * mean;
        const double log_rhs = 0.5 * se.sigma_sq * t * t;
        const double log_ratio = log_lhs - log_rhs;
        if (log_ratio > max_log_ratio) {
            max_log_ratio = log_ratio;
            t_at_max = t;
        }
    }
    return {std::exp(max_log_ratio), t_at_max, grid, max_log_ratio <= 0.0};
}

double tail_bound(std::size_t m, double t) {
    if (m == 0) throw std::invalid_argument("tail_bound: m must be positive");
    if (t < 0.0 || t > 0.5)
        throw std::domain_error("tail_bound: t outside the bound's range [0, 1/2]");
    const double md = static_cast<double>(m);
    return 2.0 * std::exp(-2.0 * md * t * t / 5.0);
}

}  // namespace qrip
