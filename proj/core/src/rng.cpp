// SPDX-License-Identifier: Apache-2.0
#include "qrip/rng.hpp"

#include <cmath>
#include <numbers>

namespace qrip {

std::pair<double, double> normal_pair(RngStream& rng) {
    // u1 in (0, 1] keeps the log finite.
    const double u1 = 1.0 - rng.uniform01();
    const double u2 = rng.uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(angle), r * std::sin(angle)};
}

double standard_normal(RngStream& rng) { return normal_pair(rng).first; }

}  // namespace qrip
