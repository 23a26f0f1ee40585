// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "qrip/linalg.hpp"
#include "qrip/rng.hpp"

namespace qrip {

/// Entry distribution of a Gaussian ensemble. In the quaternion case each of
/// the four components is drawn i.i.d. N(0, variance / 4), so the quaternion
/// entry has mean zero and E|X|^2 = variance. In the real case the entry is
/// N(0, variance) with zero imaginary parts.
struct GaussianSpec {
    Field field = Field::Quaternion;
    double variance = 1.0;
};

/// Quaternion Gaussian scalar with mean zero and E|X|^2 = variance.
/// Throws std::invalid_argument for negative variance.
Quaternion sample_gaussian_quaternion(RngStream& rng, double variance);

/// Real Gaussian scalar N(0, variance) as a real-tagged quaternion.
Quaternion sample_gaussian_real(RngStream& rng, double variance);

/// m x n matrix with independent entries drawn row-major from `spec`.
/// Throws std::invalid_argument for zero dimensions or negative variance.
QuatMatrix sample_gaussian_matrix(RngStream& rng, std::size_t m, std::size_t n,
                                  const GaussianSpec& spec);

/// Unit vector supported exactly on `support`: on-support entries are i.i.d.
/// Gaussian, then the vector is normalized, which makes the distribution
/// uniform on the unit sphere of the support subspace. Throws
/// std::invalid_argument for an empty support or out-of-range indices.
QuatVector sample_sparse_unit_vector(RngStream& rng, std::size_t n,
                                     const std::vector<std::size_t>& support,
                                     Field field);

/// Uniformly random s-subset of {0, .., n-1}, sorted. Consumes exactly s
/// uniforms regardless of the outcome. Throws std::invalid_argument unless
/// 1 <= s <= n.
std::vector<std::size_t> sample_support(RngStream& rng, std::size_t n,
                                        std::size_t s);

}  // namespace qrip
