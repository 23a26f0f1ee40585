// SPDX-License-Identifier: Apache-2.0
#include "qrip/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qrip {

Quaternion sample_gaussian_quaternion(RngStream& rng, double variance) {
    if (variance < 0.0)
        throw std::invalid_argument("sample_gaussian_quaternion: negative variance");
    const double sd = std::sqrt(variance) / 2.0;  // per-component N(0, variance/4)
    const auto [z0, z1] = normal_pair(rng);
    const auto [z2, z3] = normal_pair(rng);
    return {sd * z0, sd * z1, sd * z2, sd * z3};
}

Quaternion sample_gaussian_real(RngStream& rng, double variance) {
    if (variance < 0.0)
        throw std::invalid_argument("sample_gaussian_real: negative variance");
    return Quaternion::real(std::sqrt(variance) * standard_normal(rng));
}

QuatMatrix sample_gaussian_matrix(RngStream& rng, std::size_t m, std::size_t n,
                                  const GaussianSpec& spec) {
    if (m == 0 || n == 0)
        throw std::invalid_argument("sample_gaussian_matrix: zero dimension");
    if (spec.variance < 0.0)
        throw std::invalid_argument("sample_gaussian_matrix: negative variance");
    QuatMatrix out(m, n, spec.field);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out.at(r, c) = spec.field == Field::Quaternion
                               ? sample_gaussian_quaternion(rng, spec.variance)
                               : sample_gaussian_real(rng, spec.variance);
    return out;
}

QuatVector sample_sparse_unit_vector(RngStream& rng, std::size_t n,
                                     const std::vector<std::size_t>& support,
                                     Field field) {
    if (support.empty())
        throw std::invalid_argument("sample_sparse_unit_vector: empty support");
    for (std::size_t idx : support)
        if (idx >= n)
            throw std::invalid_argument(
                "sample_sparse_unit_vector: support index out of range");

    QuatVector x(n, field);
    double norm = 0.0;
    do {
        for (std::size_t idx : support)
            x[idx] = field == Field::Quaternion
                         ? sample_gaussian_quaternion(rng, 1.0)
                         : sample_gaussian_real(rng, 1.0);
        norm = x.norm();
    } while (norm == 0.0);  // probability-zero guard
    const double inv = 1.0 / norm;
    for (std::size_t idx : support) x[idx] *= inv;
    return x;
}

std::vector<std::size_t> sample_support(RngStream& rng, std::size_t n,
                                        std::size_t s) {
    if (s == 0 || s > n)
        throw std::invalid_argument("sample_support: need 1 <= s <= n");
    // Partial Fisher-Yates: the first s slots are a uniform s-subset.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < s; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.uniform_below(n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(s);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace qrip
