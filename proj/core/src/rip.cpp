// SPDX-License-Identifier: Apache-2.0
#include "qrip/rip.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qrip/sampling.hpp"

namespace qrip {

std::uint64_t binomial_capped(std::size_t n, std::size_t s, std::uint64_t cap) {
    if (s > n) return 0;
    s = std::min(s, n - s);
    double r = 1.0;
    for (std::size_t i = 1; i <= s; ++i) {
        r = r * static_cast<double>(n - s + i) / static_cast<double>(i);
        // r equals C(n-s+i, i) after each step, so it is nondecreasing.
        if (r > static_cast<double>(cap)) return cap + 1;
    }
    return static_cast<std::uint64_t>(std::llround(r));
}

std::vector<std::vector<std::size_t>> enumerate_supports(std::size_t n,
                                                         std::size_t s,
                                                         std::uint64_t cap) {
    if (s == 0 || s > n)
        throw std::invalid_argument("enumerate_supports: need 1 <= s <= n");
    const std::uint64_t count = binomial_capped(n, s, cap);
    if (count > cap)
        throw CapExceededError("enumerate_supports: C(n, s) exceeds cap");

    std::vector<std::vector<std::size_t>> out;
    out.reserve(count);
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        // Advance to the next combination in lexicographic order.
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

double rayleigh_quotient(const QuatMatrix& phi, const QuatVector& x) {
    const double nsq = x.norm_sq();
    if (std::sqrt(nsq) < kQuatTol)
        throw std::domain_error("rayleigh_quotient: zero vector");
    return matvec(phi, x).norm_sq() / nsq;
}

double squared_image_norm_on_support(const QuatMatrix& phi,
                                     const std::vector<std::size_t>& support,
                                     const QuatVector& coords) {
    if (support.size() != coords.size())
        throw std::invalid_argument(
            "squared_image_norm_on_support: support/coordinate size mismatch");
    const std::size_t m = phi.rows();
    double acc = 0.0;
    if (phi.field() == Field::Real && coords.field() == Field::Real) {
        for (std::size_t r = 0; r < m; ++r) {
            double y = 0.0;
            for (std::size_t j = 0; j < support.size(); ++j)
                y += phi.at(r, support[j]).a * coords[j].a;
            acc += y * y;
        }
        return acc;
    }
    for (std::size_t r = 0; r < m; ++r) {
        Quaternion y;
        for (std::size_t j = 0; j < support.size(); ++j)
            y += phi.at(r, support[j]) * coords[j];
        acc += y.norm_sq();
    }
    return acc;
}

namespace {

/// Unit coordinates on a support, as a dense length-s vector.
QuatVector unit_coords(RngStream& rng, std::size_t s, Field field) {
    std::vector<std::size_t> full(s);
    std::iota(full.begin(), full.end(), 0);
    return sample_sparse_unit_vector(rng, s, full, field);
}

}  // namespace

RipEstimate exact_delta_s(const QuatMatrix& phi, std::size_t s,
                          std::uint64_t cap, bool keep_per_support) {
    if (s == 0 || s > phi.cols())
        throw std::invalid_argument("exact_delta_s: need 1 <= s <= n");
    const auto supports = enumerate_supports(phi.cols(), s, cap);

    double value = 0.0;
    std::vector<double> detail;
    if (keep_per_support) detail.reserve(supports.size());
    for (const auto& support : supports) {
        QuatMatrix g = gram(phi.columns(support));
        for (std::size_t i = 0; i < s; ++i) g.at(i, i) += Quaternion::real(-1.0);
        const double norm = op_norm_hermitian(g);
        value = std::max(value, norm);
        if (keep_per_support) detail.push_back(norm);
    }
    return {RipEstimate::Mode::Exact,
            value,
            s,
            supports.size(),
            0,
            false,
            keep_per_support ? std::optional(std::move(detail)) : std::nullopt};
}

RipEstimate empirical_delta_s(const QuatMatrix& phi, std::size_t s,
                              const SupportSampling& supports,
                              std::size_t vectors_per_support, RngStream rng,
                              std::uint64_t cap) {
    if (vectors_per_support == 0)
        throw std::invalid_argument("empirical_delta_s: need vectors_per_support >= 1");
    const Field field = phi.field();
    double value = 0.0;
    std::uint64_t support_count = 0;

    if (supports.mode == SupportSampling::Mode::All) {
        const auto pool = enumerate_supports(phi.cols(), s, cap);
        support_count = pool.size();
        for (std::size_t k = 0; k < pool.size(); ++k) {
            RngStream vec_rng = rng.derive(k);
            for (std::size_t v = 0; v < vectors_per_support; ++v) {
                const QuatVector coords = unit_coords(vec_rng, s, field);
                const double r = squared_image_norm_on_support(phi, pool[k], coords);
                value = std::max(value, std::fabs(r - 1.0));
            }
        }
    } else {
        if (supports.count == 0)
            throw std::invalid_argument("empirical_delta_s: need sampled support count >= 1");
        support_count = supports.count;
        RngStream support_rng = rng.derive(0);
        RngStream entry_rng = rng.derive(1);
        for (std::size_t k = 0; k < supports.count; ++k) {
            const auto support = sample_support(support_rng, phi.cols(), s);
            for (std::size_t v = 0; v < vectors_per_support; ++v) {
                const QuatVector coords = unit_coords(entry_rng, s, field);
                const double r = squared_image_norm_on_support(phi, support, coords);
                value = std::max(value, std::fabs(r - 1.0));
            }
        }
    }
    return {RipEstimate::Mode::Empirical, value,          s,
            support_count,               vectors_per_support, true,
            std::nullopt};
}

RicRivSample empirical_ric_riv(const QuatMatrix& phi, std::size_t s,
                               std::size_t vectors_per_support, RngStream rng,
                               std::uint64_t cap) {
    if (vectors_per_support == 0)
        throw std::invalid_argument("empirical_ric_riv: need vectors_per_support >= 1");
    const auto pool = enumerate_supports(phi.cols(), s, cap);
    const Field field = phi.field();

    double min_all = 1.0 / 0.0, max_all = -1.0 / 0.0;
    double min_first = 1.0 / 0.0, max_first = -1.0 / 0.0;
    for (std::size_t k = 0; k < pool.size(); ++k) {
        RngStream vec_rng = rng.derive(k);
        for (std::size_t v = 0; v < vectors_per_support; ++v) {
            const QuatVector coords = unit_coords(vec_rng, s, field);
            const double r = squared_image_norm_on_support(phi, pool[k], coords);
            min_all = std::min(min_all, r);
            max_all = std::max(max_all, r);
            if (v == 0) {
                min_first = std::min(min_first, r);
                max_first = std::max(max_first, r);
            }
        }
    }
    return {1.0 - min_all, max_all - 1.0, 1.0 - min_first, max_first - 1.0};
}

namespace {

void check_delta_eps(double delta, double eps) {
    if (!(delta > 0.0) || !(delta < 1.0 / std::sqrt(3.0)))
        throw std::domain_error("sample size: delta must lie in (0, 1/sqrt(3))");
    if (!(eps > 0.0) || !(eps < 1.0))
        throw std::domain_error("sample size: eps must lie in (0, 1)");
}

std::uint64_t ceil_to_count(double bound) {
    return static_cast<std::uint64_t>(std::ceil(bound));
}

}  // namespace

std::uint64_t sample_size_fixed_support(double delta, double eps, std::uint64_t s) {
    check_delta_eps(delta, eps);
    if (s == 0) throw std::domain_error("sample size: s must be positive");
    const double bound = (10.0 / 3.0) / (delta * delta) *
                         (14.0 * static_cast<double>(s) + std::log(2.0 / eps));
    return ceil_to_count(bound);
}

std::uint64_t sample_size_rip(double delta, double eps, std::uint64_t s,
                              std::uint64_t n) {
    check_delta_eps(delta, eps);
    if (s == 0 || s > n)
        throw std::domain_error("sample size: need 1 <= s <= n");
    const double sd = static_cast<double>(s);
    const double bound =
        (10.0 / 3.0) / (delta * delta) *
        (15.0 * sd + std::log(2.0 / eps) + sd * std::log(static_cast<double>(n) / sd));
    return ceil_to_count(bound);
}

double covering_count_bound(std::uint64_t s, double gamma) {
    if (s == 0) throw std::domain_error("covering_count_bound: s must be positive");
    if (!(gamma > 0.0) || !(gamma < 0.5))
        throw std::domain_error("covering_count_bound: gamma must lie in (0, 1/2)");
    return 4.0 * static_cast<double>(s) * std::log1p(2.0 / gamma);
}

}  // namespace qrip
