// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qrip/jacobi.hpp"
#include "qrip/linalg.hpp"
#include "qrip/rng.hpp"

namespace qrip {

/// Raised when a requested support enumeration would exceed the configured
/// cap on C(n, s); callers should fall back to empirical (sampled) mode.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default cap on the number of enumerated supports.
inline constexpr std::uint64_t kDefaultEnumerationCap = 100000;

/// min(C(n, s), cap + 1); saturates so astronomically large counts are
/// reported as "exceeds cap" without overflow.
std::uint64_t binomial_capped(std::size_t n, std::size_t s, std::uint64_t cap);

/// All size-s subsets of {0, .., n-1} in lexicographic order. Throws
/// CapExceededError if C(n, s) > cap.
std::vector<std::vector<std::size_t>> enumerate_supports(
    std::size_t n, std::size_t s, std::uint64_t cap = kDefaultEnumerationCap);

/// Rayleigh quotient R = ||Phi x||^2 / ||x||^2. Scale-invariant in x; for
/// N_H(0, 1/m) ensembles, R ~ Gamma(2m, 2m) regardless of x. Throws
/// std::domain_error for (numerically) zero x.
double rayleigh_quotient(const QuatMatrix& phi, const QuatVector& x);

/// ||Phi_S x||^2 for a unit vector given by its on-support coordinates,
/// gathering columns of Phi on the fly.
double squared_image_norm_on_support(const QuatMatrix& phi,
                                     const std::vector<std::size_t>& support,
                                     const QuatVector& coords);

struct RipEstimate {
    enum class Mode { Exact, Empirical };
    Mode mode;
    double value;
    std::size_t s;
    std::uint64_t supports_evaluated;
    std::uint64_t vectors_per_support;  // zero in exact mode
    /// Empirical estimates are maxima over finite vector pools and can only
    /// bound the true restricted isometry constant from below.
    bool lower_bound;
    std::optional<std::vector<double>> per_support;
};

/// Exact s-restricted isometry constant
///   delta_s = max over supports S of ||Phi_S* Phi_S - Id||_{2->2},
/// enumerating supports of size exactly s (sufficient by monotonicity of
/// the constant in s). Throws CapExceededError if C(n, s) > cap.
RipEstimate exact_delta_s(const QuatMatrix& phi, std::size_t s,
                          std::uint64_t cap = kDefaultEnumerationCap,
                          bool keep_per_support = false);

/// Support pool selection for the empirical estimator.
struct SupportSampling {
    enum class Mode { All, Random };
    Mode mode = Mode::All;
    std::size_t count = 0;  // number of sampled supports in Random mode

    static SupportSampling all() { return {Mode::All, 0}; }
    static SupportSampling random(std::size_t count) {
        return {Mode::Random, count};
    }
};

/// Empirical delta_s: max of | ||Phi x||^2 - 1 | over sampled s-sparse unit
/// vectors (a lower bound on the exact constant, nondecreasing in the pool).
/// All mode enumerates every support (subject to cap) and derives one child
/// stream per support; Random mode draws supports from child stream 0 and
/// vector entries from child stream 1, sequentially, so a larger pool
/// extends a smaller one drawn from the same stream.
RipEstimate empirical_delta_s(const QuatMatrix& phi, std::size_t s,
                              const SupportSampling& supports,
                              std::size_t vectors_per_support, RngStream rng,
                              std::uint64_t cap = kDefaultEnumerationCap);

/// One realization of the empirical RIC/RIV quadruple.
struct RicRivSample {
    double ric_left;   // 1 - min R over all supports x all vectors
    double ric_right;  // max R - 1 over all supports x all vectors
    double riv_left;   // 1 - min R over the first vector of each support
    double riv_right;  // max R - 1 over the first vector of each support
};

/// Estimates (delta_s^L, delta_s^R, Delta_s^L, Delta_s^R) for one matrix
/// realization. The RIV values use only the first vector of each support's
/// pool, so they are dominated by the RIC values by construction.
RicRivSample empirical_ric_riv(const QuatMatrix& phi, std::size_t s,
                               std::size_t vectors_per_support, RngStream rng,
                               std::uint64_t cap = kDefaultEnumerationCap);

/// Smallest m with m >= (10/3) delta^-2 (14 s + ln(2/eps)): rows sufficient
/// for ||Phi_S* Phi_S - Id|| < delta on one fixed support with probability
/// at least 1 - eps. Requires delta in (0, 1/sqrt(3)), eps in (0, 1), s >= 1.
std::uint64_t sample_size_fixed_support(double delta, double eps, std::uint64_t s);

/// Smallest m with m >= (10/3) delta^-2 (15 s + ln(2/eps) + s ln(n/s)):
/// rows sufficient for the full RIP delta_s < delta with probability at
/// least 1 - eps. Requires delta in (0, 1/sqrt(3)), eps in (0, 1), 1 <= s <= n.
std::uint64_t sample_size_rip(double delta, double eps, std::uint64_t s,
                              std::uint64_t n);

/// Log of the covering-number bound (1 + 2/gamma)^(4s) for a gamma-covering
/// of the s-sparse unit sphere: returns 4 s ln(1 + 2/gamma). Requires
/// 0 < gamma < 1/2. At gamma = 2/(e^(7/2) - 1) this is exactly 14 s.
double covering_count_bound(std::uint64_t s, double gamma);

}  // namespace qrip
