// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>

namespace qrip {

/// Counter-based 64-bit pseudorandom stream (splitmix64). The k-th output is
/// a pure function of (stream seed, k):
///
///   output_k = mix(seed + (k + 1) * GOLDEN)
///
/// where GOLDEN = 0x9E3779B97F4A7C15 and mix is the splitmix64 finalizer
///
///   x ^= x >> 30;  x *= 0xBF58476D1CE4E5B9;
///   x ^= x >> 27;  x *= 0x94D049BB133111EB;
///   x ^= x >> 31;
///
/// Child streams are derived from the stream's seed (not its position), so
/// derivation is independent of how much of the parent has been consumed:
///
///   child_seed = mix(seed ^ ((child_id + 1) * GOLDEN))
///
/// Identical (master seed, derivation path) therefore yields an identical
/// sequence on any host and under any parallel schedule.
class RngStream {
public:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    explicit RngStream(std::uint64_t seed) : seed_(seed) {}
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : RngStream(RngStream(master_seed).derive(stream_id)) {}

    /// splitmix64 avalanche mixer (published so results can be reproduced
    /// outside this library).
    static constexpr std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t seed() const { return seed_; }

    /// Independent child stream; does not consume from or advance this one.
    RngStream derive(std::uint64_t child_id) const {
        return RngStream(mix(seed_ ^ ((child_id + 1) * kGolden)));
    }

    std::uint64_t next_u64() { return mix(seed_ + (++counter_) * kGolden); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound) by scaling; bound must be positive and
    /// small against 2^53 (always the case for index sampling here).
    std::uint64_t uniform_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(bound));
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// One Box-Muller pair of independent standard normal deviates. Consumes
/// exactly two uniforms, so the draw count per sample is fixed and the
/// stream layout is reproducible.
std::pair<double, double> normal_pair(RngStream& rng);

/// Single standard normal deviate (one Box-Muller pair, second value unused).
double standard_normal(RngStream& rng);

}  // namespace qrip
