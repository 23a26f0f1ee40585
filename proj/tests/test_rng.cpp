// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qrip/rng.hpp"

using namespace qrip;

TEST_CASE("identical seed and stream id reproduce the sequence") {
    RngStream a(12345, 7);
    RngStream b(12345, 7);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derivation is independent of consumption") {
    RngStream parent(99);
    RngStream child_before = parent.derive(3);
    for (int i = 0; i < 10; ++i) parent.next_u64();
    RngStream child_after = parent.derive(3);
    for (int i = 0; i < 100; ++i)
        CHECK(child_before.next_u64() == child_after.next_u64());
}

TEST_CASE("different stream ids decorrelate") {
    const std::size_t n = 100000;
    RngStream a(2024, 0);
    RngStream b(2024, 1);
    double sa = 0.0, sb = 0.0, sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = a.uniform01(), y = b.uniform01();
        sa += x; sb += y; sab += x * y; saa += x * x; sbb += y * y;
    }
    const double nd = static_cast<double>(n);
    const double cov = sab / nd - (sa / nd) * (sb / nd);
    const double corr = cov / std::sqrt((saa / nd - (sa / nd) * (sa / nd)) *
                                        (sbb / nd - (sb / nd) * (sb / nd)));
    CHECK(std::fabs(corr) < 0.01);
}

TEST_CASE("uniform01 range and mean") {
    RngStream rng(5);
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    // Standard error is about 0.00065, so this is a 5-sigma band.
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.0065));
}

TEST_CASE("normal pair moments") {
    RngStream rng(8);
    const int n = 500000;
    double sum = 0.0, sum_sq = 0.0, cross = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto [z0, z1] = normal_pair(rng);
        sum += z0 + z1;
        sum_sq += z0 * z0 + z1 * z1;
        cross += z0 * z1;
    }
    CHECK(std::fabs(sum / (2.0 * n)) < 0.005);
    CHECK(sum_sq / (2.0 * n) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::fabs(cross / n) < 0.005);
}
