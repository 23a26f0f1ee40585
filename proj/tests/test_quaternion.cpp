// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrip/quaternion.hpp"
#include "test_util.hpp"

using namespace qrip;

TEST_CASE("multiplication table") {
    CHECK(approx_equal(Quaternion::i() * Quaternion::j(), Quaternion::k()));
    CHECK(approx_equal(Quaternion::j() * Quaternion::i(), -Quaternion::k()));
    CHECK(approx_equal(Quaternion::j() * Quaternion::k(), Quaternion::i()));
    CHECK(approx_equal(Quaternion::k() * Quaternion::j(), -Quaternion::i()));
    CHECK(approx_equal(Quaternion::k() * Quaternion::i(), Quaternion::j()));
    CHECK(approx_equal(Quaternion::i() * Quaternion::k(), -Quaternion::j()));
    CHECK(approx_equal(Quaternion::i() * Quaternion::i(), -Quaternion::one()));
    CHECK(approx_equal(Quaternion::j() * Quaternion::j(), -Quaternion::one()));
    CHECK(approx_equal(Quaternion::k() * Quaternion::k(), -Quaternion::one()));
}

TEST_CASE("one is the neutral element") {
    RngStream rng(11);
    for (int i = 0; i < 100; ++i) {
        const Quaternion q = test::random_quaternion(rng);
        CHECK(approx_equal(Quaternion::one() * q, q));
        CHECK(approx_equal(q * Quaternion::one(), q));
    }
}

TEST_CASE("norm values") {
    CHECK(qnorm({1, 1, 1, 1}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(qnorm(Quaternion::zero()) == 0.0);
    // (1+i)(1+j) = 1 + i + j + k, so the norm is 2.
    const Quaternion p{1, 1, 0, 0}, q{1, 0, 1, 0};
    CHECK(approx_equal(p * q, {1, 1, 1, 1}));
    CHECK(qnorm(p * q) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("norm is multiplicative and conjugation reverses products") {
    RngStream rng(17);
    for (int i = 0; i < 2000; ++i) {
        const Quaternion p = test::random_quaternion(rng);
        const Quaternion q = test::random_quaternion(rng);
        CHECK(qnorm(p * q) == doctest::Approx(qnorm(p) * qnorm(q)).epsilon(1e-12));
        CHECK(approx_equal((p * q).conj(), q.conj() * p.conj()));
        CHECK(approx_equal(q * q.conj(), Quaternion::real(q.norm_sq()), 1e-12));
    }
}

TEST_CASE("associativity and distributivity") {
    RngStream rng(23);
    for (int i = 0; i < 1000; ++i) {
        const Quaternion p = test::random_quaternion(rng);
        const Quaternion q = test::random_quaternion(rng);
        const Quaternion r = test::random_quaternion(rng);
        CHECK(approx_equal((p * q) * r, p * (q * r), 1e-12));
        CHECK(approx_equal(p * (q + r), p * q + p * r, 1e-12));
        CHECK(approx_equal((p + q) * r, p * r + q * r, 1e-12));
    }
}
