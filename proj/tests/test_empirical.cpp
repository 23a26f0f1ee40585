// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "qrip/empirical.hpp"
#include "qrip/rng.hpp"
#include "test_util.hpp"

using namespace qrip;

TEST_CASE("construction and ecdf") {
    CHECK_THROWS_AS(EmpiricalDistribution({}), std::invalid_argument);

    const EmpiricalDistribution d({3.0, 1.0, 2.0, 2.0});
    CHECK(d.min() == 1.0);
    CHECK(d.max() == 3.0);
    CHECK(d.ecdf(0.5) == 0.0);
    CHECK(d.ecdf(1.0) == doctest::Approx(0.25));
    CHECK(d.ecdf(2.0) == doctest::Approx(0.75));  // right-continuous at ties
    CHECK(d.ecdf(10.0) == 1.0);
    CHECK(d.median() == doctest::Approx(2.0));
}

TEST_CASE("histogram covers the range and counts every sample") {
    RngStream rng(3);
    std::vector<double> xs;
    for (int i = 0; i < 5000; ++i) xs.push_back(rng.uniform01() * 7.0 - 2.0);
    const EmpiricalDistribution d(xs);
    const auto bins = d.histogram(16);
    REQUIRE(bins.size() == 16);
    CHECK(bins.front().left == d.min());
    CHECK(bins.back().right == d.max());
    std::size_t total = 0;
    for (std::size_t b = 0; b < bins.size(); ++b) {
        total += bins[b].count;
        if (b > 0) CHECK(bins[b].left == doctest::Approx(bins[b - 1].right));
    }
    CHECK(total == xs.size());

    const EmpiricalDistribution flat({2.5, 2.5, 2.5});
    const auto one = flat.histogram(8);
    REQUIRE(one.size() == 1);
    CHECK(one[0].count == 3);
}

TEST_CASE("csv headers are exact") {
    const EmpiricalDistribution d({1.0, 2.0});
    std::ostringstream ecdf, hist;
    d.write_ecdf_csv(ecdf);
    d.write_histogram_csv(hist, 2);
    CHECK(ecdf.str().substr(0, 11) == "value,ecdf\n");
    CHECK(hist.str().substr(0, 25) == "bin_left,bin_right,count\n");
    CHECK(ecdf.str() == "value,ecdf\n1,0.5\n2,1\n");
}

TEST_CASE("ks statistic of a single sample at the model median is 1/2") {
    const GammaParams exp1(1, 1);
    const double median = std::log(2.0);
    const EmpiricalDistribution d({median});
    CHECK(ks_statistic(d, exp1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("samples planted at model quantiles have tiny ks distance") {
    const GammaParams g(128, 128);
    const std::size_t n = 99;
    std::vector<double> xs;
    for (std::size_t i = 1; i <= n; ++i)
        xs.push_back(test::gamma_quantile(g, static_cast<double>(i) / (n + 1)));
    const EmpiricalDistribution d(xs);
    CHECK(ks_statistic(d, g) <= 1.0 / (n + 1) + 1e-9);
}

TEST_CASE("genuine Gamma samples pass the ks test at the 0.001 level") {
    // Independent sampling route: sum of 128 exponentials, rate 128.
    const GammaParams g(128, 128);
    RngStream rng(12345);
    std::vector<double> xs(100000);
    for (auto& x : xs) x = test::gamma_integer_shape_sample(rng, 128, 128.0);
    const EmpiricalDistribution d(xs);
    const double stat = ks_statistic(d, g);
    CHECK(stat < ks_critical_value(xs.size(), 0.001));
    CHECK(ks_critical_value(100000, 0.001) == doctest::Approx(0.0061648).epsilon(1e-4));
}

TEST_CASE("two-sample ks") {
    const EmpiricalDistribution a({1.0, 2.0, 3.0});
    CHECK(ks_two_sample(a, a) == 0.0);

    const EmpiricalDistribution b({10.0, 11.0});
    CHECK(ks_two_sample(a, b) == doctest::Approx(1.0));

    CHECK(ks_two_sample_critical_value(10000, 10000, 0.01) ==
          doctest::Approx(1.63 * std::sqrt(2.0 / 10000.0)).epsilon(2e-3));

    // Two independent draws from the same law stay under the 0.01 critical value.
    RngStream rng(777);
    std::vector<double> xs(20000), ys(20000);
    for (auto& x : xs) x = test::gamma_integer_shape_sample(rng, 32, 32.0);
    for (auto& y : ys) y = test::gamma_integer_shape_sample(rng, 32, 32.0);
    const double stat = ks_two_sample(EmpiricalDistribution(xs), EmpiricalDistribution(ys));
    CHECK(stat < ks_two_sample_critical_value(xs.size(), ys.size(), 0.01));
}
