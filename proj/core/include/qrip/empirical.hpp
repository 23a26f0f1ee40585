// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <vector>

#include "qrip/gamma.hpp"

namespace qrip {

struct HistogramBin {
    double left;
    double right;
    std::size_t count;
};

/// Sorted sample set with ECDF and histogram export. The ECDF is the
/// right-continuous step function #{x_i <= x} / N.
class EmpiricalDistribution {
public:
    explicit EmpiricalDistribution(std::vector<double> samples);

    std::size_t size() const { return sorted_.size(); }
    const std::vector<double>& sorted_samples() const { return sorted_; }
    double min() const { return sorted_.front(); }
    double max() const { return sorted_.back(); }

    double mean() const;
    /// Unbiased sample variance (N - 1 denominator).
    double variance() const;
    double median() const;

    double ecdf(double x) const;

    /// Equal-width bins over [min, max]; the rightmost bin is closed so the
    /// counts sum to N. A degenerate sample (min == max) yields one bin.
    std::vector<HistogramBin> histogram(std::size_t bins) const;

    /// CSV with header exactly `value,ecdf`: one row per sorted sample.
    void write_ecdf_csv(std::ostream& os) const;
    void write_ecdf_csv(const std::filesystem::path& path) const;

    /// CSV with header exactly `bin_left,bin_right,count`.
    void write_histogram_csv(std::ostream& os, std::size_t bins) const;
    void write_histogram_csv(const std::filesystem::path& path, std::size_t bins) const;

private:
    std::vector<double> sorted_;
};

/// One-sample Kolmogorov-Smirnov statistic against a Gamma model:
/// sup-distance between the ECDF and the model CDF, evaluated at the sample
/// points with both one-sided gaps.
double ks_statistic(const EmpiricalDistribution& samples, const GammaParams& model);

/// Two-sample Kolmogorov-Smirnov statistic: sup |ECDF_1 - ECDF_2| over the
/// merged sample grid.
double ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

/// Asymptotic one-sample critical value sqrt(-ln(alpha/2) / 2) / sqrt(n).
double ks_critical_value(std::size_t n, double alpha);

/// Asymptotic two-sample critical value c(alpha) * sqrt((n1 + n2)/(n1 n2)).
double ks_two_sample_critical_value(std::size_t n1, std::size_t n2, double alpha);

}  // namespace qrip
