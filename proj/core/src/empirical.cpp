// SPDX-License-Identifier: Apache-2.0
#include "qrip/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qrip/io_util.hpp"

namespace qrip {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : sorted_(std::move(samples)) {
    if (sorted_.empty())
        throw std::invalid_argument("EmpiricalDistribution: need at least one sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalDistribution::mean() const {
    double s = 0.0;
    for (double v : sorted_) s += v;
    return s / static_cast<double>(size());
}

double EmpiricalDistribution::variance() const {
    if (size() < 2) return 0.0;
    const double m = mean();
    double s = 0.0;
    for (double v : sorted_) s += (v - m) * (v - m);
    return s / static_cast<double>(size() - 1);
}

double EmpiricalDistribution::median() const {
    const std::size_t n = size();
    return n % 2 == 1 ? sorted_[n / 2]
                      : 0.5 * (sorted_[n / 2 - 1] + sorted_[n / 2]);
}

double EmpiricalDistribution::ecdf(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(size());
}

std::vector<HistogramBin> EmpiricalDistribution::histogram(std::size_t bins) const {
    if (bins == 0)
        throw std::invalid_argument("histogram: need at least one bin");
    const double lo = min(), hi = max();
    if (lo == hi) return {{lo, hi, size()}};

    std::vector<HistogramBin> out(bins);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t b = 0; b < bins; ++b)
        out[b] = {lo + width * static_cast<double>(b),
                  b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1), 0};
    for (double v : sorted_) {
        auto b = static_cast<std::size_t>((v - lo) / width);
        if (b >= bins) b = bins - 1;  // v == hi lands in the closed last bin
        ++out[b].count;
    }
    return out;
}

void EmpiricalDistribution::write_ecdf_csv(std::ostream& os) const {
    os << "value,ecdf\n";
    const auto n = static_cast<double>(size());
    for (std::size_t i = 0; i < size(); ++i)
        os << format_double(sorted_[i]) << ','
           << format_double(static_cast<double>(i + 1) / n) << '\n';
}

void EmpiricalDistribution::write_ecdf_csv(const std::filesystem::path& path) const {
    auto os = open_output(path);
    write_ecdf_csv(os);
}

void EmpiricalDistribution::write_histogram_csv(std::ostream& os,
                                                std::size_t bins) const {
    os << "bin_left,bin_right,count\n";
    for (const auto& bin : histogram(bins))
        os << format_double(bin.left) << ',' << format_double(bin.right) << ','
           << bin.count << '\n';
}

void EmpiricalDistribution::write_histogram_csv(const std::filesystem::path& path,
                                                std::size_t bins) const {
    auto os = open_output(path);
    write_histogram_csv(os, bins);
}

double ks_statistic(const EmpiricalDistribution& samples, const GammaParams& model) {
    const auto& xs = samples.sorted_samples();
    const auto n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = gamma_cdf(model, xs[i]);
        d = std::max(d, std::max(f - static_cast<double>(i) / n,
                                 static_cast<double>(i + 1) / n - f));
    }
    return d;
}

double ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
    const auto& xa = a.sorted_samples();
    const auto& xb = b.sorted_samples();
    const auto na = static_cast<double>(xa.size());
    const auto nb = static_cast<double>(xb.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < xa.size() && j < xb.size()) {
        const double x = std::min(xa[i], xb[j]);
        while (i < xa.size() && xa[i] <= x) ++i;
        while (j < xb.size() && xb[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na -
                                  static_cast<double>(j) / nb));
    }
    return d;
}

double ks_critical_value(std::size_t n, double alpha) {
    if (n == 0 || alpha <= 0.0 || alpha >= 1.0)
        throw std::invalid_argument("ks_critical_value: invalid arguments");
    return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

double ks_two_sample_critical_value(std::size_t n1, std::size_t n2, double alpha) {
    if (n1 == 0 || n2 == 0 || alpha <= 0.0 || alpha >= 1.0)
        throw std::invalid_argument("ks_two_sample_critical_value: invalid arguments");
    const auto a = static_cast<double>(n1), b = static_cast<double>(n2);
    return std::sqrt(-0.5 * std::log(alpha / 2.0)) * std::sqrt((a + b) / (a * b));
}

}  // namespace qrip
