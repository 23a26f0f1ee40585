// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrip/empirical.hpp"
#include "qrip/rip.hpp"
#include "qrip/subexp.hpp"

namespace qrip {

enum class ExperimentKind { Rayleigh, RicRiv, Deltas, SampleSize, VerifyMgf, VerifyTail };
enum class FieldChoice { Real, Quaternion, Both };

const char* experiment_name(ExperimentKind kind);

/// Configuration problem; carries the offending field name.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& config_field() const { return field_; }

private:
    std::string field_;
};

/// Signals a failed verification run (MGF certificate or tail bound).
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Rayleigh;
    FieldChoice field = FieldChoice::Quaternion;
    std::size_t m = 64;
    std::size_t n = 8;
    std::size_t s = 5;
    std::size_t matrix_trials = 1000;
    std::size_t vectors_per_support = 100;
    std::size_t total_vectors = 10000;
    std::uint64_t master_seed = 1;
    std::size_t histogram_bins = 50;
    std::size_t workers = 0;  // 0 = hardware concurrency
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    std::filesystem::path out_dir = "qrip_out";

    // sample-size mode grids
    std::vector<double> delta_grid = {0.5};
    std::vector<double> eps_grid = {0.01};
    std::vector<std::uint64_t> s_grid = {10};
    std::vector<std::uint64_t> n_grid = {10000};

    // verify-mgf / verify-tail grids
    std::vector<std::size_t> m_grid = {1, 4, 16, 64, 256};
    std::size_t mgf_grid_points = 1001;
    std::vector<double> t_grid = {0.1, 0.2, 0.3, 0.4, 0.5};

    /// Per-kind defaults (desk scale; full-scale runs are config
    /// overrides away).
    static ExperimentConfig defaults(ExperimentKind kind);

    /// Throws ConfigError naming the first violated field.
    void validate() const;
};

/// Applies one key=value pair; throws ConfigError on unknown keys or
/// malformed values. Accepted keys: field, m, n, s, trials,
/// vectors_per_support, total_vectors, seed, bins, workers, cap, out,
/// delta_grid, eps_grid, s_grid, n_grid, m_grid, t_grid, mgf_grid_points.
void apply_config_key(ExperimentConfig& cfg, const std::string& key,
                      const std::string& value);

/// Defaults for `kind`, overlaid with the flat key=value config file (if
/// any), overlaid with `overrides` (CLI flags win over file values).
/// The merged configuration is validated before being returned.
ExperimentConfig resolve_config(
    ExperimentKind kind, const std::optional<std::filesystem::path>& config_file,
    const std::vector<std::pair<std::string, std::string>>& overrides);

/// Deterministic helper: runs fn(0), .., fn(count-1) on `workers` threads.
/// Results must be written to per-index slots; the schedule carries no
/// information to the outputs.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn);

/// Run manifest: config echo, version, duration, per-output checksums.
/// Identical config and seed reproduce identical checksums.
struct RunManifest {
    std::string experiment;
    std::string version;
    std::map<std::string, std::string> config_echo;
    double duration_seconds = 0.0;
    std::map<std::string, std::string> output_checksums;

    void write(const std::filesystem::path& path) const;
};

struct RayleighFieldStats {
    RayleighFieldStats(Field field_, GammaParams model_)
        : field(field_), model(model_) {}

    Field field;
    GammaParams model;          // Gamma(2m, 2m) or Gamma(m/2, m/2)
    double mean = 0.0;
    double variance = 0.0;
    double ks = 0.0;            // one-sample KS against the model
    double ks_critical = 0.0;   // asymptotic critical value at level 0.001
    double two_sample_ks = 0.0; // R(x1) vs R(x2) on shared matrices
    double two_sample_critical = 0.0;  // level 0.01
    std::vector<double> samples;       // R(x1), indexed by trial
    std::vector<double> samples_alt;   // R(x2), indexed by trial
};

struct RayleighResult {
    std::vector<RayleighFieldStats> per_field;
    RunManifest manifest;
};

struct RicRivResult {
    std::vector<RicRivSample> realizations;
    std::size_t ordering_violations = 0;  // RIV > RIC occurrences (expect 0)
    RunManifest manifest;
};

struct DeltasFieldResult {
    Field field;
    std::vector<double> values;  // empirical delta_s per realization
    double median = 0.0;
};

struct DeltasResult {
    std::vector<DeltasFieldResult> per_field;
    RunManifest manifest;
};

struct SampleSizeRow {
    double delta;
    double eps;
    std::uint64_t s;
    std::uint64_t n;
    std::optional<std::uint64_t> m_fixed_support;
    std::optional<std::uint64_t> m_rip;
    std::string status;  // "ok" or the per-row error
};

struct SampleSizeResult {
    std::vector<SampleSizeRow> rows;
    RunManifest manifest;
};

struct MgfRow {
    std::string family;  // "quaternion" (Gamma(2m,2m)) or "real" (Gamma(m/2,m/2))
    std::size_t m;
    GammaParams params;
    MgfReport report;
};

struct VerifyMgfResult {
    std::vector<MgfRow> rows;
    bool all_passed = false;
    RunManifest manifest;
};

struct TailRow {
    double t;
    double empirical;
    double bound;
    bool pass;
};

struct VerifyTailResult {
    std::vector<TailRow> rows;
    bool all_passed = false;
    RunManifest manifest;
};

/// Rayleigh-quotient law experiment: fresh matrices against one fixed
/// s-sparse unit vector (plus a second vector for the independence-of-x
/// check), with ECDF/histogram CSVs and a fit report per field.
RayleighResult run_rayleigh(const ExperimentConfig& cfg);

/// RIC/RIV experiment over all size-s supports: per-realization quadruples
/// and the four marginal ECDF/histogram CSVs.
RicRivResult run_ricriv(const ExperimentConfig& cfg);

/// Empirical delta_s distribution, supports sampled uniformly at random;
/// real and quaternion runs are seed-paired through field-free stream paths.
DeltasResult run_deltas(const ExperimentConfig& cfg);

/// Tabulates the fixed-support and RIP sample-size bounds over the grids.
SampleSizeResult run_sample_size(const ExperimentConfig& cfg);

/// Deterministic MGF certificate check for Gamma(2m,2m) and Gamma(m/2,m/2)
/// over the m grid.
VerifyMgfResult run_verify_mgf(const ExperimentConfig& cfg);

/// Empirical Rayleigh tail frequencies against the concentration bound.
VerifyTailResult run_verify_tail(const ExperimentConfig& cfg);

}  // namespace qrip
