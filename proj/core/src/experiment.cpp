// SPDX-License-Identifier: Apache-2.0
#include "qrip/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qrip/io_util.hpp"
#include "qrip/sampling.hpp"
#include "qrip/version.hpp"

namespace qrip {

namespace {

// Stream derivation roles. Paths never encode the scalar field, so real and
// quaternion runs of the same experiment consume identical support/vector
// streams (seed pairing).
constexpr std::uint64_t kRoleFixedVector = 1;
constexpr std::uint64_t kRoleMatrix = 2;
constexpr std::uint64_t kRoleEstimator = 3;

RngStream derive_path(std::uint64_t master,
                      std::initializer_list<std::uint64_t> path) {
    RngStream s(master);
    for (auto id : path) s = s.derive(id);
    return s;
}

std::vector<Field> selected_fields(FieldChoice choice) {
    switch (choice) {
        case FieldChoice::Real: return {Field::Real};
        case FieldChoice::Quaternion: return {Field::Quaternion};
        case FieldChoice::Both: return {Field::Real, Field::Quaternion};
    }
    return {};
}

GammaParams rayleigh_model(Field field, std::size_t m) {
    const double md = static_cast<double>(m);
    return field == Field::Quaternion ? GammaParams(2.0 * md, 2.0 * md)
                                      : GammaParams(md / 2.0, md / 2.0);
}

std::size_t effective_workers(const ExperimentConfig& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

std::map<std::string, std::string> echo_config(const ExperimentConfig& cfg) {
    std::map<std::string, std::string> echo;
    echo["experiment"] = experiment_name(cfg.kind);
    switch (cfg.field) {
        case FieldChoice::Real: echo["field"] = "real"; break;
        case FieldChoice::Quaternion: echo["field"] = "quaternion"; break;
        case FieldChoice::Both: echo["field"] = "both"; break;
    }
    echo["m"] = std::to_string(cfg.m);
    echo["n"] = std::to_string(cfg.n);
    echo["s"] = std::to_string(cfg.s);
    echo["trials"] = std::to_string(cfg.matrix_trials);
    echo["vectors_per_support"] = std::to_string(cfg.vectors_per_support);
    echo["total_vectors"] = std::to_string(cfg.total_vectors);
    echo["seed"] = std::to_string(cfg.master_seed);
    echo["bins"] = std::to_string(cfg.histogram_bins);
    echo["workers"] = std::to_string(cfg.workers);
    echo["cap"] = std::to_string(cfg.enumeration_cap);
    echo["out"] = cfg.out_dir.string();
    return echo;
}

RunManifest finalize_manifest(
    const ExperimentConfig& cfg, const Timer& timer,
    const std::vector<std::string>& files,
    const std::map<std::string, std::string>& extra_echo = {}) {
    RunManifest manifest;
    manifest.experiment = experiment_name(cfg.kind);
    manifest.version = kVersion;
    manifest.config_echo = echo_config(cfg);
    for (const auto& [key, value] : extra_echo) manifest.config_echo[key] = value;
    for (const auto& name : files)
        manifest.output_checksums[name] = file_checksum(cfg.out_dir / name);
    manifest.duration_seconds = timer.seconds();
    manifest.write(cfg.out_dir / "manifest.json");
    return manifest;
}

void write_ecdf_and_histogram(const ExperimentConfig& cfg,
                              const EmpiricalDistribution& dist,
                              const std::string& name,
                              std::vector<std::string>& files) {
    dist.write_ecdf_csv(cfg.out_dir / ("ecdf_" + name + ".csv"));
    dist.write_histogram_csv(cfg.out_dir / ("hist_" + name + ".csv"),
                             cfg.histogram_bins);
    files.push_back("ecdf_" + name + ".csv");
    files.push_back("hist_" + name + ".csv");
}

}  // namespace

const char* experiment_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Rayleigh: return "rayleigh";
        case ExperimentKind::RicRiv: return "ricriv";
        case ExperimentKind::Deltas: return "deltas";
        case ExperimentKind::SampleSize: return "sample-size";
        case ExperimentKind::VerifyMgf: return "verify-mgf";
        case ExperimentKind::VerifyTail: return "verify-tail";
    }
    return "unknown";
}

ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind) {
    ExperimentConfig cfg;
    cfg.kind = kind;
    switch (kind) {
        case ExperimentKind::Rayleigh:
            cfg.field = FieldChoice::Quaternion;
            cfg.m = 64; cfg.n = 8; cfg.s = 5;
            cfg.matrix_trials = 1000;
            break;
        case ExperimentKind::RicRiv:
            cfg.field = FieldChoice::Real;  // classical RIC/RIV setting: real Gaussian matrices
            cfg.m = 64; cfg.n = 8; cfg.s = 5;
            cfg.matrix_trials = 1000;
            cfg.vectors_per_support = 100;
            break;
        case ExperimentKind::Deltas:
            cfg.field = FieldChoice::Both;
            cfg.m = 32; cfg.n = 64; cfg.s = 8;
            cfg.matrix_trials = 200;
            cfg.total_vectors = 10000;
            break;
        case ExperimentKind::SampleSize:
            break;
        case ExperimentKind::VerifyMgf:
            break;
        case ExperimentKind::VerifyTail:
            cfg.field = FieldChoice::Quaternion;
            cfg.m = 64; cfg.n = 8; cfg.s = 5;
            cfg.matrix_trials = 100000;
            break;
    }
    return cfg;
}

void ExperimentConfig::validate() const {
    const bool uses_matrix = kind == ExperimentKind::Rayleigh ||
                             kind == ExperimentKind::RicRiv ||
                             kind == ExperimentKind::Deltas ||
                             kind == ExperimentKind::VerifyTail;
    if (uses_matrix) {
        if (m == 0) throw ConfigError("m", "must be at least 1");
        if (n == 0) throw ConfigError("n", "must be at least 1");
        if (s == 0) throw ConfigError("s", "must be at least 1");
        if (s > n) throw ConfigError("s", "must not exceed n");
        if (matrix_trials == 0) throw ConfigError("trials", "must be at least 1");
    }
    if (histogram_bins == 0) throw ConfigError("bins", "must be at least 1");
    if (enumeration_cap == 0) throw ConfigError("cap", "must be at least 1");
    switch (kind) {
        case ExperimentKind::Rayleigh:
            break;
        case ExperimentKind::RicRiv:
            if (field == FieldChoice::Both)
                throw ConfigError("field", "ricriv runs a single field at a time");
            if (vectors_per_support == 0)
                throw ConfigError("vectors_per_support", "must be at least 1");
            if (binomial_capped(n, s, enumeration_cap) > enumeration_cap)
                throw ConfigError("s", "C(n, s) exceeds the enumeration cap");
            break;
        case ExperimentKind::Deltas:
            if (total_vectors == 0)
                throw ConfigError("total_vectors", "must be at least 1");
            break;
        case ExperimentKind::SampleSize:
            if (delta_grid.empty()) throw ConfigError("delta_grid", "must be nonempty");
            if (eps_grid.empty()) throw ConfigError("eps_grid", "must be nonempty");
            if (s_grid.empty()) throw ConfigError("s_grid", "must be nonempty");
            if (n_grid.empty()) throw ConfigError("n_grid", "must be nonempty");
            break;
        case ExperimentKind::VerifyMgf:
            if (m_grid.empty()) throw ConfigError("m_grid", "must be nonempty");
            for (std::size_t mm : m_grid)
                if (mm == 0) throw ConfigError("m_grid", "entries must be at least 1");
            if (mgf_grid_points < 2)
                throw ConfigError("mgf_grid_points", "must be at least 2");
            break;
        case ExperimentKind::VerifyTail:
            if (field != FieldChoice::Quaternion)
                throw ConfigError("field",
                                  "verify-tail checks the quaternion bound only");
            if (t_grid.empty()) throw ConfigError("t_grid", "must be nonempty");
            for (double t : t_grid)
                if (t < 0.0 || t > 0.5)
                    throw ConfigError("t_grid", "entries must lie in [0, 1/2]");
            break;
    }
}

namespace {

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key, "expected an unsigned integer, got '" + value + "'");
    }
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key, "expected a number, got '" + value + "'");
    }
}

std::vector<std::string> split_csv_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(value);
    while (std::getline(is, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return out;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& key, const std::string& value,
                          Parse parse) {
    std::vector<T> out;
    for (const auto& item : split_csv_list(value)) out.push_back(parse(key, item));
    if (out.empty()) throw ConfigError(key, "expected a nonempty list");
    return out;
}

}  // namespace

void apply_config_key(ExperimentConfig& cfg, const std::string& key,
                      const std::string& value) {
    if (key == "field") {
        if (value == "real") cfg.field = FieldChoice::Real;
        else if (value == "quaternion") cfg.field = FieldChoice::Quaternion;
        else if (value == "both") cfg.field = FieldChoice::Both;
        else throw ConfigError(key, "expected real|quaternion|both, got '" + value + "'");
    } else if (key == "m") {
        cfg.m = parse_u64(key, value);
    } else if (key == "n") {
        cfg.n = parse_u64(key, value);
    } else if (key == "s") {
        cfg.s = parse_u64(key, value);
    } else if (key == "trials") {
        cfg.matrix_trials = parse_u64(key, value);
    } else if (key == "vectors_per_support") {
        cfg.vectors_per_support = parse_u64(key, value);
    } else if (key == "total_vectors") {
        cfg.total_vectors = parse_u64(key, value);
    } else if (key == "seed") {
        cfg.master_seed = parse_u64(key, value);
    } else if (key == "bins") {
        cfg.histogram_bins = parse_u64(key, value);
    } else if (key == "workers") {
        cfg.workers = parse_u64(key, value);
    } else if (key == "cap") {
        cfg.enumeration_cap = parse_u64(key, value);
    } else if (key == "out") {
        if (value.empty()) throw ConfigError(key, "expected a directory path");
        cfg.out_dir = value;
    } else if (key == "delta_grid") {
        cfg.delta_grid = parse_list<double>(key, value, parse_double);
    } else if (key == "eps_grid") {
        cfg.eps_grid = parse_list<double>(key, value, parse_double);
    } else if (key == "s_grid") {
        cfg.s_grid = parse_list<std::uint64_t>(key, value, parse_u64);
    } else if (key == "n_grid") {
        cfg.n_grid = parse_list<std::uint64_t>(key, value, parse_u64);
    } else if (key == "m_grid") {
        cfg.m_grid = parse_list<std::size_t>(key, value, parse_u64);
    } else if (key == "t_grid") {
        cfg.t_grid = parse_list<double>(key, value, parse_double);
    } else if (key == "mgf_grid_points") {
        cfg.mgf_grid_points = parse_u64(key, value);
    } else {
        throw ConfigError(key, "unknown configuration key");
    }
}

ExperimentConfig resolve_config(
    ExperimentKind kind, const std::optional<std::filesystem::path>& config_file,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
    ExperimentConfig cfg = ExperimentConfig::defaults(kind);
    if (config_file) {
        std::ifstream is(*config_file);
        if (!is)
            throw ConfigError("config", "cannot open file: " + config_file->string());
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto ws = line.find_first_not_of(" \t\r\n");
            if (ws == std::string::npos) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config", "line " + std::to_string(lineno) +
                                                ": expected key = value");
            auto trim = [](std::string sv) {
                const auto b = sv.find_first_not_of(" \t\r\n");
                const auto e = sv.find_last_not_of(" \t\r\n");
                return b == std::string::npos ? std::string()
                                              : sv.substr(b, e - b + 1);
            };
            apply_config_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
    }
    for (const auto& [key, value] : overrides) apply_config_key(cfg, key, value);
    cfg.validate();
    return cfg;
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < count; i += workers) fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

void RunManifest::write(const std::filesystem::path& path) const {
    nlohmann::json doc;
    doc["toolkit"] = "qrip";
    doc["version"] = version;
    doc["experiment"] = experiment;
    doc["config"] = config_echo;
    doc["duration_seconds"] = duration_seconds;
    doc["outputs"] = output_checksums;
    auto os = open_output(path);
    os << doc.dump(2) << '\n';
}

RayleighResult run_rayleigh(const ExperimentConfig& cfg) {
    cfg.validate();
    std::filesystem::create_directories(cfg.out_dir);
    Timer timer;
    const std::size_t workers = effective_workers(cfg);
    const GaussianSpec matrix_spec{Field::Quaternion, 1.0 / static_cast<double>(cfg.m)};

    RayleighResult result;
    std::vector<std::string> files;
    for (Field field : selected_fields(cfg.field)) {
        // Two distinct fixed sparse unit vectors; all matrices are shared
        // between them, so the x-independence check uses paired samples.
        QuatVector x[2];
        for (std::uint64_t which : {0u, 1u}) {
            RngStream vs = derive_path(cfg.master_seed, {kRoleFixedVector, which + 1});
            const auto support = sample_support(vs, cfg.n, cfg.s);
            x[which] = sample_sparse_unit_vector(vs, cfg.n, support, field);
        }

        std::vector<double> r_main(cfg.matrix_trials);
        std::vector<double> r_alt(cfg.matrix_trials);
        parallel_for(cfg.matrix_trials, workers, [&](std::size_t t) {
            RngStream ms = derive_path(cfg.master_seed, {kRoleMatrix, t});
            GaussianSpec spec = matrix_spec;
            spec.field = field;
            const QuatMatrix phi = sample_gaussian_matrix(ms, cfg.m, cfg.n, spec);
            r_main[t] = rayleigh_quotient(phi, x[0]);
            r_alt[t] = rayleigh_quotient(phi, x[1]);
        });

        RayleighFieldStats stats(field, rayleigh_model(field, cfg.m));
        const EmpiricalDistribution dist(r_main);
        const EmpiricalDistribution dist_alt(r_alt);
        stats.mean = dist.mean();
        stats.variance = dist.variance();
        stats.ks = ks_statistic(dist, stats.model);
        stats.ks_critical = ks_critical_value(dist.size(), 0.001);
        stats.two_sample_ks = ks_two_sample(dist, dist_alt);
        stats.two_sample_critical =
            ks_two_sample_critical_value(dist.size(), dist_alt.size(), 0.01);
        stats.samples = std::move(r_main);
        stats.samples_alt = std::move(r_alt);

        const std::string name = std::string("rayleigh_") + field_name(field);
        write_ecdf_and_histogram(cfg, dist, name, files);

        nlohmann::json fit;
        fit["field"] = field_name(field);
        fit["model"] = {{"alpha", stats.model.alpha}, {"beta", stats.model.beta}};
        fit["trials"] = cfg.matrix_trials;
        fit["mean"] = stats.mean;
        fit["variance"] = stats.variance;
        fit["ks_statistic"] = stats.ks;
        fit["ks_critical_0p001"] = stats.ks_critical;
        fit["independence_check"] = {{"two_sample_ks", stats.two_sample_ks},
                                     {"critical_0p01", stats.two_sample_critical}};
        const std::string fit_name = "fit_" + name + ".json";
        {
            auto os = open_output(cfg.out_dir / fit_name);
            os << fit.dump(2) << '\n';
        }
        files.push_back(fit_name);

        result.per_field.push_back(std::move(stats));
    }
    result.manifest = finalize_manifest(cfg, timer, files);
    return result;
}

RicRivResult run_ricriv(const ExperimentConfig& cfg) {
    cfg.validate();
    std::filesystem::create_directories(cfg.out_dir);
    Timer timer;
    const std::size_t workers = effective_workers(cfg);
    const Field field = cfg.field == FieldChoice::Real ? Field::Real : Field::Quaternion;

    RicRivResult result;
    result.realizations.resize(cfg.matrix_trials);
    parallel_for(cfg.matrix_trials, workers, [&](std::size_t t) {
        RngStream ms = derive_path(cfg.master_seed, {kRoleMatrix, t});
        const QuatMatrix phi = sample_gaussian_matrix(
            ms, cfg.m, cfg.n, {field, 1.0 / static_cast<double>(cfg.m)});
        result.realizations[t] = empirical_ric_riv(
            phi, cfg.s, cfg.vectors_per_support,
            derive_path(cfg.master_seed, {kRoleEstimator, t}), cfg.enumeration_cap);
    });

    std::vector<double> ric_left, ric_right, riv_left, riv_right;
    for (const auto& q : result.realizations) {
        ric_left.push_back(q.ric_left);
        ric_right.push_back(q.ric_right);
        riv_left.push_back(q.riv_left);
        riv_right.push_back(q.riv_right);
        if (q.riv_left > q.ric_left || q.riv_right > q.ric_right)
            ++result.ordering_violations;
    }

    std::vector<std::string> files;
    {
        auto os = open_output(cfg.out_dir / "realizations.csv");
        os << "trial,ric_left,ric_right,riv_left,riv_right\n";
        for (std::size_t t = 0; t < result.realizations.size(); ++t) {
            const auto& q = result.realizations[t];
            os << t << ',' << format_double(q.ric_left) << ','
               << format_double(q.ric_right) << ',' << format_double(q.riv_left)
               << ',' << format_double(q.riv_right) << '\n';
        }
        files.push_back("realizations.csv");
    }
    write_ecdf_and_histogram(cfg, EmpiricalDistribution(ric_left), "ric_left", files);
    write_ecdf_and_histogram(cfg, EmpiricalDistribution(ric_right), "ric_right", files);
    write_ecdf_and_histogram(cfg, EmpiricalDistribution(riv_left), "riv_left", files);
    write_ecdf_and_histogram(cfg, EmpiricalDistribution(riv_right), "riv_right", files);

    result.manifest = finalize_manifest(
        cfg, timer, files,
        {{"estimate_semantics", "empirical max/min over finite vector pools; "
                                "lower bounds on the one-sided constants"}});
    return result;
}

DeltasResult run_deltas(const ExperimentConfig& cfg) {
    cfg.validate();
    std::filesystem::create_directories(cfg.out_dir);
    Timer timer;
    const std::size_t workers = effective_workers(cfg);

    DeltasResult result;
    for (Field field : selected_fields(cfg.field)) {
        DeltasFieldResult fr;
        fr.field = field;
        fr.values.resize(cfg.matrix_trials);
        parallel_for(cfg.matrix_trials, workers, [&](std::size_t t) {
            RngStream ms = derive_path(cfg.master_seed, {kRoleMatrix, t});
            const QuatMatrix phi = sample_gaussian_matrix(
                ms, cfg.m, cfg.n, {field, 1.0 / static_cast<double>(cfg.m)});
            const RipEstimate est = empirical_delta_s(
                phi, cfg.s, SupportSampling::random(cfg.total_vectors), 1,
                derive_path(cfg.master_seed, {kRoleEstimator, t}),
                cfg.enumeration_cap);
            fr.values[t] = est.value;
        });
        fr.median = EmpiricalDistribution(fr.values).median();
        result.per_field.push_back(std::move(fr));
    }

    std::vector<std::string> files;
    {
        auto os = open_output(cfg.out_dir / "realizations.csv");
        os << "trial";
        for (const auto& fr : result.per_field)
            os << ",delta_s_" << field_name(fr.field);
        os << '\n';
        for (std::size_t t = 0; t < cfg.matrix_trials; ++t) {
            os << t;
            for (const auto& fr : result.per_field)
                os << ',' << format_double(fr.values[t]);
            os << '\n';
        }
        files.push_back("realizations.csv");
    }
    for (const auto& fr : result.per_field)
        write_ecdf_and_histogram(cfg, EmpiricalDistribution(fr.values),
                                 std::string("delta_s_") + field_name(fr.field),
                                 files);

    result.manifest = finalize_manifest(
        cfg, timer, files,
        {{"estimate_semantics",
          "empirical delta_s is a lower bound on the exact constant"}});
    return result;
}

SampleSizeResult run_sample_size(const ExperimentConfig& cfg) {
    cfg.validate();
    std::filesystem::create_directories(cfg.out_dir);
    Timer timer;

    SampleSizeResult result;
    for (double delta : cfg.delta_grid)
        for (double eps : cfg.eps_grid)
            for (std::uint64_t s : cfg.s_grid)
                for (std::uint64_t n : cfg.n_grid) {
                    SampleSizeRow row{delta, eps, s, n, std::nullopt, std::nullopt, "ok"};
                    // Out-of-range grid points are reported per row, not fatal.
                    try {
                        row.m_fixed_support = sample_size_fixed_support(delta, eps, s);
                        row.m_rip = sample_size_rip(delta, eps, s, n);
                    } catch (const std::domain_error& err) {
                        row.status = err.what();
                    }
                    result.rows.push_back(std::move(row));
                }

    std::vector<std::string> files;
    {
        auto os = open_output(cfg.out_dir / "sample_size.csv");
        os << "delta,epsilon,s,n,m_fixed_support,m_rip,status\n";
        for (const auto& row : result.rows) {
            os << format_double(row.delta) << ',' << format_double(row.eps) << ','
               << row.s << ',' << row.n << ',';
            if (row.m_fixed_support) os << *row.m_fixed_support;
            os << ',';
            if (row.m_rip) os << *row.m_rip;
            os << ',' << row.status << '\n';
        }
        files.push_back("sample_size.csv");
    }
    result.manifest = finalize_manifest(cfg, timer, files);
    return result;
}

VerifyMgfResult run_verify_mgf(const ExperimentConfig& cfg) {
    cfg.validate();
    std::filesystem::create_directories(cfg.out_dir);
    Timer timer;

    VerifyMgfResult result;
    result.all_passed = true;
    for (std::size_t m : cfg.m_grid) {
        const double md = static_cast<double>(m);
        const GammaParams quaternion_law(2.0 * md, 2.0 * md);
        const GammaParams real_law(md / 2.0, md / 2.0);
        for (const auto& [family, params] :
             {std::pair<const char*, GammaParams>{"quaternion", quaternion_law},
              std::pair<const char*, GammaParams>{"real", real_law}}) {
            MgfRow row{family, m, params,
                       verify_mgf_bound(params, cfg.mgf_grid_points)};
            result.all_passed = result.all_passed && row.report.passed;
            result.rows.push_back(std::move(row));
        }
    }

    std::vector<std::string> files;
    {
        auto os = open_output(cfg.out_dir / "mgf_report.csv");
        os << "family,m,alpha,beta,grid,max_ratio,pass\n";
        for (const auto& row : result.rows)
            os << row.family << ',' << row.m << ',' << format_double(row.params.alpha)
               << ',' << format_double(row.params.beta) << ',' << row.report.grid
               << ',' << format_double(row.report.max_ratio) << ','
               << (row.report.passed ? 1 : 0) << '\n';
        files.push_back("mgf_report.csv");
    }
    result.manifest = finalize_manifest(cfg, timer, files);
    return result;
}

VerifyTailResult run_verify_tail(const ExperimentConfig& cfg) {
    cfg.validate();
    std::filesystem::create_directories(cfg.out_dir);
    Timer timer;
    const std::size_t workers = effective_workers(cfg);

    RngStream vs = derive_path(cfg.master_seed, {kRoleFixedVector, 1});
    const auto support = sample_support(vs, cfg.n, cfg.s);
    const QuatVector x =
        sample_sparse_unit_vector(vs, cfg.n, support, Field::Quaternion);

    std::vector<double> samples(cfg.matrix_trials);
    parallel_for(cfg.matrix_trials, workers, [&](std::size_t t) {
        RngStream ms = derive_path(cfg.master_seed, {kRoleMatrix, t});
        const QuatMatrix phi = sample_gaussian_matrix(
            ms, cfg.m, cfg.n,
            {Field::Quaternion, 1.0 / static_cast<double>(cfg.m)});
        samples[t] = rayleigh_quotient(phi, x);
    });

    VerifyTailResult result;
    result.all_passed = true;
    const auto n = static_cast<double>(samples.size());
    for (double t : cfg.t_grid) {
        std::size_t exceed = 0;
        for (double r : samples)
            if (std::fabs(r - 1.0) >= t) ++exceed;
        TailRow row{t, static_cast<double>(exceed) / n, tail_bound(cfg.m, t), false};
        row.pass = row.empirical <= row.bound;
        result.all_passed = result.all_passed && row.pass;
        result.rows.push_back(row);
    }

    std::vector<std::string> files;
    {
        auto os = open_output(cfg.out_dir / "tail_report.csv");
        os << "t,empirical,bound,pass\n";
        for (const auto& row : result.rows)
            os << format_double(row.t) << ',' << format_double(row.empirical) << ','
               << format_double(row.bound) << ',' << (row.pass ? 1 : 0) << '\n';
        files.push_back("tail_report.csv");
    }
    result.manifest = finalize_manifest(cfg, timer, files);
    return result;
}

}  // namespace qrip
