// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qrip/experiment.hpp"
#include "qrip/io_util.hpp"

using namespace qrip;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "qrip_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is);
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

std::string first_line(const fs::path& path) {
    std::ifstream is(path);
    REQUIRE(is);
    std::string line;
    std::getline(is, line);
    return line;
}

ExperimentConfig small_rayleigh(const fs::path& out) {
    ExperimentConfig cfg = ExperimentConfig::defaults(ExperimentKind::Rayleigh);
    cfg.m = 16;
    cfg.n = 6;
    cfg.s = 3;
    cfg.matrix_trials = 400;
    cfg.out_dir = out;
    return cfg;
}

}  // namespace

TEST_CASE("defaults per experiment kind") {
    const auto ray = ExperimentConfig::defaults(ExperimentKind::Rayleigh);
    CHECK(ray.field == FieldChoice::Quaternion);
    CHECK(ray.m == 64);
    CHECK(ray.n == 8);
    CHECK(ray.s == 5);

    const auto ricriv = ExperimentConfig::defaults(ExperimentKind::RicRiv);
    CHECK(ricriv.field == FieldChoice::Real);
    CHECK(ricriv.vectors_per_support == 100);

    const auto deltas = ExperimentConfig::defaults(ExperimentKind::Deltas);
    CHECK(deltas.field == FieldChoice::Both);
    CHECK(deltas.n == 64);
    CHECK(deltas.m == 32);
    CHECK(deltas.s == 8);
}

TEST_CASE("config file parsing and precedence") {
    const fs::path dir = temp_dir("config");
    const fs::path file = dir / "run.cfg";
    {
        std::ofstream os(file);
        os << "# comment only line\n";
        os << "m = 24\n";
        os << "n=10   # trailing comment\n";
        os << "seed = 99\n";
    }
    const ExperimentConfig cfg = resolve_config(
        ExperimentKind::Rayleigh, file, {{"m", "32"}, {"s", "4"}});
    CHECK(cfg.m == 32);  // flag wins over file
    CHECK(cfg.n == 10);  // file wins over default
    CHECK(cfg.s == 4);
    CHECK(cfg.master_seed == 99);

    CHECK_THROWS_AS(
        resolve_config(ExperimentKind::Rayleigh, std::nullopt, {{"bogus", "1"}}),
        ConfigError);
    CHECK_THROWS_AS(
        resolve_config(ExperimentKind::Rayleigh, std::nullopt, {{"m", "abc"}}),
        ConfigError);
}

TEST_CASE("validation reports the offending field") {
    ExperimentConfig cfg = ExperimentConfig::defaults(ExperimentKind::Rayleigh);
    cfg.s = 9;  // exceeds n = 8
    try {
        cfg.validate();
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.config_field() == "s");
    }

    ExperimentConfig ricriv = ExperimentConfig::defaults(ExperimentKind::RicRiv);
    ricriv.field = FieldChoice::Both;
    CHECK_THROWS_AS(ricriv.validate(), ConfigError);

    ricriv = ExperimentConfig::defaults(ExperimentKind::RicRiv);
    ricriv.n = 40;
    ricriv.s = 20;  // C(40, 20) is far beyond the cap
    try {
        ricriv.validate();
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.config_field() == "s");
    }

    ExperimentConfig tail = ExperimentConfig::defaults(ExperimentKind::VerifyTail);
    tail.field = FieldChoice::Real;
    CHECK_THROWS_AS(tail.validate(), ConfigError);
}

TEST_CASE("rayleigh run emits csvs, fit report and manifest") {
    const fs::path dir = temp_dir("rayleigh");
    const RayleighResult result = run_rayleigh(small_rayleigh(dir));
    REQUIRE(result.per_field.size() == 1);
    const auto& stats = result.per_field.front();
    CHECK(stats.mean == doctest::Approx(1.0).epsilon(0.05));
    CHECK(stats.model.alpha == doctest::Approx(32.0));
    CHECK(stats.samples.size() == 400);

    CHECK(first_line(dir / "ecdf_rayleigh_quaternion.csv") == "value,ecdf");
    CHECK(first_line(dir / "hist_rayleigh_quaternion.csv") == "bin_left,bin_right,count");
    CHECK(fs::exists(dir / "fit_rayleigh_quaternion.json"));
    CHECK(fs::exists(dir / "manifest.json"));

    // Manifest checksums match the files on disk.
    for (const auto& [name, checksum] : result.manifest.output_checksums)
        CHECK(file_checksum(dir / name) == checksum);
    CHECK(result.manifest.output_checksums.size() == 3);
}

TEST_CASE("rayleigh runs are deterministic across reruns and worker counts") {
    const fs::path d1 = temp_dir("ray_w1");
    const fs::path d2 = temp_dir("ray_w2");
    const fs::path d3 = temp_dir("ray_w3");
    ExperimentConfig cfg = small_rayleigh(d1);
    cfg.workers = 1;
    const auto r1 = run_rayleigh(cfg);
    cfg.out_dir = d2;
    cfg.workers = 3;
    const auto r2 = run_rayleigh(cfg);
    cfg.out_dir = d3;
    cfg.workers = 1;
    const auto r3 = run_rayleigh(cfg);

    for (const auto& [name, checksum] : r1.manifest.output_checksums) {
        CHECK(r2.manifest.output_checksums.at(name) == checksum);
        CHECK(r3.manifest.output_checksums.at(name) == checksum);
        CHECK(slurp(d1 / name) == slurp(d2 / name));
    }
}

TEST_CASE("ricriv run: pools, ordering and majorization") {
    const fs::path dir = temp_dir("ricriv");
    ExperimentConfig cfg = ExperimentConfig::defaults(ExperimentKind::RicRiv);
    cfg.n = 5;
    cfg.s = 3;
    cfg.m = 24;
    cfg.matrix_trials = 150;
    cfg.vectors_per_support = 8;
    cfg.out_dir = dir;

    const RicRivResult result = run_ricriv(cfg);
    REQUIRE(result.realizations.size() == 150);
    CHECK(result.ordering_violations == 0);
    for (const auto& q : result.realizations) {
        CHECK(q.riv_left <= q.ric_left);
        CHECK(q.riv_right <= q.ric_right);
    }
    CHECK(first_line(dir / "realizations.csv") ==
          "trial,ric_left,ric_right,riv_left,riv_right");
    for (const char* name : {"ric_left", "ric_right", "riv_left", "riv_right"}) {
        CHECK(fs::exists(dir / (std::string("ecdf_") + name + ".csv")));
        CHECK(fs::exists(dir / (std::string("hist_") + name + ".csv")));
    }

    // Per-realization domination implies the RIV ECDF majorizes the RIC ECDF.
    std::vector<double> ric, riv;
    for (const auto& q : result.realizations) {
        ric.push_back(q.ric_right);
        riv.push_back(q.riv_right);
    }
    const EmpiricalDistribution ric_dist(ric), riv_dist(riv);
    for (double x : ric_dist.sorted_samples())
        CHECK(riv_dist.ecdf(x) >= ric_dist.ecdf(x));
    for (double x : riv_dist.sorted_samples())
        CHECK(riv_dist.ecdf(x) >= ric_dist.ecdf(x));

    // With one vector per support the RIC and RIV columns coincide.
    ExperimentConfig one = cfg;
    one.vectors_per_support = 1;
    one.out_dir = temp_dir("ricriv_one");
    const RicRivResult collapsed = run_ricriv(one);
    for (const auto& q : collapsed.realizations) {
        CHECK(q.ric_left == q.riv_left);
        CHECK(q.ric_right == q.riv_right);
    }
}

TEST_CASE("deltas run: pairing, monotone pools, determinism") {
    ExperimentConfig cfg = ExperimentConfig::defaults(ExperimentKind::Deltas);
    cfg.n = 16;
    cfg.m = 8;
    cfg.s = 4;
    cfg.matrix_trials = 40;
    cfg.total_vectors = 300;
    cfg.out_dir = temp_dir("deltas");

    const DeltasResult result = run_deltas(cfg);
    REQUIRE(result.per_field.size() == 2);
    CHECK(result.per_field[0].field == Field::Real);
    CHECK(result.per_field[1].field == Field::Quaternion);
    CHECK(first_line(cfg.out_dir / "realizations.csv") ==
          "trial,delta_s_real,delta_s_quaternion");
    CHECK(fs::exists(cfg.out_dir / "ecdf_delta_s_real.csv"));
    CHECK(fs::exists(cfg.out_dir / "hist_delta_s_quaternion.csv"));

    // Doubling the vector pool extends it, so every per-trial estimate is
    // nondecreasing.
    ExperimentConfig doubled = cfg;
    doubled.total_vectors = 600;
    doubled.out_dir = temp_dir("deltas_double");
    const DeltasResult more = run_deltas(doubled);
    for (std::size_t f = 0; f < 2; ++f)
        for (std::size_t t = 0; t < cfg.matrix_trials; ++t)
            CHECK(more.per_field[f].values[t] >= result.per_field[f].values[t]);

    // Identical config and seed give identical bytes at any worker count.
    ExperimentConfig w2 = cfg;
    w2.workers = 2;
    w2.out_dir = temp_dir("deltas_w2");
    const DeltasResult again = run_deltas(w2);
    for (const auto& [name, checksum] : result.manifest.output_checksums)
        CHECK(again.manifest.output_checksums.at(name) == checksum);

    // Seed pairing: the real column of a both-fields run equals a
    // real-only run bit for bit, because stream derivation paths never
    // encode the scalar field.
    ExperimentConfig real_only = cfg;
    real_only.field = FieldChoice::Real;
    real_only.out_dir = temp_dir("deltas_real_only");
    const DeltasResult real_run = run_deltas(real_only);
    for (std::size_t t = 0; t < cfg.matrix_trials; ++t)
        CHECK(real_run.per_field[0].values[t] == result.per_field[0].values[t]);

    // Lower-bound semantics are part of the run metadata.
    CHECK(result.manifest.config_echo.count("estimate_semantics") == 1);
}

TEST_CASE("runtime failures are distinct from config errors") {
    ExperimentConfig cfg = small_rayleigh("/proc/qrip_cannot_write_here");
    cfg.matrix_trials = 2;
    CHECK_THROWS_AS(run_rayleigh(cfg), std::filesystem::filesystem_error);
}

TEST_CASE("sample size table contains the reference rows and per-row errors") {
    ExperimentConfig cfg = ExperimentConfig::defaults(ExperimentKind::SampleSize);
    cfg.delta_grid = {0.5, 0.9};  // 0.9 is out of range, reported per row
    cfg.eps_grid = {0.01};
    cfg.s_grid = {10};
    cfg.n_grid = {10000};
    cfg.out_dir = temp_dir("sample_size");

    const SampleSizeResult result = run_sample_size(cfg);
    REQUIRE(result.rows.size() == 2);
    CHECK(result.rows[0].status == "ok");
    CHECK(result.rows[0].m_fixed_support == 1938);
    CHECK(result.rows[0].m_rip == 2992);
    CHECK(result.rows[1].status != "ok");
    CHECK_FALSE(result.rows[1].m_rip.has_value());
    CHECK(first_line(cfg.out_dir / "sample_size.csv") ==
          "delta,epsilon,s,n,m_fixed_support,m_rip,status");
}

TEST_CASE("verification wrappers") {
    ExperimentConfig mgf = ExperimentConfig::defaults(ExperimentKind::VerifyMgf);
    mgf.out_dir = temp_dir("mgf");
    const VerifyMgfResult mgf_result = run_verify_mgf(mgf);
    CHECK(mgf_result.all_passed);
    CHECK(mgf_result.rows.size() == 10);  // 5 m values x 2 families
    CHECK(first_line(mgf.out_dir / "mgf_report.csv") ==
          "family,m,alpha,beta,grid,max_ratio,pass");

    ExperimentConfig tail = ExperimentConfig::defaults(ExperimentKind::VerifyTail);
    tail.matrix_trials = 3000;
    tail.m = 16;
    tail.out_dir = temp_dir("tail");
    const VerifyTailResult tail_result = run_verify_tail(tail);
    CHECK(tail_result.all_passed);
    CHECK(first_line(tail.out_dir / "tail_report.csv") == "t,empirical,bound,pass");
}
