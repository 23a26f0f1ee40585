// SPDX-License-Identifier: Apache-2.0
//
// qrip: quaternion compressed-sensing experiment toolkit.
//
// Subcommands: rayleigh, ricriv, deltas, sample-size, verify-mgf, verify-tail.
// Flag values override config-file values, which override per-experiment
// defaults. Exit codes: 0 success, 1 configuration error, 2 runtime or
// verification failure.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qrip/experiment.hpp"
#include "qrip/version.hpp"

namespace {

struct SubcommandState {
    CLI::App* cmd = nullptr;
    qrip::ExperimentKind kind;
    std::optional<std::string> config_path;
    std::vector<std::pair<std::string, std::string>> overrides;
};

void add_override_option(SubcommandState& state, const std::string& flag,
                         const std::string& key, const std::string& help) {
    state.cmd->add_option_function<std::string>(
        flag,
        [&state, key](const std::string& value) {
            state.overrides.emplace_back(key, value);
        },
        help);
}

void add_common_options(SubcommandState& state) {
    state.cmd->add_option("--config", state.config_path,
                          "flat key = value configuration file");
    add_override_option(state, "--seed", "seed", "master seed (64-bit)");
    add_override_option(state, "--m", "m", "number of matrix rows");
    add_override_option(state, "--n", "n", "number of matrix columns");
    add_override_option(state, "--s", "s", "sparsity level");
    add_override_option(state, "--trials", "trials", "matrix realizations");
    add_override_option(state, "--vectors-per-support", "vectors_per_support",
                        "sampled unit vectors per support");
    add_override_option(state, "--total-vectors", "total_vectors",
                        "sampled unit vectors per realization (deltas)");
    add_override_option(state, "--field", "field", "real|quaternion|both");
    add_override_option(state, "--bins", "bins", "histogram bin count");
    add_override_option(state, "--out", "out", "output directory");
    add_override_option(state, "--workers", "workers",
                        "worker threads (0 = hardware concurrency)");
    add_override_option(state, "--cap", "cap", "support enumeration cap");
}

void add_grid_options(SubcommandState& state) {
    add_override_option(state, "--delta-grid", "delta_grid",
                        "comma-separated delta values");
    add_override_option(state, "--eps-grid", "eps_grid",
                        "comma-separated epsilon values");
    add_override_option(state, "--s-grid", "s_grid", "comma-separated s values");
    add_override_option(state, "--n-grid", "n_grid", "comma-separated n values");
}

void add_verify_options(SubcommandState& state) {
    add_override_option(state, "--m-grid", "m_grid", "comma-separated m values");
    add_override_option(state, "--t-grid", "t_grid", "comma-separated t values");
    add_override_option(state, "--mgf-grid-points", "mgf_grid_points",
                        "grid points for the MGF check");
}

qrip::ExperimentConfig resolve(const SubcommandState& state) {
    std::optional<std::filesystem::path> file;
    if (state.config_path) file = *state.config_path;
    return qrip::resolve_config(state.kind, file, state.overrides);
}

int run_subcommand(const SubcommandState& state) {
    using qrip::ExperimentKind;
    const qrip::ExperimentConfig cfg = resolve(state);
    switch (state.kind) {
        case ExperimentKind::Rayleigh: {
            const auto result = qrip::run_rayleigh(cfg);
            for (const auto& f : result.per_field) {
                std::printf(
                    "rayleigh %-10s  mean=%.6f  variance=%.6g  ks=%.6g "
                    "(critical %.6g)  two-sample ks=%.6g (critical %.6g)\n",
                    qrip::field_name(f.field), f.mean, f.variance, f.ks,
                    f.ks_critical, f.two_sample_ks, f.two_sample_critical);
            }
            break;
        }
        case ExperimentKind::RicRiv: {
            const auto result = qrip::run_ricriv(cfg);
            std::printf(
                "ricriv %s  realizations=%zu  supports=C(%zu,%zu)  "
                "riv>ric violations=%zu\n",
                cfg.field == qrip::FieldChoice::Real ? "real" : "quaternion",
                result.realizations.size(), cfg.n, cfg.s,
                result.ordering_violations);
            break;
        }
        case ExperimentKind::Deltas: {
            const auto result = qrip::run_deltas(cfg);
            for (const auto& f : result.per_field)
                std::printf("deltas %-10s  realizations=%zu  median=%.6f\n",
                            qrip::field_name(f.field), f.values.size(), f.median);
            break;
        }
        case ExperimentKind::SampleSize: {
            const auto result = qrip::run_sample_size(cfg);
            std::printf("sample-size  rows=%zu\n", result.rows.size());
            break;
        }
        case ExperimentKind::VerifyMgf: {
            const auto result = qrip::run_verify_mgf(cfg);
            for (const auto& row : result.rows)
                std::printf("mgf %-10s m=%-4zu Gamma(%g, %g)  max_ratio=%.12g  %s\n",
                            row.family.c_str(), row.m, row.params.alpha,
                            row.params.beta, row.report.max_ratio,
                            row.report.passed ? "ok" : "VIOLATED");
            if (!result.all_passed) {
                std::fprintf(stderr, "verify-mgf: certificate violated\n");
                return 2;
            }
            break;
        }
        case ExperimentKind::VerifyTail: {
            const auto result = qrip::run_verify_tail(cfg);
            for (const auto& row : result.rows)
                std::printf("tail t=%.2f  empirical=%.6g  bound=%.6g  %s\n", row.t,
                            row.empirical, row.bound, row.pass ? "ok" : "VIOLATED");
            if (!result.all_passed) {
                std::fprintf(stderr, "verify-tail: bound violated\n");
                return 2;
            }
            break;
        }
    }
    std::printf("outputs written to %s\n", cfg.out_dir.string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion compressed-sensing experiment toolkit"};
    app.set_version_flag("--version", qrip::kVersion);
    app.require_subcommand(1);

    std::vector<SubcommandState> states(6);
    const std::pair<const char*, qrip::ExperimentKind> kinds[] = {
        {"rayleigh", qrip::ExperimentKind::Rayleigh},
        {"ricriv", qrip::ExperimentKind::RicRiv},
        {"deltas", qrip::ExperimentKind::Deltas},
        {"sample-size", qrip::ExperimentKind::SampleSize},
        {"verify-mgf", qrip::ExperimentKind::VerifyMgf},
        {"verify-tail", qrip::ExperimentKind::VerifyTail},
    };
    const char* descriptions[] = {
        "Rayleigh-quotient distribution against its Gamma law",
        "empirical RIC/RIV quadruples over all supports",
        "empirical delta_s distribution, real vs quaternion",
        "tabulate RIP sample-size bounds",
        "deterministic sub-exponential MGF certificate check",
        "empirical Rayleigh tails against the concentration bound",
    };
    for (std::size_t i = 0; i < states.size(); ++i) {
        states[i].kind = kinds[i].second;
        states[i].cmd = app.add_subcommand(kinds[i].first, descriptions[i]);
        add_common_options(states[i]);
        if (kinds[i].second == qrip::ExperimentKind::SampleSize)
            add_grid_options(states[i]);
        if (kinds[i].second == qrip::ExperimentKind::VerifyMgf ||
            kinds[i].second == qrip::ExperimentKind::VerifyTail)
            add_verify_options(states[i]);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // bad invocation is a configuration error
    }

    try {
        for (const auto& state : states)
            if (state.cmd->parsed()) return run_subcommand(state);
        return 1;
    } catch (const qrip::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const qrip::CapExceededError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
