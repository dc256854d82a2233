// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qcorr/error.h"
#include "qcorr/sweep.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitPhysicality = 3;
constexpr int kExitNumerical = 4;

int exit_code(qcorr::ErrorCategory category) {
    switch (category) {
        case qcorr::ErrorCategory::InvalidConfig:
            return kExitInvalidConfig;
        case qcorr::ErrorCategory::Physicality:
            return kExitPhysicality;
        case qcorr::ErrorCategory::Numerical:
            return kExitNumerical;
    }
    return kExitNumerical;
}

struct SweepArgs {
    std::string config_file;
    std::string preset;
    std::string state;
    std::optional<double> c1, c2, c3, r;
    std::optional<double> mu, field_b, gamma, zeta, gamma_xy;
    std::optional<double> t_max;
    std::optional<int> t_steps;
    std::vector<std::string> measures;
    std::string backend = "spectral";
    bool oracle_check = false;
    bool steady_state = false;
    int n_grid = qcorr::tol::kDefaultGrid;
    double dt = 1e-3;
    std::vector<std::string> scales;
    int threads = 1;
    std::string output;
};

[[noreturn]] void invalid(const std::string &message) {
    throw qcorr::Error(qcorr::ErrorKind::InvalidArgument, message);
}

// Values from a flat key=value file fill in options absent from the command line.
void apply_config_file(CLI::App &sweep, const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        invalid("cannot read config file '" + path + "'");
    }
    for (const CLI::ConfigItem &item : CLI::ConfigINI().from_config(in)) {
        if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == "sweep")) {
            invalid("config file section '" + item.parents[0] + "' is not supported");
        }
        std::string name = item.name.size() == 1 ? "-" + item.name : "--" + item.name;
        CLI::Option *opt = sweep.get_option_no_throw(name);
        if (opt == nullptr || item.name == "config") {
            invalid("unknown config key '" + item.name + "'");
        }
        if (opt->count() > 0) {
            continue;
        }
        for (const auto &value : item.inputs) {
            opt->add_result(value);
        }
        opt->run_callback();
    }
}

qcorr::SweepConfig build_config(const SweepArgs &args) {
    qcorr::SweepConfig cfg;
    bool has_preset = !args.preset.empty();
    if (has_preset) {
        cfg = qcorr::figure_preset(args.preset);
    }

    bool bell_coeffs = args.c1 || args.c2 || args.c3;
    if (!args.state.empty()) {
        if (args.state == "bell-diagonal") {
            if (args.r) {
                invalid("--r applies to --state werner only");
            }
            cfg.state = qcorr::BellDiagonalSpec{args.c1.value_or(0), args.c2.value_or(0), args.c3.value_or(0)};
        } else if (args.state == "werner") {
            if (bell_coeffs) {
                invalid("--c1/--c2/--c3 apply to --state bell-diagonal only");
            }
            if (!args.r) {
                invalid("--state werner requires --r");
            }
            cfg.state = qcorr::WernerSpec{*args.r};
        } else {
            invalid("unknown state '" + args.state + "' (expected bell-diagonal or werner)");
        }
    } else if (has_preset) {
        if (auto *bell = std::get_if<qcorr::BellDiagonalSpec>(&cfg.state)) {
            if (args.r) {
                invalid("--r does not apply to preset '" + args.preset + "'");
            }
            bell->c1 = args.c1.value_or(bell->c1);
            bell->c2 = args.c2.value_or(bell->c2);
            bell->c3 = args.c3.value_or(bell->c3);
        } else {
            if (bell_coeffs) {
                invalid("--c1/--c2/--c3 do not apply to preset '" + args.preset + "'");
            }
            auto &w = std::get<qcorr::WernerSpec>(cfg.state);
            w.r = args.r.value_or(w.r);
        }
    } else {
        invalid("either --preset or --state is required");
    }

    if (!has_preset) {
        if (!args.mu || !args.field_b || !args.gamma) {
            invalid("--mu, --B and --gamma are required without --preset");
        }
    }
    cfg.model.mu = args.mu.value_or(cfg.model.mu);
    cfg.model.field_b = args.field_b.value_or(cfg.model.field_b);
    cfg.model.zeta = args.zeta.value_or(cfg.model.zeta);
    cfg.model.gamma_xy = args.gamma_xy.value_or(cfg.model.gamma_xy);
    cfg.gamma = args.gamma.value_or(cfg.gamma);
    cfg.t_max = args.t_max.value_or(cfg.t_max);
    cfg.t_steps = args.t_steps.value_or(cfg.t_steps);

    if (!args.measures.empty()) {
        cfg.measures = {false, false, false, false};
        for (const auto &name : args.measures) {
            cfg.measures[static_cast<int>(qcorr::parse_measure(name))] = true;
        }
    }
    for (const auto &entry : args.scales) {
        auto eq = entry.find('=');
        if (eq == std::string::npos) {
            invalid("--scale expects name=factor, got '" + entry + "'");
        }
        qcorr::Measure m = qcorr::parse_measure(entry.substr(0, eq));
        try {
            std::size_t used = 0;
            std::string number = entry.substr(eq + 1);
            double factor = std::stod(number, &used);
            if (used != number.size()) {
                throw std::invalid_argument(number);
            }
            cfg.scale_factors[static_cast<int>(m)] = factor;
        } catch (const std::logic_error &) {
            invalid("--scale factor in '" + entry + "' is not a number");
        }
    }
    cfg.backend = qcorr::parse_backend(args.backend);
    cfg.oracle_check = args.oracle_check;
    cfg.n_grid = args.n_grid;
    cfg.dt = args.dt;
    cfg.validate();
    return cfg;
}

void print_oracle_summary(const qcorr::SweepConfig &cfg, const qcorr::SweepResult &result) {
    bool ok = result.oracle_failures().empty();
    std::cout << "oracle-check " << (ok ? "ok" : "FAILED");
    for (qcorr::Measure m : qcorr::kAllMeasures) {
        const auto &delta = result.max_delta[static_cast<int>(m)];
        if (cfg.wants(m) && delta) {
            std::cout << " " << qcorr::measure_name(m) << "=" << qcorr::format_number(*delta) << "/"
                      << qcorr::format_number(qcorr::oracle_tolerance(m));
        }
    }
    std::cout << "\n";
}

int run_sweep_command(const SweepArgs &args) {
    if (args.output.empty()) {
        invalid("an output file is required (-o FILE.csv)");
    }
    qcorr::SweepConfig cfg = build_config(args);
    int threads = args.threads;
    if (threads < 0) {
        invalid("--threads must be >= 0");
    }
    if (threads == 0) {
        threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }

    qcorr::SweepResult result = qcorr::run_sweep(cfg, threads);
    if (args.steady_state) {
        result.records.push_back(qcorr::steady_state_report(cfg));
    }

    std::ofstream out(args.output, std::ios::binary);
    if (!out) {
        invalid("cannot open output file '" + args.output + "'");
    }
    qcorr::write_csv(out, cfg, result.records);
    out.close();
    if (!out) {
        throw qcorr::Error(qcorr::ErrorKind::InvalidArgument, "failed writing '" + args.output + "'");
    }

    if (cfg.oracle_check) {
        print_oracle_summary(cfg, result);
        if (!result.oracle_failures().empty()) {
            std::cerr << "error: closed-form values disagree with the brute-force oracle beyond tolerance\n";
            return kExitNumerical;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Two-qubit quantum correlations under intrinsic decoherence"};
    app.require_subcommand(1);

    SweepArgs args;
    CLI::App *sweep = app.add_subcommand("sweep", "Evaluate correlation measures over a time grid and write CSV");
    sweep->add_option("--config", args.config_file, "Flat key=value file; command-line flags take precedence");
    sweep->add_option("--preset", args.preset, "Built-in parameter set (fig1a ... fig6b)");
    sweep->add_option("--state", args.state, "Initial state family: bell-diagonal or werner");
    sweep->add_option("--c1", args.c1, "Bell-diagonal XX correlation");
    sweep->add_option("--c2", args.c2, "Bell-diagonal YY correlation");
    sweep->add_option("--c3", args.c3, "Bell-diagonal ZZ correlation");
    sweep->add_option("--r", args.r, "Werner mixing parameter");
    sweep->add_option("--mu", args.mu, "Sx^2 coupling");
    sweep->add_option("--B", args.field_b, "Field along z");
    sweep->add_option("--gamma", args.gamma, "Intrinsic decoherence rate");
    sweep->add_option("--zeta", args.zeta, "Sy^2 coupling");
    sweep->add_option("--Gamma-xy", args.gamma_xy, "SxSy + SySx coupling");
    sweep->add_option("--t-max", args.t_max, "Last sample time");
    sweep->add_option("--t-steps", args.t_steps, "Number of samples, including t = 0");
    sweep->add_option("--measures", args.measures, "Comma-separated subset of concurrence,lqu,tdd,uin")->delimiter(',');
    sweep->add_option("--backend", args.backend, "spectral, kraus or rk4")->capture_default_str();
    sweep->add_flag("--oracle-check", args.oracle_check, "Add brute-force columns and compare");
    sweep->add_flag("--steady-state", args.steady_state, "Append the long-time limit as a t = inf row");
    sweep->add_option("--n-grid", args.n_grid, "Sphere grid size for the brute-force oracles")->capture_default_str();
    sweep->add_option("--dt", args.dt, "RK4 step")->capture_default_str();
    sweep->add_option("--scale", args.scales, "Multiply a measure's column: name=factor (repeatable)");
    sweep->add_option("--threads", args.threads, "Worker threads; 0 uses all cores")->capture_default_str();
    sweep->add_option("-o,--output", args.output, "CSV file to write (required)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidConfig;
    }

    try {
        if (!args.config_file.empty()) {
            apply_config_file(*sweep, args.config_file);
        }
        return run_sweep_command(args);
    } catch (const qcorr::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.category());
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
