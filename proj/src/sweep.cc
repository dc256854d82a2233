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

#include "qcorr/sweep.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "qcorr/error.h"
#include "qcorr/evolution.h"
#include "qcorr/measures.h"

namespace qcorr {

std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::Concurrence:
            return "concurrence";
        case Measure::Lqu:
            return "lqu";
        case Measure::Tdd:
            return "tdd";
        case Measure::Uin:
            return "uin";
    }
    return "?";
}

Measure parse_measure(std::string_view name) {
    for (Measure m : kAllMeasures) {
        if (measure_name(m) == name) {
            return m;
        }
    }
    throw Error(ErrorKind::InvalidArgument,
                "unknown measure '" + std::string(name) + "' (expected concurrence, lqu, tdd or uin)");
}

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Spectral:
            return "spectral";
        case Backend::Kraus:
            return "kraus";
        case Backend::Rk4:
            return "rk4";
    }
    return "?";
}

Backend parse_backend(std::string_view name) {
    for (Backend b : {Backend::Spectral, Backend::Kraus, Backend::Rk4}) {
        if (backend_name(b) == name) {
            return b;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown backend '" + std::string(name) + "' (expected spectral, kraus or rk4)");
}

DensityMatrix initial_density(const InitialState &state) {
    return std::visit(
        [](const auto &spec) -> DensityMatrix {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, BellDiagonalSpec>) {
                return bell_diagonal(spec);
            } else {
                return werner(spec);
            }
        },
        state);
}

double SweepConfig::sample_time(int k) const {
    return k * t_max / (t_steps - 1);
}

void SweepConfig::validate() const {
    std::visit([](const auto &spec) { spec.validate(); }, state);
    model.validate();
    if (!std::isfinite(gamma) || gamma < 0) {
        throw Error(ErrorKind::InvalidArgument, "gamma must be finite and >= 0, got " + std::to_string(gamma));
    }
    if (!std::isfinite(t_max) || t_max <= 0) {
        throw Error(ErrorKind::InvalidArgument, "t_max must be > 0, got " + std::to_string(t_max));
    }
    if (t_steps < 2) {
        throw Error(ErrorKind::InvalidArgument, "t_steps must be >= 2, got " + std::to_string(t_steps));
    }
    if (std::none_of(measures.begin(), measures.end(), [](bool b) { return b; })) {
        throw Error(ErrorKind::InvalidArgument, "at least one measure must be requested");
    }
    for (Measure m : kAllMeasures) {
        if (!std::isfinite(scale_factors[static_cast<int>(m)])) {
            throw Error(ErrorKind::InvalidArgument, "scale factor for " + std::string(measure_name(m)) + " is not finite");
        }
    }
    if (oracle_check && n_grid < tol::kMinGrid) {
        throw Error(ErrorKind::InvalidArgument, "n_grid must be >= " + std::to_string(tol::kMinGrid));
    }
    if (!std::isfinite(dt) || dt <= 0) {
        throw Error(ErrorKind::InvalidArgument, "dt must be > 0, got " + std::to_string(dt));
    }
}

double oracle_tolerance(Measure m) {
    switch (m) {
        case Measure::Concurrence:
            return tol::kOracleConcurrence;
        case Measure::Lqu:
            return tol::kOracleLqu;
        case Measure::Tdd:
            return tol::kOracleTdd;
        case Measure::Uin:
            return tol::kOracleUin;
    }
    return 0;
}

std::vector<Measure> SweepResult::oracle_failures() const {
    std::vector<Measure> out;
    for (Measure m : kAllMeasures) {
        const auto &d = max_delta[static_cast<int>(m)];
        if (d.has_value() && *d > oracle_tolerance(m)) {
            out.push_back(m);
        }
    }
    return out;
}

CorrelationRecord evaluate_record(const SweepConfig &cfg, double t, const DensityMatrix &rho) {
    CorrelationRecord rec;
    rec.t = t;
    XStateElements x = elements_from_density(rho);
    if (cfg.wants(Measure::Concurrence)) {
        rec.values[0] = concurrence_x(x).value;
    }
    if (cfg.wants(Measure::Lqu)) {
        rec.values[1] = lqu(rho).value;
    }
    if (cfg.wants(Measure::Tdd)) {
        rec.values[2] = tdd_x(x).value;
    }
    if (cfg.wants(Measure::Uin)) {
        rec.values[3] = uin(rho).value;
    }
    if (cfg.oracle_check) {
        if (cfg.wants(Measure::Concurrence)) {
            rec.oracle[0] = concurrence(rho).value;
        }
        if (cfg.wants(Measure::Lqu)) {
            rec.oracle[1] = lqu_bruteforce(rho, cfg.n_grid).value;
        }
        if (cfg.wants(Measure::Tdd)) {
            rec.oracle[2] = tdd_bruteforce(rho, cfg.n_grid).value;
        }
        if (cfg.wants(Measure::Uin)) {
            rec.oracle[3] = uin_bruteforce(rho, cfg.n_grid).value;
        }
    }
    return rec;
}

Eigensystem sweep_eigensystem(const ModelParams &model) {
    if (model.is_one_axis_twisting()) {
        return analytic_eigensystem(model.mu, model.field_b);
    }
    return numeric_eigensystem(model);
}

DensityMatrix evolve(const SweepConfig &cfg, const Eigensystem &es, const DensityMatrix &rho0, double t) {
    DecoherenceParams d{cfg.gamma, t};
    switch (cfg.backend) {
        case Backend::Spectral:
            return propagate_spectral(es, rho0, d);
        case Backend::Kraus:
            return propagate_kraus(rho0, kraus_channel(es, d).operators);
        case Backend::Rk4:
            return integrate_master(build_hamiltonian(cfg.model), rho0, d, cfg.dt);
    }
    return rho0;
}

namespace {

// Runs body(k) for k in [0, n) on up to `threads` workers with static interleaving.
template <typename F>
void parallel_for(int n, int threads, F &&body) {
    threads = std::clamp(threads, 1, std::max(1, n));
    if (threads == 1) {
        for (int k = 0; k < n; k++) {
            body(k);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; w++) {
        pool.emplace_back([&, w] {
            try {
                for (int k = w; k < n; k += threads) {
                    body(k);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace

SweepResult run_sweep(const SweepConfig &cfg, int threads) {
    cfg.validate();
    Eigensystem es = sweep_eigensystem(cfg.model);
    DensityMatrix rho0 = initial_density(cfg.state);

    std::vector<DensityMatrix> states(cfg.t_steps, rho0);
    if (cfg.backend == Backend::Rk4) {
        // Integrate segment by segment; each sample continues from the previous one.
        Matrix4 h = build_hamiltonian(cfg.model);
        for (int k = 1; k < cfg.t_steps; k++) {
            double dt_segment = cfg.sample_time(k) - cfg.sample_time(k - 1);
            states[k] = integrate_master(h, states[k - 1], DecoherenceParams{cfg.gamma, dt_segment}, cfg.dt);
        }
    } else {
        parallel_for(cfg.t_steps, threads, [&](int k) { states[k] = evolve(cfg, es, rho0, cfg.sample_time(k)); });
    }

    SweepResult result;
    result.records.resize(cfg.t_steps);
    parallel_for(cfg.t_steps, threads,
                 [&](int k) { result.records[k] = evaluate_record(cfg, cfg.sample_time(k), states[k]); });

    if (cfg.oracle_check) {
        for (Measure m : kAllMeasures) {
            int i = static_cast<int>(m);
            if (!cfg.wants(m)) {
                continue;
            }
            double worst = 0;
            for (const auto &rec : result.records) {
                worst = std::max(worst, std::abs(*rec.values[i] - *rec.oracle[i]));
            }
            result.max_delta[i] = worst;
        }
    }
    return result;
}

CorrelationRecord steady_state_report(const SweepConfig &cfg) {
    cfg.validate();
    if (!(cfg.gamma > 0)) {
        throw Error(ErrorKind::InvalidArgument, "steady state requires gamma > 0");
    }
    Eigensystem es = sweep_eigensystem(cfg.model);
    DensityMatrix rho_inf = steady_state(es, initial_density(cfg.state));
    return evaluate_record(cfg, std::numeric_limits<double>::infinity(), rho_inf);
}

namespace {

struct PresetEntry {
    InitialState state;
    double mu;
    double field_b;
    double gamma;
};

const std::map<std::string, PresetEntry, std::less<>> &preset_table() {
    static const std::map<std::string, PresetEntry, std::less<>> table = [] {
        std::map<std::string, PresetEntry, std::less<>> t;
        BellDiagonalSpec bell{0.9, -0.4, 0.4};
        t["fig1a"] = {bell, 1.6, 0.25, 0.1};
        t["fig1b"] = {bell, 1.6, 0.55, 0.1};
        t["fig2a"] = {bell, 1.1, 0.3, 0.01};
        t["fig2b"] = {bell, 2.0, 0.3, 0.01};
        t["fig3a"] = {bell, 1.6, 0.6, 0.1};
        t["fig3b"] = {bell, 1.6, 0.6, 0.25};
        t["fig4a"] = {WernerSpec{0.9}, 2.0, 0.6, 0.01};
        t["fig4b"] = {WernerSpec{0.9}, 2.0, 0.6, 0.1};
        t["fig5a"] = {WernerSpec{0.9}, 1.0, 2.0, 0.01};
        t["fig5b"] = {WernerSpec{0.5}, 1.0, 2.0, 0.01};
        t["fig6a"] = {WernerSpec{0.9}, 2.0, 1.5, 0.01};
        t["fig6b"] = {WernerSpec{0.5}, 2.0, 1.5, 0.01};
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<std::string> &preset_names() {
    static const std::vector<std::string> names = {"fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b",
                                                   "fig4a", "fig4b", "fig5a", "fig5b", "fig6a", "fig6b"};
    return names;
}

SweepConfig figure_preset(std::string_view name) {
    const auto &table = preset_table();
    auto it = table.find(name);
    if (it == table.end()) {
        std::string valid;
        for (const auto &n : preset_names()) {
            valid += (valid.empty() ? "" : ", ") + n;
        }
        throw Error(ErrorKind::UnknownPreset, "'" + std::string(name) + "' is not a preset; valid names: " + valid);
    }
    SweepConfig cfg;
    cfg.state = it->second.state;
    cfg.model = ModelParams{.mu = it->second.mu, .field_b = it->second.field_b};
    cfg.gamma = it->second.gamma;
    return cfg;
}

std::string format_number(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (std::isnan(value)) {
        return "nan";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string csv_header(const SweepConfig &cfg) {
    std::string header = "t";
    for (Measure m : kAllMeasures) {
        if (cfg.wants(m)) {
            header += ",";
            header += measure_name(m);
        }
    }
    if (cfg.oracle_check) {
        for (Measure m : kAllMeasures) {
            if (cfg.wants(m)) {
                header += ",";
                header += measure_name(m);
                header += "_bf";
            }
        }
    }
    return header;
}

std::string csv_row(const SweepConfig &cfg, const CorrelationRecord &record) {
    std::string row = format_number(record.t);
    auto emit = [&](const std::optional<double> &v, Measure m) {
        row += ",";
        row += format_number(*v * cfg.scale_factors[static_cast<int>(m)]);
    };
    for (Measure m : kAllMeasures) {
        if (cfg.wants(m)) {
            emit(record.values[static_cast<int>(m)], m);
        }
    }
    if (cfg.oracle_check) {
        for (Measure m : kAllMeasures) {
            if (cfg.wants(m)) {
                emit(record.oracle[static_cast<int>(m)], m);
            }
        }
    }
    return row;
}

void write_csv(std::ostream &out, const SweepConfig &cfg, const std::vector<CorrelationRecord> &records) {
    out << csv_header(cfg) << '\n';
    for (const auto &rec : records) {
        out << csv_row(cfg, rec) << '\n';
    }
}

}  // namespace qcorr
