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

#ifndef QCORR_SWEEP_H
#define QCORR_SWEEP_H

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qcorr/hamiltonian.h"
#include "qcorr/states.h"
#include "qcorr/tolerances.h"

namespace qcorr {

enum class Measure { Concurrence = 0, Lqu = 1, Tdd = 2, Uin = 3 };
inline constexpr std::array<Measure, 4> kAllMeasures = {Measure::Concurrence, Measure::Lqu, Measure::Tdd, Measure::Uin};

enum class Backend { Spectral, Kraus, Rk4 };

std::string_view measure_name(Measure m);
Measure parse_measure(std::string_view name);
std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

using InitialState = std::variant<BellDiagonalSpec, WernerSpec>;

DensityMatrix initial_density(const InitialState &state);

struct SweepConfig {
    InitialState state = BellDiagonalSpec{};
    ModelParams model;
    double gamma = 0;
    double t_max = 30;
    int t_steps = 600;
    /// Requested subset; always written in Concurrence, Lqu, Tdd, Uin order.
    std::array<bool, 4> measures = {true, true, true, true};
    /// Applied to every output column of the matching measure.
    std::array<double, 4> scale_factors = {1, 1, 1, 1};
    bool oracle_check = false;
    int n_grid = tol::kDefaultGrid;
    Backend backend = Backend::Spectral;
    /// RK4 step.
    double dt = 1e-3;

    bool wants(Measure m) const {
        return measures[static_cast<int>(m)];
    }
    double sample_time(int k) const;
    /// Throws InvalidArgument / NotPhysical naming the offending parameter.
    void validate() const;
};

struct CorrelationRecord {
    /// +infinity marks a steady-state record.
    double t = 0;
    std::array<std::optional<double>, 4> values;
    std::array<std::optional<double>, 4> oracle;
};

struct SweepResult {
    std::vector<CorrelationRecord> records;
    /// Largest |closed form - oracle| per measure; only filled with oracle_check.
    std::array<std::optional<double>, 4> max_delta;

    /// Measures whose max_delta exceeds the oracle tolerance.
    std::vector<Measure> oracle_failures() const;
};

double oracle_tolerance(Measure m);

/// Evaluates the requested measures (and oracles) on one state.
CorrelationRecord evaluate_record(const SweepConfig &cfg, double t, const DensityMatrix &rho);

/// State at time t using the configured backend.
DensityMatrix evolve(const SweepConfig &cfg, const Eigensystem &es, const DensityMatrix &rho0, double t);

/// Eigensystem used by the sweep: analytic for one-axis twisting, Jacobi otherwise.
Eigensystem sweep_eigensystem(const ModelParams &model);

/// One record per sample time, in time order. `threads` > 1 evaluates samples
/// concurrently; output does not depend on the thread count.
SweepResult run_sweep(const SweepConfig &cfg, int threads = 1);

/// Measures on the long-time limit of the evolution; the record has t = +inf.
CorrelationRecord steady_state_report(const SweepConfig &cfg);

/// Names accepted by figure_preset, in figure order.
const std::vector<std::string> &preset_names();
/// Built-in parameter sets. Throws UnknownPreset.
SweepConfig figure_preset(std::string_view name);

/// 17 significant digits, '.' decimal point regardless of locale; +inf prints as "inf".
std::string format_number(double value);

std::string csv_header(const SweepConfig &cfg);
std::string csv_row(const SweepConfig &cfg, const CorrelationRecord &record);
void write_csv(std::ostream &out, const SweepConfig &cfg, const std::vector<CorrelationRecord> &records);

}  // namespace qcorr

#endif
