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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails. Usage: qcorr_acceptance [path/to/qcorr]

#include <unistd.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcorr/evolution.h"
#include "qcorr/hamiltonian.h"
#include "qcorr/measures.h"
#include "qcorr/states.h"
#include "qcorr/sweep.h"
#include "support.h"

using namespace qcorr;
using namespace qcorr::testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double min_nonzero_gap(const Eigensystem &es) {
    double gap = std::numeric_limits<double>::infinity();
    for (const auto &row : bohr_frequencies(es)) {
        for (double w : row) {
            if (std::abs(w) > tol::kEnergyDegeneracy) {
                gap = std::min(gap, std::abs(w));
            }
        }
    }
    return gap;
}

Outcome backend_equivalence() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1001);
    std::uniform_real_distribution<double> coupling(0.0, 2.5), rate(0.0, 0.3), time(0.0, 10.0);
    double worst_kraus = 0, worst_rk4 = 0;
    int min_order = std::numeric_limits<int>::max();
    for (int draw = 0; draw < 100; draw++) {
        double mu = coupling(rng), b = coupling(rng);
        DecoherenceParams d{rate(rng), time(rng)};
        DensityMatrix rho0 = random_density(rng);
        Eigensystem es = analytic_eigensystem(mu, b);
        DensityMatrix spectral = propagate_spectral(es, rho0, d);
        KrausChannel channel = kraus_channel(es, d);
        min_order = std::min(min_order, channel.l_max);
        DensityMatrix kraus = propagate_kraus(rho0, channel.operators);
        DensityMatrix rk4 = integrate_master(build_hamiltonian({.mu = mu, .field_b = b}), rho0, d, 1e-3);
        worst_kraus = std::max(worst_kraus, max_abs_diff(spectral.matrix(), kraus.matrix()));
        worst_rk4 = std::max(worst_rk4, max_abs_diff(spectral.matrix(), rk4.matrix()));
    }
    double elapsed = seconds_since(start);
    bool pass = worst_kraus <= 1e-10 && worst_rk4 <= 1e-6 && min_order >= 40 && elapsed < 60;
    return {pass, "max|spectral-kraus| " + fmt(worst_kraus) + " (<=1e-10, l_max>=" + std::to_string(min_order) +
                      "), max|spectral-rk4| " + fmt(worst_rk4) + " (<=1e-6), " + fmt(elapsed) + " s (<60)"};
}

// Evolved elements written with the opposite field sign.
XStateElements flipped_sign_elements(const BellDiagonalSpec &s, double mu, double b, double gamma, double t) {
    XStateElements x = evolved_bell_diagonal_elements(s, mu, b, gamma, t);
    std::swap(x.rho11, x.rho44);
    x.rho14 = std::conj(x.rho14);
    return x;
}

Outcome closed_form_evolution() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1002);
    std::uniform_real_distribution<double> coupling(0.0, 2.5), rate(0.0, 0.3), time(0.0, 10.0), unit(0.0, 1.0);
    double worst_bell = 0, worst_werner = 0, flipped_gap = 0;
    for (int draw = 0; draw < 200; draw++) {
        double mu = coupling(rng), b = coupling(rng), gamma = rate(rng), t = time(rng);
        Eigensystem es = analytic_eigensystem(mu, b);
        BellDiagonalSpec bell = random_bell_diagonal(rng);
        WernerSpec w{unit(rng)};
        DensityMatrix bell_t = propagate_spectral(es, bell_diagonal(bell), {gamma, t});
        DensityMatrix werner_t = propagate_spectral(es, werner(w), {gamma, t});
        worst_bell = std::max(worst_bell, max_abs_diff(x_state_from_elements(evolved_bell_diagonal_elements(bell, mu, b, gamma, t)).matrix(),
                                                       bell_t.matrix()));
        worst_werner = std::max(worst_werner, max_abs_diff(x_state_from_elements(evolved_werner_elements(w, mu, b, gamma, t)).matrix(),
                                                           werner_t.matrix()));
        flipped_gap = std::max(
            flipped_gap,
            max_abs_diff(x_state_from_elements(flipped_sign_elements(bell, mu, b, gamma, t)).matrix(), bell_t.matrix()));
    }
    double elapsed = seconds_since(start);
    bool pass = worst_bell <= 1e-12 && worst_werner <= 1e-12 && elapsed < 10;
    return {pass, "bell-diagonal " + fmt(worst_bell) + ", werner " + fmt(worst_werner) +
                      " (<=1e-12); rho14 sign: Sz|00>=+|00> form adopted, opposite-sign form deviates by up to " +
                      fmt(flipped_gap) + "; " + fmt(elapsed) + " s (<10)"};
}

Outcome unitary_limit() {
    std::mt19937_64 rng(1003);
    std::uniform_real_distribution<double> coupling(0.0, 2.5), time(0.0, 10.0);
    double worst = 0;
    for (int draw = 0; draw < 50; draw++) {
        double mu = coupling(rng), b = coupling(rng), t = time(rng);
        DensityMatrix rho0 = random_density(rng);
        EigenMatrix4 gen = to_eigen(build_hamiltonian({.mu = mu, .field_b = b})) * std::complex<double>(0, -t);
        EigenMatrix4 u = gen.exp();
        Matrix4 expected = from_eigen(u * to_eigen(rho0.matrix()) * u.adjoint());
        worst = std::max(worst, max_abs_diff(propagate_spectral(analytic_eigensystem(mu, b), rho0, {0, t}).matrix(), expected));
    }
    return {worst <= 1e-10, "max|spectral - exp(-iHt) rho exp(iHt)| " + fmt(worst) + " (<=1e-10)"};
}

Outcome measure_oracles() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1004);
    std::uniform_int_distribution<std::size_t> pick(0, preset_names().size() - 1);
    std::uniform_real_distribution<double> time(0.0, 30.0);
    double worst_lqu = 0, worst_uin = 0, worst_tdd = 0;
    for (int draw = 0; draw < 100; draw++) {
        SweepConfig cfg = figure_preset(preset_names()[pick(rng)]);
        Eigensystem es = sweep_eigensystem(cfg.model);
        DensityMatrix rho = propagate_spectral(es, initial_density(cfg.state), {cfg.gamma, time(rng)});
        worst_lqu = std::max(worst_lqu, std::abs(lqu(rho).value - lqu_bruteforce(rho, 2048).value));
        worst_uin = std::max(worst_uin, std::abs(uin(rho).value - uin_bruteforce(rho, 2048).value));
        worst_tdd = std::max(worst_tdd, std::abs(tdd_x(elements_from_density(rho)).value - tdd_bruteforce(rho, 2048).value));
    }
    double elapsed = seconds_since(start);
    bool pass = worst_lqu <= 1e-4 && worst_uin <= 1e-4 && worst_tdd <= 2e-3 && elapsed < 300;
    return {pass, "lqu " + fmt(worst_lqu) + " uin " + fmt(worst_uin) + " (<=1e-4), tdd " + fmt(worst_tdd) +
                      " (<=2e-3), " + fmt(elapsed) + " s (<300)"};
}

Outcome concurrence_consistency() {
    std::mt19937_64 rng(1005);
    double worst = 0;
    for (int draw = 0; draw < 500; draw++) {
        XStateElements x = random_x_state(rng);
        worst = std::max(worst, std::abs(concurrence_x(x).value - concurrence(x_state_from_elements(x)).value));
    }
    double bell = concurrence(bell_diagonal({0.9, -0.4, 0.4})).value;
    double w = concurrence(werner({0.9})).value;
    bool pass = worst <= 1e-10 && std::abs(bell - 0.35) <= 1e-10 && std::abs(w - 0.85) <= 1e-10;
    return {pass, "X-form vs general " + fmt(worst) + " (<=1e-10), bell-diagonal " + format_number(bell) +
                      " (0.35), werner " + format_number(w) + " (0.85)"};
}

Outcome steady_state_claims() {
    double worst_gamma = 0, worst_ratio = 0, worst_limit = 0;
    for (const auto &name : preset_names()) {
        SweepConfig cfg = figure_preset(name);
        SweepConfig lo = cfg, hi = cfg, doubled = cfg;
        lo.gamma = 0.1;
        hi.gamma = 0.25;
        doubled.model.mu *= 2;
        doubled.model.field_b *= 2;
        CorrelationRecord a = steady_state_report(lo), b = steady_state_report(hi), c = steady_state_report(cfg),
                          d = steady_state_report(doubled);
        for (int m = 0; m < 4; m++) {
            worst_gamma = std::max(worst_gamma, std::abs(*a.values[m] - *b.values[m]));
            worst_ratio = std::max(worst_ratio, std::abs(*c.values[m] - *d.values[m]));
        }
        Eigensystem es = sweep_eigensystem(cfg.model);
        DensityMatrix rho0 = initial_density(cfg.state);
        double gap = min_nonzero_gap(es);
        double t = 50 / (cfg.gamma * gap * gap);
        worst_limit = std::max(worst_limit, max_abs_diff(propagate_spectral(es, rho0, {cfg.gamma, t}).matrix(),
                                                         steady_state(es, rho0).matrix()));
    }
    bool pass = worst_gamma <= 1e-9 && worst_ratio <= 1e-9 && worst_limit <= 1e-8;
    return {pass, "gamma 0.1 vs 0.25 " + fmt(worst_gamma) + ", (mu,B) vs (2mu,2B) " + fmt(worst_ratio) +
                      " (<=1e-9), long-time propagation " + fmt(worst_limit) + " (<=1e-8)"};
}

struct DeathReport {
    int longest_zero_run = 0;
    bool tdd_rebirth = false;
    double tdd_min = 0;
};

DeathReport sudden_death(const std::string &preset) {
    SweepConfig cfg = figure_preset(preset);
    auto records = run_sweep(cfg).records;
    DeathReport report;
    int run = 0;
    for (const auto &rec : records) {
        if (*rec.values[0] == 0.0 && *rec.values[1] > 1e-4) {
            report.longest_zero_run = std::max(report.longest_zero_run, ++run);
        } else {
            run = 0;
        }
    }
    // above -> below -> above across the 1e-3 threshold.
    int phase = 0;
    report.tdd_min = std::numeric_limits<double>::infinity();
    for (const auto &rec : records) {
        double v = *rec.values[2];
        report.tdd_min = std::min(report.tdd_min, v);
        if (phase == 0 && v > 1e-3) {
            phase = 1;
        } else if (phase == 1 && v < 1e-3) {
            phase = 2;
        } else if (phase == 2 && v > 1e-3) {
            phase = 3;
        }
    }
    report.tdd_rebirth = phase == 3;
    return report;
}

Outcome sudden_death_reproduction() {
    bool pass = true;
    std::string detail;
    for (const std::string preset : {"fig5b", "fig6b"}) {
        DeathReport r = sudden_death(preset);
        pass = pass && r.longest_zero_run >= 3 && r.tdd_rebirth;
        detail += (detail.empty() ? "" : "; ") + preset + ": concurrence zero run " + std::to_string(r.longest_zero_run) +
                  " (>=3, lqu>1e-4), tdd death+rebirth across 1e-3 " + (r.tdd_rebirth ? "yes" : "no") + " (min tdd " +
                  fmt(r.tdd_min) + ")";
    }
    return {pass, detail};
}

Outcome bounds_and_fixed_points() {
    double lowest = 0, highest = 0;
    double mixed_max = 0;
    for (const auto &name : preset_names()) {
        SweepConfig cfg = figure_preset(name);
        for (const auto &rec : run_sweep(cfg).records) {
            for (const auto &v : rec.values) {
                lowest = std::min(lowest, *v);
                highest = std::max(highest, *v);
            }
        }
        for (InitialState fixed : {InitialState{BellDiagonalSpec{0, 0, 0}}, InitialState{WernerSpec{0}}}) {
            SweepConfig zero = cfg;
            zero.state = fixed;
            for (const auto &rec : run_sweep(zero).records) {
                for (const auto &v : rec.values) {
                    mixed_max = std::max(mixed_max, std::abs(*v));
                }
            }
        }
    }
    SweepConfig bell = figure_preset("fig4a");
    bell.state = WernerSpec{1};
    bell.t_steps = 2;
    CorrelationRecord first = run_sweep(bell).records.front();
    double bell_err = 0;
    for (const auto &v : first.values) {
        bell_err = std::max(bell_err, std::abs(*v - 1));
    }
    bool pass = lowest >= 0 && highest <= 1 + 1e-9 && mixed_max == 0 && bell_err <= 1e-9;
    return {pass, "all presets in [" + fmt(lowest) + ", " + format_number(highest) + "] (within [0, 1+1e-9]), "
                  "max |measure| for 1/4 and r=0 " + fmt(mixed_max) + " (exactly 0), bell state " + fmt(bell_err) +
                  " from 1 (<=1e-9)"};
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism(const std::string &cli) {
    if (cli.empty() || !std::filesystem::exists(cli)) {
        return {false, "qcorr executable not found (pass its path as the first argument)"};
    }
    auto dir = std::filesystem::temp_directory_path() / ("qcorr_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::vector<std::string> variants = {"", "", " --threads 4"};
    std::vector<std::string> outputs;
    for (std::size_t k = 0; k < variants.size(); k++) {
        auto out = dir / ("out" + std::to_string(k) + ".csv");
        std::string cmd = "\"" + cli + "\" sweep --preset fig1a -o \"" + out.string() + "\"" + variants[k];
        int status = std::system(cmd.c_str());
        if (status != 0) {
            std::filesystem::remove_all(dir);
            return {false, "command failed: " + cmd};
        }
        outputs.push_back(read_file(out));
    }
    std::filesystem::remove_all(dir);
    bool same = outputs[0] == outputs[1] && outputs[0] == outputs[2] && !outputs[0].empty();
    return {same, "two sequential runs and a 4-thread run: " + std::string(same ? "byte-identical" : "differ") + " (" +
                      std::to_string(outputs[0].size()) + " bytes)"};
}

}  // namespace

int main(int argc, char **argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {"backend equivalence", backend_equivalence},
        {"closed-form evolution", closed_form_evolution},
        {"unitary limit", unitary_limit},
        {"measure oracles", measure_oracles},
        {"concurrence consistency", concurrence_consistency},
        {"steady-state claims", steady_state_claims},
        {"sudden-death reproduction", sudden_death_reproduction},
        {"measure bounds and fixed points", bounds_and_fixed_points},
        {"determinism", [&] { return determinism(cli); }},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); k++) {
        Outcome o;
        try {
            o = criteria[k].run();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].name << ": " << o.detail
                  << std::endl;
    }
    std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
