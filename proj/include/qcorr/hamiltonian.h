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

#ifndef QCORR_HAMILTONIAN_H
#define QCORR_HAMILTONIAN_H

#include <array>

#include "qcorr/linalg.h"

namespace qcorr {

/// Couplings of H = mu Sx^2 + zeta Sy^2 + gamma_xy (Sx Sy + Sy Sx) + field_b Sz
/// with collective spins S_a = (sigma_a (x) 1 + 1 (x) sigma_a) / 2.
struct ModelParams {
    double mu = 0;
    double zeta = 0;
    double gamma_xy = 0;
    double field_b = 0;

    /// Throws InvalidArgument naming the offending field.
    void validate() const;
    bool is_one_axis_twisting() const {
        return zeta == 0 && gamma_xy == 0;
    }
};

/// Energies and eigenstates of the one-axis-twisting Hamiltonian.
/// `states[k]` belongs to `energies[k]`; the ordering is
/// ((mu - kappa)/2, (mu + kappa)/2, 0, mu) for the analytic form.
struct Eigensystem {
    std::array<double, 4> energies{};
    std::array<Vector4, 4> states{};
    double kappa = 0;
    /// Set when mu = B = 0: states are the computational basis, energies zero.
    bool degenerate = false;

    /// Unitary whose k-th column is states[k].
    Matrix4 unitary() const;
};

Matrix4 build_hamiltonian(const ModelParams &p);

/// Collective spin operator along axis 1..3.
Matrix4 collective_spin(int axis);

double kappa(double mu, double field_b);

/// Closed-form eigensystem for zeta = gamma_xy = 0.
Eigensystem analytic_eigensystem(double mu, double field_b);

/// Eigensystem from the Jacobi solver; works for any ModelParams.
Eigensystem numeric_eigensystem(const ModelParams &p);

/// Table of E_m - E_n.
std::array<std::array<double, 4>, 4> bohr_frequencies(const Eigensystem &es);

}  // namespace qcorr

#endif
