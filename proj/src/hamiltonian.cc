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

#include "qcorr/hamiltonian.h"

#include <cmath>
#include <string>

#include "qcorr/error.h"

namespace qcorr {

namespace {

void require_coupling(const char *name, double value) {
    if (!std::isfinite(value) || value < 0) {
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be finite and >= 0, got " + std::to_string(value));
    }
}

}  // namespace

void ModelParams::validate() const {
    require_coupling("mu", mu);
    require_coupling("zeta", zeta);
    require_coupling("gamma_xy", gamma_xy);
    require_coupling("field_b", field_b);
}

Matrix4 Eigensystem::unitary() const {
    Matrix4 u;
    for (std::size_t c = 0; c < 4; c++) {
        for (std::size_t r = 0; r < 4; r++) {
            u(r, c) = states[c][r];
        }
    }
    return u;
}

Matrix4 collective_spin(int axis) {
    Matrix2 id = pauli(0);
    Matrix2 s = pauli(axis);
    return (kron(s, id) + kron(id, s)) * Complex(0.5);
}

Matrix4 build_hamiltonian(const ModelParams &p) {
    p.validate();
    Matrix4 sx = collective_spin(1);
    Matrix4 sy = collective_spin(2);
    Matrix4 sz = collective_spin(3);
    Matrix4 h = sx * sx * Complex(p.mu) + sz * Complex(p.field_b);
    if (p.zeta != 0) {
        h += sy * sy * Complex(p.zeta);
    }
    if (p.gamma_xy != 0) {
        h += (sx * sy + sy * sx) * Complex(p.gamma_xy);
    }
    return h.hermitian_part();
}

double kappa(double mu, double field_b) {
    return std::sqrt(mu * mu + 4 * field_b * field_b);
}

Eigensystem analytic_eigensystem(double mu, double field_b) {
    ModelParams{.mu = mu, .field_b = field_b}.validate();
    Eigensystem es;
    es.kappa = kappa(mu, field_b);
    if (mu == 0 && field_b == 0) {
        es.degenerate = true;
        for (std::size_t k = 0; k < 4; k++) {
            es.states[k][k] = 1;
        }
        return es;
    }
    double k = es.kappa;
    es.energies = {(mu - k) / 2, (mu + k) / 2, 0, mu};

    // {|00>, |11>} sector. With Sz|00> = +|00>, the pair is
    //   (mu - kappa)/2 : mu|00> - (kappa + 2B)|11>
    //   (mu + kappa)/2 : (kappa + 2B)|00> + mu|11>
    // Both share the norm sqrt(mu^2 + (kappa + 2B)^2), which only vanishes at mu = B = 0.
    double big = k + 2 * field_b;
    double norm = std::hypot(mu, big);
    es.states[0] = {mu / norm, 0, 0, -big / norm};
    es.states[1] = {big / norm, 0, 0, mu / norm};

    double h = 1 / std::sqrt(2.0);
    es.states[2] = {0, -h, h, 0};  // (|10> - |01>)/sqrt2
    es.states[3] = {0, h, h, 0};   // (|10> + |01>)/sqrt2
    return es;
}

Eigensystem numeric_eigensystem(const ModelParams &p) {
    HermitianEig eig = hermitian_eig(build_hamiltonian(p));
    Eigensystem es;
    es.energies = eig.values;
    es.states = eig.vectors;
    es.kappa = kappa(p.mu, p.field_b);
    return es;
}

std::array<std::array<double, 4>, 4> bohr_frequencies(const Eigensystem &es) {
    std::array<std::array<double, 4>, 4> table{};
    for (std::size_t m = 0; m < 4; m++) {
        for (std::size_t n = 0; n < 4; n++) {
            table[m][n] = es.energies[m] - es.energies[n];
        }
    }
    return table;
}

}  // namespace qcorr
