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

#include "qcorr/states.h"

#include <cmath>
#include <string>

#include "qcorr/error.h"
#include "qcorr/hamiltonian.h"
#include "qcorr/tolerances.h"

namespace qcorr {

std::array<double, 4> BellDiagonalSpec::bell_eigenvalues() const {
    return {
        (1 - c1 - c2 - c3) / 4,
        (1 - c1 + c2 + c3) / 4,
        (1 + c1 - c2 + c3) / 4,
        (1 + c1 + c2 - c3) / 4,
    };
}

void BellDiagonalSpec::validate() const {
    const double cs[] = {c1, c2, c3};
    for (int j = 0; j < 3; j++) {
        if (!std::isfinite(cs[j]) || std::abs(cs[j]) > 1) {
            throw Error(ErrorKind::InvalidArgument,
                        "c" + std::to_string(j + 1) + " must lie in [-1, 1], got " + std::to_string(cs[j]));
        }
    }
    for (double lambda : bell_eigenvalues()) {
        if (lambda < tol::kBellDiagonalEigenFloor) {
            throw Error(ErrorKind::NotPhysical, "Bell-diagonal coefficients (" + std::to_string(c1) + ", " +
                                                    std::to_string(c2) + ", " + std::to_string(c3) +
                                                    ") give eigenvalue " + std::to_string(lambda));
        }
    }
}

void WernerSpec::validate() const {
    if (!std::isfinite(r) || r < 0 || r > 1) {
        throw Error(ErrorKind::InvalidArgument, "r must lie in [0, 1], got " + std::to_string(r));
    }
}

void XStateElements::validate() const {
    double tr = rho11 + rho22 + rho33 + rho44;
    if (std::abs(tr - 1) > tol::kTrace) {
        throw Error(ErrorKind::NotPhysical, "X-state trace is " + std::to_string(tr));
    }
    if (rho11 < 0 || rho22 < 0 || rho33 < 0 || rho44 < 0) {
        throw Error(ErrorKind::NotPhysical, "X-state has a negative population");
    }
    if (std::abs(rho14) > std::sqrt(rho11 * rho44) + 1e-9 || std::abs(rho23) > std::sqrt(rho22 * rho33) + 1e-9) {
        throw Error(ErrorKind::NotPhysical, "X-state coherence exceeds its population bound");
    }
}

DensityMatrix bell_diagonal(const BellDiagonalSpec &spec) {
    spec.validate();
    Matrix4 m = Matrix4::identity() + pauli_product(1, 1) * Complex(spec.c1) + pauli_product(2, 2) * Complex(spec.c2) +
                pauli_product(3, 3) * Complex(spec.c3);
    return DensityMatrix::unchecked(m * Complex(0.25));
}

DensityMatrix werner(const WernerSpec &spec) {
    spec.validate();
    double h = 1 / std::sqrt(2.0);
    Vector4 phi{h, 0, 0, h};
    Matrix4 m = Matrix4::identity() * Complex((1 - spec.r) / 4) + outer(phi, phi) * Complex(spec.r);
    return DensityMatrix::unchecked(m);
}

DensityMatrix x_state_from_elements(const XStateElements &x) {
    Matrix4 m;
    m(0, 0) = x.rho11;
    m(1, 1) = x.rho22;
    m(2, 2) = x.rho33;
    m(3, 3) = x.rho44;
    m(0, 3) = x.rho14;
    m(3, 0) = std::conj(x.rho14);
    m(1, 2) = x.rho23;
    m(2, 1) = std::conj(x.rho23);
    return DensityMatrix::unchecked(m);
}

XStateElements elements_from_density(const DensityMatrix &rho) {
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            bool on_x = r == c || r + c == 3;
            if (!on_x && std::abs(rho(r, c)) > tol::kOffXEntry) {
                throw Error(ErrorKind::NotXStructured, "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                                           ") has modulus " + std::to_string(std::abs(rho(r, c))));
            }
        }
    }
    return XStateElements{
        .rho11 = rho(0, 0).real(),
        .rho22 = rho(1, 1).real(),
        .rho33 = rho(2, 2).real(),
        .rho44 = rho(3, 3).real(),
        .rho14 = rho(0, 3),
        .rho23 = rho(1, 2),
    };
}

namespace {

// Both initial families share the structure [[A, C], [C, A]] on {|00>, |11>}
// and [[D, E], [E, D]] on {|01>, |10>}. The second block commutes with H.
XStateElements evolve_x_family(double a, double c, double d, double e, double mu, double field_b, double gamma,
                               double t) {
    double k = kappa(mu, field_b);
    if (k == 0) {
        return {.rho11 = a, .rho22 = d, .rho33 = d, .rho44 = a, .rho14 = c, .rho23 = e};
    }
    double k2 = k * k;
    double damping = std::exp(-0.5 * gamma * t * k2);
    double swing = 2 * mu * field_b * c / k2 * (1 - std::cos(k * t) * damping);
    Complex rho14 = mu * mu * c / k2 + 2 * field_b * c / k2 * damping *
                                           Complex(2 * field_b * std::cos(k * t), -k * std::sin(k * t));
    return {
        .rho11 = a + swing,
        .rho22 = d,
        .rho33 = d,
        .rho44 = a - swing,
        .rho14 = rho14,
        .rho23 = e,
    };
}

}  // namespace

XStateElements evolved_bell_diagonal_elements(const BellDiagonalSpec &spec, double mu, double field_b, double gamma,
                                              double t) {
    spec.validate();
    ModelParams{.mu = mu, .field_b = field_b}.validate();
    DecoherenceParams{gamma, t}.validate();
    return evolve_x_family((1 + spec.c3) / 4, (spec.c1 - spec.c2) / 4, (1 - spec.c3) / 4, (spec.c1 + spec.c2) / 4, mu,
                           field_b, gamma, t);
}

XStateElements evolved_werner_elements(const WernerSpec &spec, double mu, double field_b, double gamma, double t) {
    spec.validate();
    ModelParams{.mu = mu, .field_b = field_b}.validate();
    DecoherenceParams{gamma, t}.validate();
    return evolve_x_family((1 + spec.r) / 4, spec.r / 2, (1 - spec.r) / 4, 0, mu, field_b, gamma, t);
}

}  // namespace qcorr
