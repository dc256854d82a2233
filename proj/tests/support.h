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

#ifndef QCORR_TESTS_SUPPORT_H
#define QCORR_TESTS_SUPPORT_H

#include <Eigen/Dense>
#include <random>

#include "qcorr/evolution.h"
#include "qcorr/linalg.h"
#include "qcorr/states.h"

namespace qcorr::testing {

using EigenMatrix4 = Eigen::Matrix<std::complex<double>, 4, 4>;

inline EigenMatrix4 to_eigen(const Matrix4 &m) {
    EigenMatrix4 out;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

inline Matrix4 from_eigen(const EigenMatrix4 &m) {
    Matrix4 out;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

inline Matrix4 random_hermitian(std::mt19937_64 &rng, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    Matrix4 m;
    for (std::size_t r = 0; r < 4; r++) {
        m(r, r) = g(rng);
        for (std::size_t c = r + 1; c < 4; c++) {
            m(r, c) = Complex(g(rng), g(rng));
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

/// Haar-ish random unitary from the QR of a Ginibre matrix.
inline Matrix4 random_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    EigenMatrix4 z;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            z(r, c) = {g(rng), g(rng)};
        }
    }
    Eigen::HouseholderQR<EigenMatrix4> qr(z);
    EigenMatrix4 q = qr.householderQ();
    return from_eigen(q);
}

inline Matrix2 random_unitary2(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 2 * M_PI);
    double theta = u(rng) / 2, alpha = u(rng), beta = u(rng), phi = u(rng);
    Complex e_alpha = std::polar(1.0, alpha), e_beta = std::polar(1.0, beta), e_phi = std::polar(1.0, phi);
    Matrix2 m;
    m(0, 0) = e_phi * e_alpha * std::cos(theta);
    m(0, 1) = e_phi * e_beta * std::sin(theta);
    m(1, 0) = -e_phi * std::conj(e_beta) * std::sin(theta);
    m(1, 1) = e_phi * std::conj(e_alpha) * std::cos(theta);
    return m;
}

/// Full-rank random state G G^dagger / Tr.
inline DensityMatrix random_density(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Matrix4 z;
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            z(r, c) = Complex(g(rng), g(rng));
        }
    }
    Matrix4 p = z * z.adjoint();
    Complex tr = p.trace();
    return DensityMatrix::from_matrix(p * (1.0 / tr));
}

inline XStateElements random_x_state(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::array<double, 4> p;
    double s = 0;
    for (double &v : p) {
        v = -std::log(1 - u(rng));
        s += v;
    }
    for (double &v : p) {
        v /= s;
    }
    XStateElements x;
    x.rho11 = p[0];
    x.rho22 = p[1];
    x.rho33 = p[2];
    x.rho44 = p[3];
    x.rho14 = std::polar(u(rng) * std::sqrt(p[0] * p[3]), 2 * M_PI * u(rng));
    x.rho23 = std::polar(u(rng) * std::sqrt(p[1] * p[2]), 2 * M_PI * u(rng));
    return x;
}

/// Uniform point of the physical tetrahedron of Bell-diagonal correlations.
inline BellDiagonalSpec random_bell_diagonal(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        BellDiagonalSpec s{u(rng), u(rng), u(rng)};
        auto lam = s.bell_eigenvalues();
        if (*std::min_element(lam.begin(), lam.end()) >= 0) {
            return s;
        }
    }
}

}  // namespace qcorr::testing

#endif
