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

#include "qcorr/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qcorr/error.h"
#include "qcorr/tolerances.h"

namespace qcorr {

Matrix4 kron(const Matrix2 &a, const Matrix2 &b) {
    Matrix4 m;
    for (std::size_t r1 = 0; r1 < 2; r1++) {
        for (std::size_t c1 = 0; c1 < 2; c1++) {
            for (std::size_t r2 = 0; r2 < 2; r2++) {
                for (std::size_t c2 = 0; c2 < 2; c2++) {
                    m(2 * r1 + r2, 2 * c1 + c2) = a(r1, c1) * b(r2, c2);
                }
            }
        }
    }
    return m;
}

Matrix2 pauli(int index) {
    Matrix2 m;
    switch (index) {
        case 0:
            m(0, 0) = 1;
            m(1, 1) = 1;
            break;
        case 1:
            m(0, 1) = 1;
            m(1, 0) = 1;
            break;
        case 2:
            m(0, 1) = Complex{0, -1};
            m(1, 0) = Complex{0, 1};
            break;
        case 3:
            m(0, 0) = 1;
            m(1, 1) = -1;
            break;
        default:
            throw Error(ErrorKind::InvalidArgument, "Pauli index must be in 0..3, got " + std::to_string(index));
    }
    return m;
}

Matrix4 pauli_product(int alpha, int beta) {
    return kron(pauli(alpha), pauli(beta));
}

Matrix4 outer(const Vector4 &ket, const Vector4 &bra) {
    Matrix4 m;
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            m(r, c) = ket[r] * std::conj(bra[c]);
        }
    }
    return m;
}

Vector4 matvec(const Matrix4 &m, const Vector4 &v) {
    Vector4 out{};
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

Complex inner(const Vector4 &a, const Vector4 &b) {
    Complex s = 0;
    for (std::size_t k = 0; k < 4; k++) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

double vector_norm(const Vector4 &v) {
    return std::sqrt(std::real(inner(v, v)));
}

Matrix4 HermitianEig::unitary() const {
    Matrix4 u;
    for (std::size_t c = 0; c < 4; c++) {
        for (std::size_t r = 0; r < 4; r++) {
            u(r, c) = vectors[c][r];
        }
    }
    return u;
}

Matrix4 HermitianEig::reconstruct() const {
    Matrix4 u = unitary();
    return u * Matrix4::diagonal(values) * u.adjoint();
}

namespace {

double off_diagonal_norm_sq(const Matrix4 &a) {
    double s = 0;
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return s;
}

// Zeroes a(p, q) by the unitary G = D P, where D rotates the phase of column q
// so the pivot becomes real and P is a real Givens rotation. Updates a <- G^dagger a G
// and v <- v G.
void jacobi_rotate(Matrix4 &a, Matrix4 &v, std::size_t p, std::size_t q) {
    Complex apq = a(p, q);
    double mag = std::abs(apq);
    if (mag == 0) {
        return;
    }
    Complex phase = std::conj(apq) / mag;  // a(p,q) * phase is real, positive.
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double theta = (aqq - app) / (2 * mag);
    double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
    double c = 1 / std::sqrt(t * t + 1);
    double s = t * c;

    // Columns of G: g_p = c e_p - s phase e_q, g_q = s e_p + c phase e_q.
    Complex gpp = c, gqp = -s * phase, gpq = s, gqq = c * phase;

    // a <- a G (columns p, q).
    for (std::size_t r = 0; r < 4; r++) {
        Complex arp = a(r, p), arq = a(r, q);
        a(r, p) = arp * gpp + arq * gqp;
        a(r, q) = arp * gpq + arq * gqq;
        Complex vrp = v(r, p), vrq = v(r, q);
        v(r, p) = vrp * gpp + vrq * gqp;
        v(r, q) = vrp * gpq + vrq * gqq;
    }
    // a <- G^dagger a (rows p, q).
    for (std::size_t col = 0; col < 4; col++) {
        Complex apc = a(p, col), aqc = a(q, col);
        a(p, col) = std::conj(gpp) * apc + std::conj(gqp) * aqc;
        a(q, col) = std::conj(gpq) * apc + std::conj(gqq) * aqc;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

void gram_schmidt(std::span<Vector4> vs) {
    for (std::size_t i = 0; i < vs.size(); i++) {
        for (std::size_t j = 0; j < i; j++) {
            Complex proj = inner(vs[j], vs[i]);
            for (std::size_t k = 0; k < 4; k++) {
                vs[i][k] -= proj * vs[j][k];
            }
        }
        double n = vector_norm(vs[i]);
        for (auto &z : vs[i]) {
            z /= n;
        }
    }
}

}  // namespace

HermitianEig hermitian_eig(const Matrix4 &m) {
    if (!m.is_finite()) {
        throw Error(ErrorKind::NonHermitianInput, "matrix has non-finite entries");
    }
    double herr = m.hermiticity_error();
    if (herr > tol::kHermitian) {
        throw Error(ErrorKind::NonHermitianInput, "max|M - M^dagger| = " + std::to_string(herr));
    }
    Matrix4 a = m.hermitian_part();
    Matrix4 v = Matrix4::identity();
    double scale = std::max(1.0, a.frobenius_norm());
    double threshold = tol::kJacobiOffDiagonal * scale;
    for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; sweep++) {
        if (std::sqrt(off_diagonal_norm_sq(a)) < threshold) {
            break;
        }
        for (std::size_t p = 0; p < 3; p++) {
            for (std::size_t q = p + 1; q < 4; q++) {
                jacobi_rotate(a, v, p, q);
            }
        }
    }

    std::array<std::size_t, 4> order;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });

    HermitianEig result;
    for (std::size_t k = 0; k < 4; k++) {
        result.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < 4; r++) {
            result.vectors[k][r] = v(r, order[k]);
        }
    }

    // Re-orthonormalize clusters of (nearly) equal eigenvalues.
    double deg = tol::kEigenDegeneracy * std::max(1.0, std::abs(result.values[3]) + std::abs(result.values[0]));
    std::size_t start = 0;
    for (std::size_t k = 1; k <= 4; k++) {
        if (k == 4 || result.values[k] - result.values[k - 1] > deg) {
            if (k - start > 1) {
                gram_schmidt(std::span<Vector4>(result.vectors.data() + start, k - start));
            }
            start = k;
        }
    }
    return result;
}

std::array<double, 2> hermitian_eigenvalues(const Matrix2 &m) {
    double a = m(0, 0).real();
    double d = m(1, 1).real();
    double mean = 0.5 * (a + d);
    double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {mean - radius, mean + radius};
}

std::array<double, 4> eigenvalue_roots(const std::array<double, 4> &values) {
    // Eigenvalues within roundoff of zero are zero; their square roots would not be.
    double noise = 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(values[3]));
    std::array<double, 4> roots;
    for (std::size_t k = 0; k < 4; k++) {
        roots[k] = values[k] > noise ? std::sqrt(values[k]) : 0.0;
    }
    return roots;
}

Matrix4 sqrt_psd(const Matrix4 &m) {
    HermitianEig eig = hermitian_eig(m);
    for (double lambda : eig.values) {
        if (lambda < -tol::kPsdClamp) {
            throw Error(ErrorKind::NotPositiveSemidefinite, "eigenvalue " + std::to_string(lambda) + " is negative");
        }
    }
    Matrix4 u = eig.unitary();
    return (u * Matrix4::diagonal(eigenvalue_roots(eig.values)) * u.adjoint()).hermitian_part();
}

double trace_norm(const Matrix4 &m) {
    // Hermitian input: sum |eigenvalues|. Otherwise sum sqrt(eig(M^dagger M)).
    double scale = std::max(1.0, m.max_abs());
    if (m.hermiticity_error() <= tol::kHermitian * scale) {
        HermitianEig eig = hermitian_eig(m.hermitian_part());
        double s = 0;
        for (double x : eig.values) {
            s += std::abs(x);
        }
        return s;
    }
    HermitianEig eig = hermitian_eig((m.adjoint() * m).hermitian_part());
    double s = 0;
    for (double x : eig.values) {
        s += std::sqrt(std::max(0.0, x));
    }
    return s;
}

FanoBloch fano_bloch(const Matrix4 &m) {
    FanoBloch fb;
    for (int alpha = 0; alpha < 4; alpha++) {
        for (int beta = 0; beta < 4; beta++) {
            fb.coefficients[alpha][beta] = (m * pauli_product(alpha, beta)).trace().real();
        }
    }
    return fb;
}

Matrix4 FanoBloch::reconstruct() const {
    Matrix4 m;
    for (int alpha = 0; alpha < 4; alpha++) {
        for (int beta = 0; beta < 4; beta++) {
            if (coefficients[alpha][beta] != 0) {
                m += pauli_product(alpha, beta) * Complex(0.25 * coefficients[alpha][beta]);
            }
        }
    }
    return m;
}

Matrix2 partial_trace_b(const Matrix4 &m) {
    Matrix2 out;
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
        }
    }
    return out;
}

std::array<double, 3> bloch_vector(const Matrix2 &rho) {
    return {
        2 * rho(0, 1).real(),
        -2 * rho(0, 1).imag(),
        (rho(0, 0) - rho(1, 1)).real(),
    };
}

}  // namespace qcorr
