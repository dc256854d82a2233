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

#ifndef QCORR_LINALG_H
#define QCORR_LINALG_H

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

namespace qcorr {

using Complex = std::complex<double>;
using Vector4 = std::array<Complex, 4>;

/// Dense N x N complex matrix stored row-major. Only N = 2 and N = 4 are used.
template <std::size_t N>
class SquareMatrix {
   public:
    static constexpr std::size_t kDim = N;

    constexpr SquareMatrix() : data_{} {
    }

    static SquareMatrix identity() {
        SquareMatrix m;
        for (std::size_t k = 0; k < N; k++) {
            m(k, k) = 1.0;
        }
        return m;
    }

    static SquareMatrix diagonal(const std::array<double, N> &values) {
        SquareMatrix m;
        for (std::size_t k = 0; k < N; k++) {
            m(k, k) = values[k];
        }
        return m;
    }

    Complex &operator()(std::size_t row, std::size_t col) {
        return data_[row * N + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * N + col];
    }

    std::span<const Complex, N * N> entries() const {
        return data_;
    }

    SquareMatrix adjoint() const {
        SquareMatrix m;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t c = 0; c < N; c++) {
                m(r, c) = std::conj((*this)(c, r));
            }
        }
        return m;
    }

    SquareMatrix conjugate() const {
        SquareMatrix m;
        for (std::size_t k = 0; k < N * N; k++) {
            m.data_[k] = std::conj(data_[k]);
        }
        return m;
    }

    Complex trace() const {
        Complex t = 0;
        for (std::size_t k = 0; k < N; k++) {
            t += (*this)(k, k);
        }
        return t;
    }

    /// Largest entry modulus.
    double max_abs() const {
        double m = 0;
        for (const auto &z : data_) {
            m = std::max(m, std::abs(z));
        }
        return m;
    }

    double frobenius_norm() const {
        double s = 0;
        for (const auto &z : data_) {
            s += std::norm(z);
        }
        return std::sqrt(s);
    }

    bool is_finite() const {
        for (const auto &z : data_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                return false;
            }
        }
        return true;
    }

    /// max |M - M^dagger|.
    double hermiticity_error() const {
        double m = 0;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t c = r; c < N; c++) {
                m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
            }
        }
        return m;
    }

    /// (M + M^dagger) / 2.
    SquareMatrix hermitian_part() const {
        SquareMatrix m;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t c = 0; c < N; c++) {
                m(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
            }
        }
        return m;
    }

    SquareMatrix &operator+=(const SquareMatrix &o) {
        for (std::size_t k = 0; k < N * N; k++) {
            data_[k] += o.data_[k];
        }
        return *this;
    }
    SquareMatrix &operator-=(const SquareMatrix &o) {
        for (std::size_t k = 0; k < N * N; k++) {
            data_[k] -= o.data_[k];
        }
        return *this;
    }
    SquareMatrix &operator*=(Complex s) {
        for (auto &z : data_) {
            z *= s;
        }
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix &b) {
        return a += b;
    }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix &b) {
        return a -= b;
    }
    friend SquareMatrix operator*(SquareMatrix a, Complex s) {
        return a *= s;
    }
    friend SquareMatrix operator*(Complex s, SquareMatrix a) {
        return a *= s;
    }
    friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) {
        SquareMatrix m;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t k = 0; k < N; k++) {
                Complex ark = a(r, k);
                if (ark == Complex{}) {
                    continue;
                }
                for (std::size_t c = 0; c < N; c++) {
                    m(r, c) += ark * b(k, c);
                }
            }
        }
        return m;
    }
    friend bool operator==(const SquareMatrix &a, const SquareMatrix &b) = default;

   private:
    std::array<Complex, N * N> data_;
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;

/// max |a - b| over entries.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N> &a, const SquareMatrix<N> &b) {
    return (a - b).max_abs();
}

Matrix4 kron(const Matrix2 &a, const Matrix2 &b);
Matrix2 pauli(int index);                 // 0 = identity, 1 = x, 2 = y, 3 = z
Matrix4 pauli_product(int alpha, int beta);  // sigma_alpha (x) sigma_beta
Matrix4 outer(const Vector4 &ket, const Vector4 &bra);  // |ket><bra|
Vector4 matvec(const Matrix4 &m, const Vector4 &v);
Complex inner(const Vector4 &a, const Vector4 &b);  // <a|b>
double vector_norm(const Vector4 &v);

/// Eigendecomposition of a Hermitian 4x4 matrix. `values` ascend and
/// `vectors[k]` is the unit eigenvector for `values[k]`.
struct HermitianEig {
    std::array<double, 4> values;
    std::array<Vector4, 4> vectors;

    Matrix4 reconstruct() const;
    /// Unitary whose k-th column is vectors[k].
    Matrix4 unitary() const;
};

/// Cyclic complex Jacobi. Throws NonHermitianInput when max|M - M^dagger|
/// exceeds tol::kHermitian. Eigenvectors within a degenerate cluster are
/// Gram-Schmidt re-orthonormalized in index order.
HermitianEig hermitian_eig(const Matrix4 &m);

/// Eigenvalues of a Hermitian 2x2 matrix, ascending.
std::array<double, 2> hermitian_eigenvalues(const Matrix2 &m);

/// Square roots of ascending eigenvalues. Values at or below
/// 16 eps max(1, largest) give zero.
std::array<double, 4> eigenvalue_roots(const std::array<double, 4> &values);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-tol::kPsdClamp, 0) are clamped to zero; anything more
/// negative throws NotPositiveSemidefinite.
Matrix4 sqrt_psd(const Matrix4 &m);

/// Schatten 1-norm (sum of singular values).
double trace_norm(const Matrix4 &m);

/// Coefficients R[alpha][beta] = Tr(M sigma_alpha (x) sigma_beta), so that
/// M = 1/4 sum R[alpha][beta] sigma_alpha (x) sigma_beta. Indices run over
/// {1, x, y, z}.
struct FanoBloch {
    std::array<std::array<double, 4>, 4> coefficients{};

    double operator()(int alpha, int beta) const {
        return coefficients[alpha][beta];
    }
    Matrix4 reconstruct() const;
};

FanoBloch fano_bloch(const Matrix4 &m);

/// Reduced operator on the first qubit: (rho_a)_{ij} = sum_k M_{ik,jk}.
Matrix2 partial_trace_b(const Matrix4 &m);

/// Bloch vector (Tr(rho sigma_x), Tr(rho sigma_y), Tr(rho sigma_z)).
std::array<double, 3> bloch_vector(const Matrix2 &rho);

}  // namespace qcorr

#endif
