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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "qcorr/error.h"
#include "support.h"

using namespace qcorr;
using namespace qcorr::testing;

TEST(Pauli, AlgebraAndKron) {
    Matrix2 x = pauli(1), y = pauli(2), z = pauli(3);
    Complex i{0, 1};
    EXPECT_LT(max_abs_diff(x * y, z * i), 1e-15);
    EXPECT_LT(max_abs_diff(y * z, x * i), 1e-15);
    EXPECT_LT(max_abs_diff(z * z, Matrix2::identity()), 1e-15);
    EXPECT_THROW(pauli(4), Error);

    Matrix4 zz = pauli_product(3, 3);
    EXPECT_EQ(zz(0, 0), Complex(1));
    EXPECT_EQ(zz(1, 1), Complex(-1));
    EXPECT_EQ(zz(2, 2), Complex(-1));
    EXPECT_EQ(zz(3, 3), Complex(1));
    // sigma_x on qubit A flips the most significant bit.
    Matrix4 xa = kron(x, Matrix2::identity());
    EXPECT_EQ(xa(2, 0), Complex(1));
    EXPECT_EQ(xa(3, 1), Complex(1));
}

TEST(HermitianEig, MatchesEigenOnRandomMatrices) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        Matrix4 h = random_hermitian(rng);
        HermitianEig eig = hermitian_eig(h);
        Eigen::SelfAdjointEigenSolver<EigenMatrix4> ref(to_eigen(h));
        for (int k = 0; k < 4; k++) {
            EXPECT_NEAR(eig.values[k], ref.eigenvalues()(k), 1e-12);
        }
        EXPECT_LT(max_abs_diff(eig.reconstruct(), h), 1e-12);
        Matrix4 u = eig.unitary();
        EXPECT_LT(max_abs_diff(u.adjoint() * u, Matrix4::identity()), 1e-12);
    }
}

TEST(HermitianEig, DegenerateSpectrumStaysOrthonormal) {
    std::mt19937_64 rng(12);
    for (auto values : {std::array<double, 4>{0.5, 0.5, 0.5, -1}, std::array<double, 4>{2, 2, 2, 2},
                        std::array<double, 4>{-1, -1, 3, 3}, std::array<double, 4>{0, 0, 0, 1}}) {
        Matrix4 u = random_unitary(rng);
        Matrix4 h = (u * Matrix4::diagonal(values) * u.adjoint()).hermitian_part();
        HermitianEig eig = hermitian_eig(h);
        std::sort(values.begin(), values.end());
        for (int k = 0; k < 4; k++) {
            EXPECT_NEAR(eig.values[k], values[k], 1e-12);
        }
        Matrix4 v = eig.unitary();
        EXPECT_LT(max_abs_diff(v.adjoint() * v, Matrix4::identity()), 1e-12);
        EXPECT_LT(max_abs_diff(eig.reconstruct(), h), 1e-12);
    }
}

TEST(HermitianEig, RejectsNonHermitian) {
    Matrix4 m = Matrix4::identity();
    m(0, 1) = 1e-6;
    try {
        hermitian_eig(m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonHermitianInput);
    }
    m(0, 1) = std::nan("");
    EXPECT_THROW(hermitian_eig(m), Error);
}

TEST(SqrtPsd, SquaresBackAndRejectsNegative) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; trial++) {
        Matrix4 rho = random_density(rng).matrix();
        Matrix4 s = sqrt_psd(rho);
        EXPECT_LT(max_abs_diff(s * s, rho), 1e-12);
        EXPECT_LT(s.hermiticity_error(), 1e-15);
    }
    // Rank-one projector: sqrt is itself.
    Vector4 ket{Complex(0.6), 0, 0, Complex(0, 0.8)};
    Matrix4 p = outer(ket, ket);
    EXPECT_LT(max_abs_diff(sqrt_psd(p), p), 1e-12);

    Matrix4 neg = Matrix4::diagonal({0.5, 0.5, 0.1, -0.1});
    try {
        sqrt_psd(neg);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPositiveSemidefinite);
    }
    // Roundoff-sized negatives are clamped.
    EXPECT_NO_THROW(sqrt_psd(Matrix4::diagonal({0.5, 0.5, 0, -1e-12})));
}

TEST(TraceNorm, MatchesSingularValues) {
    std::mt19937_64 rng(14);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 50; trial++) {
        Matrix4 h = random_hermitian(rng);
        Matrix4 general;
        for (std::size_t r = 0; r < 4; r++) {
            for (std::size_t c = 0; c < 4; c++) {
                general(r, c) = Complex(g(rng), g(rng));
            }
        }
        for (const Matrix4 &m : {h, general}) {
            Eigen::JacobiSVD<EigenMatrix4> svd(to_eigen(m));
            EXPECT_NEAR(trace_norm(m), svd.singularValues().sum(), 1e-11);
        }
    }
}

TEST(FanoBloch, RoundTripAndPartialTrace) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 20; trial++) {
        DensityMatrix rho = random_density(rng);
        FanoBloch fb = fano_bloch(rho.matrix());
        EXPECT_NEAR(fb(0, 0), 1.0, 1e-14);
        EXPECT_LT(max_abs_diff(fb.reconstruct(), rho.matrix()), 1e-14);

        Matrix2 a = partial_trace_b(rho.matrix());
        auto r = bloch_vector(a);
        for (int k = 0; k < 3; k++) {
            EXPECT_NEAR(r[k], fb(k + 1, 0), 1e-14);
        }
    }
}

TEST(HermitianEigenvalues2, MatchesClosedForm) {
    Matrix2 m;
    m(0, 0) = 0.7;
    m(1, 1) = 0.3;
    m(0, 1) = Complex(0.1, 0.2);
    m(1, 0) = std::conj(m(0, 1));
    auto ev = hermitian_eigenvalues(m);
    double radius = std::sqrt(0.04 + 0.05);
    EXPECT_NEAR(ev[0], 0.5 - radius, 1e-15);
    EXPECT_NEAR(ev[1], 0.5 + radius, 1e-15);
}
