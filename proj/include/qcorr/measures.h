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

#ifndef QCORR_MEASURES_H
#define QCORR_MEASURES_H

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "qcorr/evolution.h"
#include "qcorr/states.h"

namespace qcorr {

enum class Method { ClosedForm, BruteForce };

struct MeasureResult {
    double value = 0;
    Method method = Method::ClosedForm;
    /// Bloch direction of the optimal local observable or measurement axis.
    std::optional<std::array<double, 3>> optimizer_argument;
};

using RealMatrix3 = std::array<std::array<double, 3>, 3>;

/// Eigenvalues of a real symmetric 3x3 matrix, descending. Trigonometric
/// Cardano solution with a Jacobi fallback near repeated roots.
std::array<double, 3> symmetric3_eigenvalues(const RealMatrix3 &m);

/// w_ij = Tr{sqrt(rho) (sigma_i (x) 1) sqrt(rho) (sigma_j (x) 1)}.
struct WMatrix {
    RealMatrix3 w{};
    /// Descending.
    std::array<double, 3> eigenvalues{};
};

WMatrix w_matrix(const DensityMatrix &rho);

/// Concurrence from the eigenvalues of sqrt(sqrt(rho) rho~ sqrt(rho)).
MeasureResult concurrence(const DensityMatrix &rho);
/// 2 max{0, |rho14| - sqrt(rho22 rho33), |rho23| - sqrt(rho11 rho44)}.
MeasureResult concurrence_x(const XStateElements &x);

/// Local quantum uncertainty: 1 - largest eigenvalue of W.
MeasureResult lqu(const DensityMatrix &rho);

/// Uncertainty-induced nonlocality. With r the Bloch vector of rho_a:
/// 1 - min eig(W) when |r| < tol::kBlochVectorZero, else 1 - r.W.r / |r|^2.
MeasureResult uin(const DensityMatrix &rho);

/// Correlation-matrix diagonal and local z-polarization of an X state after
/// the local phase rotation that makes rho14 and rho23 real and non-negative.
struct TddAux {
    double g1 = 0;  // 2(|rho23| + |rho14|)
    double g2 = 0;  // 2(|rho23| - |rho14|)
    double g3 = 0;  // 1 - 2(rho22 + rho33)
    double xA = 0;  // 2(rho11 + rho22) - 1
};

TddAux tdd_aux(const XStateElements &x);

/// Trace distance discord of an X state, normalized so that a Bell state
/// gives 1. With |g1| >= |g2| (swapped otherwise),
///   gmax^2 = max{g3^2, g2^2 + xA^2}, gmin^2 = min{g3^2, g1^2},
///   T^2 = (g1^2 gmax^2 - g2^2 gmin^2) / (gmax^2 - gmin^2 + g1^2 - g2^2).
MeasureResult tdd_x(const XStateElements &x);

/// Skew information I(rho, K (x) 1) = -1/2 Tr{[sqrt(rho), K (x) 1]^2} for K = n.sigma.
double skew_information(const Matrix4 &sqrt_rho, const std::array<double, 3> &n);

/// ||rho - sum_k (P_k (x) 1) rho (P_k (x) 1)||_1 with P_k = (1 +- n.sigma)/2.
double measurement_disturbance(const DensityMatrix &rho, const std::array<double, 3> &n);

/// Minimum of skew_information over unit n (Fibonacci grid + Nelder-Mead).
MeasureResult lqu_bruteforce(const DensityMatrix &rho, int n_grid);
/// Maximum of skew_information over unit n commuting with rho_a.
MeasureResult uin_bruteforce(const DensityMatrix &rho, int n_grid);
/// Minimum of measurement_disturbance over unit n.
MeasureResult tdd_bruteforce(const DensityMatrix &rho, int n_grid);

/// Deterministic near-uniform points on the unit sphere.
std::vector<std::array<double, 3>> fibonacci_sphere(int n);

struct SphereOptimum {
    double value = 0;
    std::array<double, 3> direction{};
};

/// Minimizes f over the unit sphere: best grid point (lowest index on ties)
/// refined by Nelder-Mead in the tangent plane.
SphereOptimum minimize_on_sphere(const std::function<double(const std::array<double, 3> &)> &f, int n_grid);

}  // namespace qcorr

#endif
