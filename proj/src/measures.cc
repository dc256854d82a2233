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

#include "qcorr/measures.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qcorr/error.h"
#include "qcorr/tolerances.h"

namespace qcorr {

namespace {

double snap_zero(double value) {
    return value < tol::kMeasureZeroFloor ? 0.0 : value;
}

MeasureResult closed(double value) {
    return MeasureResult{.value = snap_zero(value), .method = Method::ClosedForm, .optimizer_argument = std::nullopt};
}

void jacobi_symmetric3(RealMatrix3 a, std::array<double, 3> &values) {
    for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; sweep++) {
        double off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
        if (off == 0) {
            break;
        }
        for (int p = 0; p < 2; p++) {
            for (int q = p + 1; q < 3; q++) {
                if (a[p][q] == 0) {
                    continue;
                }
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (int k = 0; k < 3; k++) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; k++) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = a[q][p] = 0;
            }
        }
    }
    values = {a[0][0], a[1][1], a[2][2]};
}

Matrix4 local_a(int axis) {
    return kron(pauli(axis), pauli(0));
}

std::array<double, 3> normalized(const std::array<double, 3> &v) {
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return {v[0] / n, v[1] / n, v[2] / n};
}

}  // namespace

std::array<double, 3> symmetric3_eigenvalues(const RealMatrix3 &m) {
    std::array<double, 3> values;
    double off = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    double q = (m[0][0] + m[1][1] + m[2][2]) / 3;
    double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) + (m[2][2] - q) * (m[2][2] - q) + 2 * off;
    double p = std::sqrt(p2 / 6);
    double r = 0;
    if (p > 0) {
        RealMatrix3 b;
        for (int i = 0; i < 3; i++) {
            for (int j = 0; j < 3; j++) {
                b[i][j] = (m[i][j] - (i == j ? q : 0)) / p;
            }
        }
        double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                     b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                     b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
        r = std::clamp(det / 2, -1.0, 1.0);
    }
    // 1 - r^2 is the cubic discriminant normalized by p^6; near zero the
    // arccos loses precision on the repeated pair.
    if (p == 0 || 1 - r * r < 1e-6) {
        jacobi_symmetric3(m, values);
    } else {
        double phi = std::acos(r) / 3;
        values[0] = q + 2 * p * std::cos(phi);
        values[2] = q + 2 * p * std::cos(phi + 2 * std::numbers::pi / 3);
        values[1] = 3 * q - values[0] - values[2];
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

WMatrix w_matrix(const DensityMatrix &rho) {
    Matrix4 root = sqrt_psd(rho.matrix());
    std::array<Matrix4, 3> sandwiched;
    for (int i = 0; i < 3; i++) {
        sandwiched[i] = root * local_a(i + 1);
    }
    WMatrix w;
    for (int i = 0; i < 3; i++) {
        for (int j = i; j < 3; j++) {
            w.w[i][j] = w.w[j][i] = (sandwiched[i] * sandwiched[j]).trace().real();
        }
    }
    w.eigenvalues = symmetric3_eigenvalues(w.w);
    return w;
}

MeasureResult concurrence(const DensityMatrix &rho) {
    Matrix4 yy = pauli_product(2, 2);
    Matrix4 flipped = yy * rho.matrix().conjugate() * yy;
    Matrix4 root = sqrt_psd(rho.matrix());
    HermitianEig eig = hermitian_eig((root * flipped * root).hermitian_part());
    std::array<double, 4> lambda = eigenvalue_roots(eig.values);
    // values ascend, so lambda[3] is the largest.
    double c = lambda[3] - lambda[2] - lambda[1] - lambda[0];
    return closed(std::max(0.0, c));
}

MeasureResult concurrence_x(const XStateElements &x) {
    double a = std::abs(x.rho14) - std::sqrt(x.rho22 * x.rho33);
    double b = std::abs(x.rho23) - std::sqrt(x.rho11 * x.rho44);
    return closed(2 * std::max({0.0, a, b}));
}

MeasureResult lqu(const DensityMatrix &rho) {
    WMatrix w = w_matrix(rho);
    return closed(1 - w.eigenvalues[0]);
}

MeasureResult uin(const DensityMatrix &rho) {
    WMatrix w = w_matrix(rho);
    std::array<double, 3> r = bloch_vector(partial_trace_b(rho.matrix()));
    double norm_sq = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
    if (std::sqrt(norm_sq) < tol::kBlochVectorZero) {
        return closed(1 - w.eigenvalues[2]);
    }
    double quad = 0;
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            quad += r[i] * w.w[i][j] * r[j];
        }
    }
    return closed(1 - quad / norm_sq);
}

TddAux tdd_aux(const XStateElements &x) {
    double c14 = std::abs(x.rho14);
    double c23 = std::abs(x.rho23);
    return TddAux{
        .g1 = 2 * (c23 + c14),
        .g2 = 2 * (c23 - c14),
        .g3 = 1 - 2 * (x.rho22 + x.rho33),
        .xA = 2 * (x.rho11 + x.rho22) - 1,
    };
}

MeasureResult tdd_x(const XStateElements &x) {
    TddAux g = tdd_aux(x);
    double g1_sq = g.g1 * g.g1;
    double g2_sq = g.g2 * g.g2;
    if (g1_sq < g2_sq) {
        std::swap(g1_sq, g2_sq);
    }
    double g3_sq = g.g3 * g.g3;
    double gmax_sq = std::max(g3_sq, g2_sq + g.xA * g.xA);
    double gmin_sq = std::min(g3_sq, g1_sq);
    // The ratio is a weighted mean of g1^2 and gmin^2 with non-negative
    // weights (gmax^2 - gmin^2) and (g1^2 - g2^2); both vanish only when all
    // |g_i| coincide and xA = 0, where the limit is g1^2.
    double w_max = gmax_sq - gmin_sq;
    double w_one = g1_sq - g2_sq;
    double value_sq = (w_max + w_one < tol::kTddDenominator) ? g1_sq : (g1_sq * w_max + gmin_sq * w_one) / (w_max + w_one);
    return closed(std::sqrt(std::max(0.0, value_sq)));
}

double skew_information(const Matrix4 &sqrt_rho, const std::array<double, 3> &n) {
    Matrix4 k = local_a(1) * Complex(n[0]) + local_a(2) * Complex(n[1]) + local_a(3) * Complex(n[2]);
    Matrix4 comm = sqrt_rho * k - k * sqrt_rho;
    return -0.5 * (comm * comm).trace().real();
}

double measurement_disturbance(const DensityMatrix &rho, const std::array<double, 3> &n) {
    Matrix2 n_sigma = pauli(1) * Complex(n[0]) + pauli(2) * Complex(n[1]) + pauli(3) * Complex(n[2]);
    Matrix2 id = pauli(0);
    Matrix4 p_plus = kron((id + n_sigma) * Complex(0.5), id);
    Matrix4 p_minus = kron((id - n_sigma) * Complex(0.5), id);
    const Matrix4 &r = rho.matrix();
    Matrix4 measured = p_plus * r * p_plus + p_minus * r * p_minus;
    return trace_norm((r - measured).hermitian_part());
}

std::vector<std::array<double, 3>> fibonacci_sphere(int n) {
    std::vector<std::array<double, 3>> points;
    points.reserve(n);
    double golden = std::numbers::pi * (3 - std::sqrt(5.0));
    for (int i = 0; i < n; i++) {
        double z = 1 - (2.0 * i + 1) / n;
        double rho = std::sqrt(std::max(0.0, 1 - z * z));
        double phi = golden * i;
        points.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
    }
    return points;
}

SphereOptimum minimize_on_sphere(const std::function<double(const std::array<double, 3> &)> &f, int n_grid) {
    if (n_grid < tol::kMinGrid) {
        throw Error(ErrorKind::InvalidArgument, "n_grid must be >= " + std::to_string(tol::kMinGrid));
    }
    SphereOptimum best{.value = std::numeric_limits<double>::infinity(), .direction = {0, 0, 1}};
    for (const auto &p : fibonacci_sphere(n_grid)) {
        double v = f(p);
        if (v < best.value) {
            best = {v, p};
        }
    }

    // Tangent-plane chart around the best grid point.
    const auto n0 = best.direction;
    std::array<double, 3> helper = std::abs(n0[0]) < 0.9 ? std::array<double, 3>{1, 0, 0} : std::array<double, 3>{0, 1, 0};
    double dot = helper[0] * n0[0] + helper[1] * n0[1] + helper[2] * n0[2];
    auto e1 = normalized({helper[0] - dot * n0[0], helper[1] - dot * n0[1], helper[2] - dot * n0[2]});
    std::array<double, 3> e2 = {
        n0[1] * e1[2] - n0[2] * e1[1],
        n0[2] * e1[0] - n0[0] * e1[2],
        n0[0] * e1[1] - n0[1] * e1[0],
    };
    auto chart = [&](const std::array<double, 2> &uv) {
        return normalized({n0[0] + uv[0] * e1[0] + uv[1] * e2[0], n0[1] + uv[0] * e1[1] + uv[1] * e2[1],
                           n0[2] + uv[0] * e1[2] + uv[1] * e2[2]});
    };

    struct Vertex {
        std::array<double, 2> x;
        double f;
    };
    double step = std::sqrt(4 * std::numbers::pi / n_grid);
    std::array<Vertex, 3> simplex = {
        Vertex{{0, 0}, best.value},
        Vertex{{step, 0}, f(chart({step, 0}))},
        Vertex{{0, step}, f(chart({0, step}))},
    };
    auto eval = [&](const std::array<double, 2> &x) { return Vertex{x, f(chart(x))}; };
    auto lerp = [](const std::array<double, 2> &a, const std::array<double, 2> &b, double t) {
        return std::array<double, 2>{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
    };

    for (int iter = 0; iter < tol::kNelderMeadIterations; iter++) {
        std::stable_sort(simplex.begin(), simplex.end(), [](const Vertex &a, const Vertex &b) { return a.f < b.f; });
        double spread = simplex[2].f - simplex[0].f;
        double size = std::max(std::hypot(simplex[1].x[0] - simplex[0].x[0], simplex[1].x[1] - simplex[0].x[1]),
                               std::hypot(simplex[2].x[0] - simplex[0].x[0], simplex[2].x[1] - simplex[0].x[1]));
        if (spread < tol::kNelderMeadTolerance && size < tol::kNelderMeadTolerance) {
            break;
        }
        std::array<double, 2> centroid = {(simplex[0].x[0] + simplex[1].x[0]) / 2, (simplex[0].x[1] + simplex[1].x[1]) / 2};
        Vertex reflected = eval(lerp(centroid, simplex[2].x, -1));
        if (reflected.f < simplex[0].f) {
            Vertex expanded = eval(lerp(centroid, simplex[2].x, -2));
            simplex[2] = expanded.f < reflected.f ? expanded : reflected;
        } else if (reflected.f < simplex[1].f) {
            simplex[2] = reflected;
        } else {
            bool outside = reflected.f < simplex[2].f;
            Vertex contracted = eval(lerp(centroid, outside ? reflected.x : simplex[2].x, 0.5));
            if (contracted.f < std::min(reflected.f, simplex[2].f)) {
                simplex[2] = contracted;
            } else {
                for (int k = 1; k < 3; k++) {
                    simplex[k] = eval(lerp(simplex[0].x, simplex[k].x, 0.5));
                }
            }
        }
    }
    const Vertex &top = *std::min_element(simplex.begin(), simplex.end(), [](const Vertex &a, const Vertex &b) {
        return a.f < b.f;
    });
    if (top.f < best.value) {
        best = {top.f, chart(top.x)};
    }
    return best;
}

MeasureResult lqu_bruteforce(const DensityMatrix &rho, int n_grid) {
    Matrix4 root = sqrt_psd(rho.matrix());
    SphereOptimum opt = minimize_on_sphere([&](const std::array<double, 3> &n) { return skew_information(root, n); }, n_grid);
    return MeasureResult{.value = snap_zero(opt.value), .method = Method::BruteForce, .optimizer_argument = opt.direction};
}

MeasureResult uin_bruteforce(const DensityMatrix &rho, int n_grid) {
    if (n_grid < tol::kMinGrid) {
        throw Error(ErrorKind::InvalidArgument, "n_grid must be >= " + std::to_string(tol::kMinGrid));
    }
    Matrix4 root = sqrt_psd(rho.matrix());
    std::array<double, 3> r = bloch_vector(partial_trace_b(rho.matrix()));
    double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (norm >= tol::kBlochVectorZero) {
        // Only +-r commutes with rho_a; both give the same skew information.
        auto n = normalized(r);
        return MeasureResult{.value = snap_zero(skew_information(root, n)), .method = Method::BruteForce, .optimizer_argument = n};
    }
    SphereOptimum opt =
        minimize_on_sphere([&](const std::array<double, 3> &n) { return -skew_information(root, n); }, n_grid);
    return MeasureResult{.value = snap_zero(-opt.value), .method = Method::BruteForce, .optimizer_argument = opt.direction};
}

MeasureResult tdd_bruteforce(const DensityMatrix &rho, int n_grid) {
    SphereOptimum opt =
        minimize_on_sphere([&](const std::array<double, 3> &n) { return measurement_disturbance(rho, n); }, n_grid);
    return MeasureResult{.value = snap_zero(opt.value), .method = Method::BruteForce, .optimizer_argument = opt.direction};
}

}  // namespace qcorr
