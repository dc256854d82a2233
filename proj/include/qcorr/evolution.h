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

#ifndef QCORR_EVOLUTION_H
#define QCORR_EVOLUTION_H

#include <vector>

#include "qcorr/hamiltonian.h"
#include "qcorr/linalg.h"

namespace qcorr {

/// Two-qubit state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
   public:
    /// Validates and stores the Hermitian part of `m`. Throws NotPhysical.
    static DensityMatrix from_matrix(const Matrix4 &m);
    /// Skips validation; used on outputs of trace-preserving maps.
    static DensityMatrix unchecked(const Matrix4 &m);
    static DensityMatrix maximally_mixed();

    const Matrix4 &matrix() const {
        return matrix_;
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return matrix_(r, c);
    }
    double purity() const;

   private:
    explicit DensityMatrix(const Matrix4 &m) : matrix_(m) {
    }
    Matrix4 matrix_;
};

struct DecoherenceParams {
    double gamma = 0;
    double t = 0;

    void validate() const;
};

/// rho(t) = sum_{m,n} exp(-gamma t w_mn^2 / 2 - i w_mn t) <m|rho0|n> |m><n|, w_mn = E_m - E_n.
DensityMatrix propagate_spectral(const Eigensystem &es, const DensityMatrix &rho0, const DecoherenceParams &d);

/// M_l = (gamma t)^{l/2} / sqrt(l!) H^l exp(-iHt) exp(-gamma t H^2 / 2), l = 0..l_max,
/// built diagonally in the energy basis. Throws TruncationOverflow if a weight is not finite.
std::vector<Matrix4> kraus_operators(const Eigensystem &es, const DecoherenceParams &d, int l_max);

/// max |sum_l M_l^dagger M_l - 1|.
double kraus_completeness_error(const std::vector<Matrix4> &ops);

/// Kraus set starting at l_max = 40 and doubling (cap 640) until the
/// completeness error is below tol::kKrausCompleteness.
struct KrausChannel {
    std::vector<Matrix4> operators;
    int l_max = 0;
    double completeness_error = 0;
};
KrausChannel kraus_channel(const Eigensystem &es, const DecoherenceParams &d);

DensityMatrix propagate_kraus(const DensityMatrix &rho0, const std::vector<Matrix4> &ops);

/// Right-hand side -i[H, rho] - gamma/2 [H, [H, rho]].
Matrix4 master_equation_rhs(const Matrix4 &h, const Matrix4 &rho, double gamma);

/// Classical RK4 from 0 to d.t with ceil(t/dt) equal steps. Throws
/// StepTooLarge when the trace drifts, or the purity grows, by more than
/// tol::kRk4TraceDrift.
DensityMatrix integrate_master(const Matrix4 &h, const DensityMatrix &rho0, const DecoherenceParams &d, double dt);

/// Long-time limit: keeps only the energy-degenerate blocks of rho0.
DensityMatrix steady_state(const Eigensystem &es, const DensityMatrix &rho0);

}  // namespace qcorr

#endif
