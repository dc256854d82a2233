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

#ifndef QCORR_STATES_H
#define QCORR_STATES_H

#include "qcorr/evolution.h"
#include "qcorr/linalg.h"

namespace qcorr {

/// rho = (1 + c1 XX + c2 YY + c3 ZZ) / 4.
struct BellDiagonalSpec {
    double c1 = 0;
    double c2 = 0;
    double c3 = 0;

    /// Eigenvalues in the Bell basis: (|Psi->, |Phi->, |Phi+>, |Psi+>).
    std::array<double, 4> bell_eigenvalues() const;
    /// Throws InvalidArgument for |c_j| > 1, NotPhysical outside the tetrahedron.
    void validate() const;
};

/// rho = (1 - r)/4 * 1 + r |Phi+><Phi+|, |Phi+> = (|00> + |11>)/sqrt2.
struct WernerSpec {
    double r = 0;

    void validate() const;
};

/// The independent entries of an X-shaped two-qubit density matrix
/// (rho41 = conj(rho14), rho32 = conj(rho23)).
struct XStateElements {
    double rho11 = 0;
    double rho22 = 0;
    double rho33 = 0;
    double rho44 = 0;
    Complex rho14 = 0;
    Complex rho23 = 0;

    /// Trace and X-block positivity. Throws NotPhysical.
    void validate() const;
};

DensityMatrix bell_diagonal(const BellDiagonalSpec &spec);
DensityMatrix werner(const WernerSpec &spec);

DensityMatrix x_state_from_elements(const XStateElements &x);
/// Throws NotXStructured when an entry outside the X exceeds tol::kOffXEntry.
XStateElements elements_from_density(const DensityMatrix &rho);

/// Closed-form rho(t) for a Bell-diagonal initial state under the
/// one-axis-twisting Hamiltonian (Sz|00> = +|00>). With
/// A = (1 + c3)/4, C = (c1 - c2)/4, D = (1 - c3)/4, E = (c1 + c2)/4,
/// f = 1 - cos(kappa t) exp(-gamma t kappa^2 / 2):
///   rho11 = A + 2 mu B C f / kappa^2,  rho44 = A - 2 mu B C f / kappa^2,
///   rho14 = mu^2 C / kappa^2 + (2 B C / kappa^2) exp(-gamma t kappa^2 / 2) (2B cos(kappa t) - i kappa sin(kappa t)),
///   rho22 = rho33 = D, rho23 = E.
XStateElements evolved_bell_diagonal_elements(const BellDiagonalSpec &spec, double mu, double field_b, double gamma,
                                              double t);

/// Same dynamics for a Werner initial state: A -> b = (1 + r)/4, C -> d = r/2,
/// D -> a = (1 - r)/4, E -> 0.
XStateElements evolved_werner_elements(const WernerSpec &spec, double mu, double field_b, double gamma, double t);

}  // namespace qcorr

#endif
