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

#include "qcorr/evolution.h"

#include <cmath>
#include <string>

#include "qcorr/error.h"
#include "qcorr/tolerances.h"

namespace qcorr {

DensityMatrix DensityMatrix::from_matrix(const Matrix4 &m) {
    if (!m.is_finite()) {
        throw Error(ErrorKind::NotPhysical, "density matrix has non-finite entries");
    }
    double herr = m.hermiticity_error();
    if (herr > tol::kHermitian) {
        throw Error(ErrorKind::NotPhysical, "density matrix is not Hermitian (error " + std::to_string(herr) + ")");
    }
    Matrix4 h = m.hermitian_part();
    double tr = h.trace().real();
    if (std::abs(tr - 1) > tol::kTrace) {
        throw Error(ErrorKind::NotPhysical, "density matrix trace is " + std::to_string(tr));
    }
    double lowest = hermitian_eig(h).values[0];
    if (lowest < tol::kDensityEigenFloor) {
        throw Error(ErrorKind::NotPhysical, "density matrix has eigenvalue " + std::to_string(lowest));
    }
    return DensityMatrix(h);
}

DensityMatrix DensityMatrix::unchecked(const Matrix4 &m) {
    return DensityMatrix(m.hermitian_part());
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(Matrix4::identity() * Complex(0.25));
}

double DensityMatrix::purity() const {
    return (matrix_ * matrix_).trace().real();
}

void DecoherenceParams::validate() const {
    if (!std::isfinite(gamma) || gamma < 0) {
        throw Error(ErrorKind::InvalidArgument, "gamma must be finite and >= 0, got " + std::to_string(gamma));
    }
    if (!std::isfinite(t) || t < 0) {
        throw Error(ErrorKind::InvalidArgument, "t must be finite and >= 0, got " + std::to_string(t));
    }
}

namespace {

// <m|rho|n> in the energy basis.
Matrix4 to_energy_basis(const Eigensystem &es, const Matrix4 &rho) {
    Matrix4 u = es.unitary();
    return u.adjoint() * rho * u;
}

Matrix4 from_energy_basis(const Eigensystem &es, const Matrix4 &rho) {
    Matrix4 u = es.unitary();
    return u * rho * u.adjoint();
}

}  // namespace

DensityMatrix propagate_spectral(const Eigensystem &es, const DensityMatrix &rho0, const DecoherenceParams &d) {
    d.validate();
    if (d.t == 0) {
        return rho0;
    }
    Matrix4 r = to_energy_basis(es, rho0.matrix());
    for (std::size_t m = 0; m < 4; m++) {
        for (std::size_t n = 0; n < 4; n++) {
            if (m == n) {
                continue;
            }
            double w = es.energies[m] - es.energies[n];
            double damping = std::exp(-0.5 * d.gamma * d.t * w * w);
            r(m, n) *= damping * std::polar(1.0, -w * d.t);
        }
    }
    return DensityMatrix::unchecked(from_energy_basis(es, r));
}

std::vector<Matrix4> kraus_operators(const Eigensystem &es, const DecoherenceParams &d, int l_max) {
    d.validate();
    if (l_max < 0) {
        throw Error(ErrorKind::InvalidArgument, "l_max must be >= 0");
    }
    Matrix4 u = es.unitary();
    Matrix4 u_dag = u.adjoint();
    double gt = d.gamma * d.t;
    double root_gt = std::sqrt(gt);

    // coeff[k] holds (gamma t)^{l/2} E_k^l / sqrt(l!) * exp(-gamma t E_k^2 / 2), updated in place.
    std::array<Complex, 4> coeff;
    for (std::size_t k = 0; k < 4; k++) {
        double e = es.energies[k];
        coeff[k] = std::exp(-0.5 * gt * e * e) * std::polar(1.0, -e * d.t);
    }

    std::vector<Matrix4> ops;
    ops.reserve(l_max + 1);
    for (int l = 0; l <= l_max; l++) {
        if (l > 0) {
            for (std::size_t k = 0; k < 4; k++) {
                coeff[k] *= root_gt * es.energies[k] / std::sqrt(static_cast<double>(l));
            }
        }
        Matrix4 diag;
        for (std::size_t k = 0; k < 4; k++) {
            if (!std::isfinite(coeff[k].real()) || !std::isfinite(coeff[k].imag())) {
                throw Error(ErrorKind::TruncationOverflow, "Kraus weight overflowed at order " + std::to_string(l));
            }
            diag(k, k) = coeff[k];
        }
        ops.push_back(u * diag * u_dag);
    }
    return ops;
}

double kraus_completeness_error(const std::vector<Matrix4> &ops) {
    Matrix4 sum;
    for (const auto &m : ops) {
        sum += m.adjoint() * m;
    }
    return max_abs_diff(sum, Matrix4::identity());
}

KrausChannel kraus_channel(const Eigensystem &es, const DecoherenceParams &d) {
    KrausChannel channel;
    for (int l_max = tol::kKrausDefaultOrder;; l_max *= 2) {
        channel.operators = kraus_operators(es, d, l_max);
        channel.l_max = l_max;
        channel.completeness_error = kraus_completeness_error(channel.operators);
        if (channel.completeness_error < tol::kKrausCompleteness || l_max >= tol::kKrausMaxOrder) {
            break;
        }
    }
    if (channel.completeness_error >= tol::kKrausCompleteness) {
        throw Error(ErrorKind::TruncationOverflow, "Kraus sum incomplete at l_max = " + std::to_string(channel.l_max) +
                                                       " (error " + std::to_string(channel.completeness_error) + ")");
    }
    return channel;
}

DensityMatrix propagate_kraus(const DensityMatrix &rho0, const std::vector<Matrix4> &ops) {
    Matrix4 out;
    for (const auto &m : ops) {
        out += m * rho0.matrix() * m.adjoint();
    }
    return DensityMatrix::unchecked(out);
}

Matrix4 master_equation_rhs(const Matrix4 &h, const Matrix4 &rho, double gamma) {
    Matrix4 c1 = h * rho - rho * h;
    Matrix4 c2 = h * c1 - c1 * h;
    return c1 * Complex(0, -1) - c2 * Complex(0.5 * gamma);
}

DensityMatrix integrate_master(const Matrix4 &h, const DensityMatrix &rho0, const DecoherenceParams &d, double dt) {
    d.validate();
    if (!(dt > 0) || !std::isfinite(dt)) {
        throw Error(ErrorKind::InvalidArgument, "dt must be > 0, got " + std::to_string(dt));
    }
    if (d.t == 0) {
        return rho0;
    }
    auto steps = static_cast<long>(std::ceil(d.t / dt));
    double step = d.t / static_cast<double>(steps);
    Matrix4 rho = rho0.matrix();
    for (long s = 0; s < steps; s++) {
        Matrix4 k1 = master_equation_rhs(h, rho, d.gamma);
        Matrix4 k2 = master_equation_rhs(h, rho + k1 * Complex(step / 2), d.gamma);
        Matrix4 k3 = master_equation_rhs(h, rho + k2 * Complex(step / 2), d.gamma);
        Matrix4 k4 = master_equation_rhs(h, rho + k3 * Complex(step), d.gamma);
        rho += (k1 + k2 * Complex(2) + k3 * Complex(2) + k4) * Complex(step / 6);
    }
    double drift = std::abs(rho.trace() - rho0.matrix().trace());
    if (!rho.is_finite() || drift > tol::kRk4TraceDrift) {
        throw Error(ErrorKind::StepTooLarge, "trace drifted by " + std::to_string(drift) + " with dt = " + std::to_string(dt));
    }
    // The exact flow never increases purity.
    DensityMatrix out = DensityMatrix::unchecked(rho);
    double growth = out.purity() - rho0.purity();
    if (growth > tol::kRk4TraceDrift) {
        throw Error(ErrorKind::StepTooLarge, "purity grew by " + std::to_string(growth) + " with dt = " + std::to_string(dt));
    }
    return out;
}

DensityMatrix steady_state(const Eigensystem &es, const DensityMatrix &rho0) {
    Matrix4 r = to_energy_basis(es, rho0.matrix());
    for (std::size_t m = 0; m < 4; m++) {
        for (std::size_t n = 0; n < 4; n++) {
            if (std::abs(es.energies[m] - es.energies[n]) > tol::kEnergyDegeneracy) {
                r(m, n) = 0;
            }
        }
    }
    return DensityMatrix::unchecked(from_energy_basis(es, r));
}

}  // namespace qcorr
