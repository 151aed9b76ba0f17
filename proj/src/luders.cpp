// Copyright 2026 The weaklab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weaklab/luders.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>

#include "weaklab/errors.hpp"
#include "weaklab/tolerances.hpp"

namespace weaklab {

namespace {

// Absorb rounding from the update algebra: force exact Hermiticity, then
// rescale to unit trace before the eager DensityOperator validation runs.
DensityOperator sanitize_density(const ComplexMatrix &raw) {
    const std::size_t d = raw.dim();
    ComplexMatrix sym(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            sym(i, j) = 0.5 * (raw(i, j) + std::conj(raw(j, i)));
        }
    }
    const double tr = sym.trace().real();
    sym *= Complex{1.0 / tr, 0.0};
    return DensityOperator(std::move(sym));
}

}  // namespace

double wrap_phase(double phi) {
    double w = std::remainder(phi, 2.0 * std::numbers::pi);
    if (w <= -std::numbers::pi) {
        w = std::numbers::pi;
    }
    return w;
}

double require_signal_phase(double phi) {
    const double w = wrap_phase(phi);
    const double distance =
        std::min(std::abs(w), std::numbers::pi - std::abs(w));
    if (distance <= kTol.degenerate_phase) {
        throw DegeneratePhase("phase angle " + std::to_string(phi) +
                              " is within 1e-6 of {0, +pi, -pi}; the rotated "
                              "state carries no imaginary-part signal there");
    }
    return w;
}

PhaseRotation::PhaseRotation(Projector projector, double phi)
    : projector_(std::move(projector)), phi_(wrap_phase(phi)),
      unitary_(projector_.dim()) {
    const Complex factor = std::polar(1.0, phi_) - Complex{1.0, 0.0};
    unitary_ = ComplexMatrix::identity(projector_.dim()) +
               projector_.mat() * factor;
    const double defect = max_abs_diff(
        unitary_ * unitary_.adjoint(), ComplexMatrix::identity(projector_.dim()));
    if (defect > kTol.hermitian) {
        throw ValidationError("unitary",
                              "phase rotation is not unitary within tolerance");
    }
}

SelectiveResult selective_update(const DensityOperator &rho, const Projector &p) {
    require_same_dim(rho.mat(), p.mat());
    const double prob = born_probability(rho, p);
    if (prob <= kTol.null_outcome) {
        throw NullOutcome("selection probability Tr(rho*P) <= 1e-12; "
                          "post-selection impossible");
    }
    ComplexMatrix post = p.mat() * rho.mat() * p.mat();
    post *= Complex{1.0 / prob, 0.0};
    return SelectiveResult{sanitize_density(post), prob};
}

DensityOperator nonselective_update(const DensityOperator &rho,
                                    const Projector &p) {
    require_same_dim(rho.mat(), p.mat());
    const ComplexMatrix q = ComplexMatrix::identity(p.dim()) - p.mat();
    const ComplexMatrix post =
        p.mat() * rho.mat() * p.mat() + q * rho.mat() * q;
    return sanitize_density(post);
}

DensityOperator phase_rotate(const DensityOperator &rho, const Projector &p,
                             double phi) {
    require_same_dim(rho.mat(), p.mat());
    const PhaseRotation rotation(p, phi);
    const ComplexMatrix post =
        rotation.unitary() * rho.mat() * rotation.unitary().adjoint();
    return sanitize_density(post);
}

bool rotation_action_check(const Projector &p_a, const Projector &p_b,
                           double phi) {
    require_same_dim(p_a.mat(), p_b.mat());
    const double overlap = (p_a.mat() * p_b.mat()).max_abs();
    if (overlap > kTol.orthogonal) {
        throw NotOrthogonal("projectors are not orthogonal: max|Pa*Pb| = " +
                            std::to_string(overlap));
    }
    const PhaseRotation rotation(p_a, phi);
    const Complex phase = std::polar(1.0, rotation.phi());
    const double on_range =
        max_abs_diff(rotation.unitary() * p_a.mat(), p_a.mat() * phase);
    const double off_range =
        max_abs_diff(rotation.unitary() * p_b.mat(), p_b.mat());
    return on_range <= kTol.exact_identity && off_range <= kTol.exact_identity;
}

}  // namespace weaklab
