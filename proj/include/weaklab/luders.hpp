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

#pragma once

#include "weaklab/complex_matrix.hpp"
#include "weaklab/operators.hpp"

namespace weaklab {

/// Selective phase rotation: the unitary R = 1 + (e^{i*phi} - 1) P, which
/// multiplies the range of P by the phase e^{i*phi} and acts as the identity
/// on every projector orthogonal to P. The angle is stored wrapped into
/// (-pi, pi].
class PhaseRotation {
  public:
    PhaseRotation(Projector projector, double phi);

    const Projector &projector() const { return projector_; }
    double phi() const { return phi_; }
    const ComplexMatrix &unitary() const { return unitary_; }

  private:
    Projector projector_;
    double phi_;
    ComplexMatrix unitary_;
};

/// Wrap an angle into (-pi, pi].
double wrap_phase(double phi);

/// Wrap an angle and reject values within kTol.degenerate_phase of
/// {0, +pi, -pi}, where the rotated state carries no imaginary-part signal.
/// Returns the wrapped angle; throws DegeneratePhase otherwise.
double require_signal_phase(double phi);

struct SelectiveResult {
    DensityOperator post_state;
    double probability;
};

/// Outcome-kept projector measurement: rho -> P rho P / Tr(rho P), together
/// with the outcome probability Tr(rho P). Throws NullOutcome when the
/// probability is numerically zero.
SelectiveResult selective_update(const DensityOperator &rho, const Projector &p);

/// Outcome-discarded projector measurement:
/// rho -> P rho P + (1 - P) rho (1 - P). Trace preserving.
DensityOperator nonselective_update(const DensityOperator &rho,
                                    const Projector &p);

/// Conjugation by the selective phase rotation: rho -> R rho R^dagger.
/// Unitary, so trace and spectrum are preserved.
DensityOperator phase_rotate(const DensityOperator &rho, const Projector &p,
                             double phi);

/// Check the defining action of the rotation on an orthogonal projector
/// pair: R(p_a, phi) * p_a = e^{i*phi} p_a and R(p_a, phi) * p_b = p_b.
/// Both identities are verified to kTol.exact_identity. Throws NotOrthogonal
/// when p_a * p_b is not numerically zero.
bool rotation_action_check(const Projector &p_a, const Projector &p_b,
                           double phi);

}  // namespace weaklab
