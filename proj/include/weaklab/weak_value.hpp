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

#include <complex>
#include <utility>
#include <vector>

#include "weaklab/operators.hpp"

namespace weaklab {

/// Complex weak value Tr(rho P B) / Tr(rho P).
struct WeakValue {
    double re = 0.0;
    double im = 0.0;

    std::complex<double> value() const { return {re, im}; }
};

/// Everything the exact pipeline knows about one (rho, P, B) configuration:
/// the direct weak value, both reconstructed components, the measurement
/// disturbance, and the nonclassicality flags.
struct ReconstructionReport {
    WeakValue direct;
    double re_reconstructed = 0.0;
    double im_reconstructed = 0.0;
    /// Tr(rho B) - Tr(rho_n B): the shift in <B> caused by the nonselective
    /// projector measurement.
    double disturbance = 0.0;
    /// Tr(rho P), in (0, 1].
    double selection_probability = 0.0;
    /// (min, max) eigenvalue of B.
    std::pair<double, double> eigen_range{0.0, 0.0};
    /// Real part lies outside the eigenvalue range (beyond kTol.nonclassical).
    bool nonclassical_re = false;
    /// Imaginary part differs from zero (beyond kTol.nonclassical).
    bool nonclassical_im = false;
};

/// The defining ratio, computed directly from the matrix product. This is
/// the oracle every reconstruction below is tested against; the
/// reconstructions themselves never touch the product Tr(rho P B).
WeakValue weak_value_direct(const DensityOperator &rho, const Projector &p,
                            const Observable &b);

/// Weak-probability variant: the observable is itself a projector.
WeakValue weak_value_direct(const DensityOperator &rho, const Projector &p,
                            const Projector &b);

/// Real part from expectation values only:
/// Tr(rho_s B) + [Tr(rho B) - Tr(rho_n B)] / (2 Tr(rho P)).
double reconstruct_re(const DensityOperator &rho, const Projector &p,
                      const Observable &b);

/// Imaginary part from the quarter-turn rotated state:
/// [Tr(rho_{pi/2} B) - Tr(rho_n B)] / (2 Tr(rho P)).
double reconstruct_im(const DensityOperator &rho, const Projector &p,
                      const Observable &b);

/// Imaginary part from a rotation by an arbitrary angle phi (excluding 0 and
/// +-pi):
///
///   [Tr(rho_phi B) - (1 - cos phi) Tr(rho_n B) - cos phi Tr(rho B)]
///   / (2 sin phi Tr(rho P)).
///
/// At phi = pi/2 this reduces to reconstruct_im. Throws DegeneratePhase when
/// phi is within kTol.degenerate_phase of {0, +pi, -pi}.
double reconstruct_im_general(const DensityOperator &rho, const Projector &p,
                              const Observable &b, double phi);

/// Weak probabilities of a complete orthogonal projector family: the weak
/// value with B = P_b for each basis element. Their real parts sum to one
/// and their imaginary parts to zero. Throws IncompleteBasis when the family
/// does not decompose the identity.
std::vector<WeakValue> weak_probabilities(const DensityOperator &rho,
                                          const Projector &p_a,
                                          const std::vector<Projector> &basis);

/// Tr(rho B) - Tr(rho_n B).
double disturbance(const DensityOperator &rho, const Projector &p,
                   const Observable &b);

/// Run the full exact pipeline and cross-check the reconstructions against
/// the direct weak value.
ReconstructionReport analyze(const DensityOperator &rho, const Projector &p,
                             const Observable &b);

}  // namespace weaklab
