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

#include <cstddef>

namespace weaklab {

/// Central numerical tolerance configuration. Every validation and
/// operator-identity check in the library reads from this record; tests may
/// tighten these values but must not loosen them.
struct Tolerances {
    /// Hermiticity: max entrywise |M - M^dagger|.
    double hermitian = 1e-10;
    /// Unit trace: |Tr(rho) - 1|.
    double unit_trace = 1e-10;
    /// Positive semidefiniteness: smallest eigenvalue >= -psd.
    double psd = 1e-10;
    /// Idempotency: max entrywise |P*P - P|.
    double idempotent = 1e-10;
    /// Projector rank: |Tr(P) - round(Tr(P))|.
    double projector_rank = 1e-8;
    /// Spectral decomposition: completeness, mutual orthogonality of
    /// eigenprojectors, and reconstruction of the original matrix.
    double spectral = 1e-9;
    /// Relative gap under which neighbouring eigenvalues are merged into one
    /// eigenspace, scaled by (1 + max |eigenvalue|).
    double degeneracy_merge = 1e-9;
    /// Selection probabilities at or below this are treated as null outcomes.
    double null_outcome = 1e-12;
    /// Orthogonality of two projectors: max entrywise |Pa*Pb|.
    double orthogonal = 1e-10;
    /// Exact operator identities (mixture identity, rotation action, ...).
    double exact_identity = 1e-12;
    /// Phase angles closer than this to {0, +pi, -pi} are degenerate for the
    /// imaginary-part reconstruction.
    double degenerate_phase = 1e-6;
    /// Margin on the eigenvalue range / imaginary part beyond which a weak
    /// value counts as nonclassical.
    double nonclassical = 1e-9;
    /// Guard on |Im Tr(rho*B)|, which is zero up to rounding for Hermitian
    /// inputs.
    double imag_expectation = 1e-10;
    /// Outcome probabilities of a projective measurement must sum to one
    /// within this bound before renormalization.
    double prob_sum = 1e-9;
};

inline constexpr Tolerances kTol{};

/// Hard cap on operator dimension; dense O(d^3) algebra only.
inline constexpr std::size_t kMaxDimension = 64;

}  // namespace weaklab
