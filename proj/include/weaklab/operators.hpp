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
#include <span>
#include <string>
#include <vector>

#include "weaklab/complex_matrix.hpp"

namespace weaklab {

/// Density operator: Hermitian, positive semidefinite, unit trace.
/// Validation is eager; a constructed instance always satisfies the
/// invariants. Immutable after construction.
class DensityOperator {
  public:
    explicit DensityOperator(ComplexMatrix mat);

    const ComplexMatrix &mat() const { return mat_; }
    std::size_t dim() const { return mat_.dim(); }

  private:
    ComplexMatrix mat_;
};

/// Orthogonal projector: Hermitian and idempotent, with integer trace equal
/// to its rank.
class Projector {
  public:
    explicit Projector(ComplexMatrix mat);

    const ComplexMatrix &mat() const { return mat_; }
    std::size_t rank() const { return rank_; }
    std::size_t dim() const { return mat_.dim(); }

    /// The complementary projector 1 - P. Throws ValidationError when P has
    /// full rank (the complement would be the zero operator).
    Projector complement() const;

  private:
    ComplexMatrix mat_;
    std::size_t rank_;
};

/// One eigenspace of an observable: the eigenvalue and the orthogonal
/// projector onto the (possibly degenerate) eigenspace.
struct EigenSpace {
    double value;
    Projector projector;
};

/// Hermitian eigendecomposition with degeneracy merging: eigenvalues within
/// a relative gap of kTol.degeneracy_merge are collapsed into a single
/// eigenspace. Output is sorted ascending and deterministic for identical
/// input. Throws NotHermitian if the input fails the Hermiticity tolerance.
std::vector<EigenSpace> eigh(const ComplexMatrix &m);

/// Eigenvalues only (ascending, unmerged). Same Hermiticity precondition.
std::vector<double> eigenvalues(const ComplexMatrix &m);

/// Hermitian observable with cached spectral decomposition.
class Observable {
  public:
    explicit Observable(ComplexMatrix mat);

    const ComplexMatrix &mat() const { return mat_; }
    const std::vector<EigenSpace> &spectrum() const { return spectrum_; }
    std::size_t dim() const { return mat_.dim(); }

    double min_eigenvalue() const { return spectrum_.front().value; }
    double max_eigenvalue() const { return spectrum_.back().value; }

  private:
    ComplexMatrix mat_;
    std::vector<EigenSpace> spectrum_;
};

/// Pure-state preparation: |v><v| / ||v||^2. Throws ZeroVector when the
/// vector norm is numerically zero.
DensityOperator density_from_state_vector(std::span<const Complex> v);

/// Rank-one projector onto span{v}. Throws ZeroVector as above.
Projector projector_onto(std::span<const Complex> v);

/// Re Tr(rho * B). The imaginary part is zero up to rounding for Hermitian
/// inputs; it is checked against kTol.imag_expectation.
double expectation(const DensityOperator &rho, const Observable &b);

/// Born probability Tr(rho * P), clamped to [0, 1].
double born_probability(const DensityOperator &rho, const Projector &p);

/// Invariant-violation listings used by both the eager constructors and the
/// file validator. Each entry reads "<invariant>: <detail>".
std::vector<std::string> density_violations(const ComplexMatrix &mat);
std::vector<std::string> projector_violations(const ComplexMatrix &mat);
std::vector<std::string> observable_violations(const ComplexMatrix &mat);

}  // namespace weaklab
