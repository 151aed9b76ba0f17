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
#include <vector>

#include "weaklab/complex_matrix.hpp"
#include "weaklab/operators.hpp"
#include "weaklab/rng.hpp"

namespace weaklab {

// Random state generation with full-measure coverage of the valid inputs:
// densities from a normalized G*G^dagger construction (G complex Gaussian),
// projectors onto the span of orthonormalized Gaussian vectors, observables
// from symmetrized Gaussian matrices.

std::vector<Complex> random_unit_vector(Rng &rng, std::size_t dim);

// pure = true collapses the construction to a single random column.
DensityOperator random_density(Rng &rng, std::size_t dim, bool pure = false);

Projector random_projector(Rng &rng, std::size_t dim, std::size_t rank);

Observable random_observable(Rng &rng, std::size_t dim);

}  // namespace weaklab
