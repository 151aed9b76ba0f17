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

#include "weaklab/random_states.hpp"

#include <cmath>

#include "weaklab/errors.hpp"

namespace weaklab {

namespace {

std::vector<Complex> random_gaussian_vector(Rng &rng, std::size_t dim) {
    std::vector<Complex> v(dim);
    for (auto &entry : v) {
        const double re = rng.next_gaussian();
        const double im = rng.next_gaussian();
        entry = Complex(re, im);
    }
    return v;
}

void subtract_projection(std::vector<Complex> &v,
                         const std::vector<Complex> &onto) {
    Complex overlap(0.0, 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        overlap += std::conj(onto[i]) * v[i];
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] -= overlap * onto[i];
    }
}

bool normalize(std::vector<Complex> &v) {
    const double norm = vector_norm(v);
    if (norm <= 1e-9) {
        return false;
    }
    for (auto &entry : v) {
        entry /= norm;
    }
    return true;
}

}  // namespace

std::vector<Complex> random_unit_vector(Rng &rng, std::size_t dim) {
    std::vector<Complex> v;
    do {
        v = random_gaussian_vector(rng, dim);
    } while (!normalize(v));
    return v;
}

DensityOperator random_density(Rng &rng, std::size_t dim, bool pure) {
    if (pure) {
        return density_from_state_vector(random_unit_vector(rng, dim));
    }
    // G*G^dagger with square Gaussian G is almost surely full rank positive.
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            g(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
        }
    }
    ComplexMatrix w = g * g.adjoint();
    const double tr = w.trace().real();
    w *= Complex(1.0 / tr, 0.0);
    return DensityOperator(w);
}

Projector random_projector(Rng &rng, std::size_t dim, std::size_t rank) {
    if (rank == 0 || rank >= dim) {
        throw BadParameter("projector rank must lie in [1, dim-1]");
    }
    // Orthonormalize Gaussian vectors; redraw on near-dependence.
    std::vector<std::vector<Complex>> basis;
    while (basis.size() < rank) {
        std::vector<Complex> v = random_gaussian_vector(rng, dim);
        for (const auto &b : basis) {
            subtract_projection(v, b);
        }
        if (normalize(v)) {
            basis.push_back(std::move(v));
        }
    }
    ComplexMatrix sum(dim);
    for (const auto &b : basis) {
        sum += outer_product(b);
    }
    return Projector(sum);
}

Observable random_observable(Rng &rng, std::size_t dim) {
    ComplexMatrix h(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            h(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
        }
    }
    ComplexMatrix sym = h;
    sym += h.adjoint();
    sym *= Complex(0.5, 0.0);
    return Observable(sym);
}

}  // namespace weaklab
