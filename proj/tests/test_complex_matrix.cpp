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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <vector>

#include "test_support.hpp"
#include "weaklab/complex_matrix.hpp"
#include "weaklab/errors.hpp"

using weaklab::Complex;
using weaklab::ComplexMatrix;

TEST_CASE("construction and factories") {
    SUBCASE("zero initialized") {
        ComplexMatrix m(3);
        CHECK(m.dim() == 3);
        CHECK(m.max_abs() == 0.0);
    }
    SUBCASE("identity") {
        const ComplexMatrix id = ComplexMatrix::identity(4);
        CHECK(id.trace() == Complex(4.0, 0.0));
        CHECK(id(0, 0) == Complex(1.0, 0.0));
        CHECK(id(0, 1) == Complex(0.0, 0.0));
    }
    SUBCASE("from_rows") {
        const ComplexMatrix m = ComplexMatrix::from_rows(
            {{Complex(1.0, 2.0), 0.0}, {0.0, Complex(3.0, -4.0)}});
        CHECK(m(0, 0) == Complex(1.0, 2.0));
        CHECK(m(1, 1) == Complex(3.0, -4.0));
    }
    SUBCASE("diagonal") {
        const std::vector<double> d{3.0, 1.0, -2.0};
        const ComplexMatrix m = ComplexMatrix::diagonal(d);
        CHECK(m(2, 2) == Complex(-2.0, 0.0));
        CHECK(m(0, 1) == Complex(0.0, 0.0));
    }
    SUBCASE("entry buffer mismatch rejected") {
        CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)),
                        weaklab::ValidationError);
    }
    SUBCASE("zero dimension rejected") {
        CHECK_THROWS_AS(ComplexMatrix(0), weaklab::ValidationError);
    }
    SUBCASE("dimension cap") {
        CHECK_NOTHROW(ComplexMatrix(64));
        CHECK_THROWS_AS(ComplexMatrix(65), weaklab::ValidationError);
    }
    SUBCASE("ragged rows rejected") {
        CHECK_THROWS_AS(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0}}),
                        weaklab::ValidationError);
    }
}

TEST_CASE("adjoint, trace, and norms") {
    const ComplexMatrix m = ComplexMatrix::from_rows(
        {{Complex(1.0, 1.0), Complex(2.0, -3.0)},
         {Complex(0.0, 5.0), Complex(-4.0, 0.0)}});
    const ComplexMatrix a = m.adjoint();
    CHECK(a(0, 0) == Complex(1.0, -1.0));
    CHECK(a(0, 1) == Complex(0.0, -5.0));
    CHECK(a(1, 0) == Complex(2.0, 3.0));
    CHECK(m.trace() == Complex(-3.0, 1.0));
    CHECK(m.max_abs() == doctest::Approx(std::abs(Complex(0.0, 5.0))));

    CHECK(weaklab::hermiticity_defect(ComplexMatrix::identity(3)) == 0.0);
    const ComplexMatrix h = ComplexMatrix::from_rows(
        {{1.0, Complex(0.0, 1.0)}, {Complex(0.0, -1.0), 2.0}});
    CHECK(weaklab::hermiticity_defect(h) == 0.0);
    CHECK(weaklab::hermiticity_defect(m) > 1.0);
}

TEST_CASE("arithmetic") {
    const ComplexMatrix a = ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows(
        {{0.0, Complex(0.0, 1.0)}, {Complex(0.0, -1.0), 1.0}});

    SUBCASE("addition round trip") {
        const ComplexMatrix c = a + b;
        CHECK(weaklab::max_abs_diff(c - b, a) == 0.0);
    }
    SUBCASE("scalar scaling both sides") {
        const Complex s(0.0, 2.0);
        CHECK(weaklab::max_abs_diff(a * s, s * a) == 0.0);
        CHECK((a * s)(1, 1) == Complex(0.0, 8.0));
    }
    SUBCASE("matrix product") {
        const ComplexMatrix p = a * b;
        CHECK(p(0, 0) == Complex(0.0, -2.0));
        CHECK(p(0, 1) == Complex(2.0, 1.0));
        CHECK(p(1, 0) == Complex(0.0, -4.0));
        CHECK(p(1, 1) == Complex(4.0, 3.0));
    }
    SUBCASE("dimension mismatch rejected") {
        const ComplexMatrix c(3);
        CHECK_THROWS_AS((void)(a + c), weaklab::DimensionMismatch);
        CHECK_THROWS_AS((void)(a * c), weaklab::DimensionMismatch);
        CHECK_THROWS_AS((void)weaklab::max_abs_diff(a, c),
                        weaklab::DimensionMismatch);
    }
}

TEST_CASE("trace_of_product matches explicit products") {
    testutil::Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t dim = 2 + static_cast<std::size_t>(rep % 5);
        ComplexMatrix a(dim);
        ComplexMatrix b(dim);
        ComplexMatrix c(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                a(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
                b(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
                c(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
            }
        }
        const Complex two = weaklab::trace_of_product(a, b);
        const Complex two_ref = (a * b).trace();
        CHECK(std::abs(two - two_ref) <= 1e-12 * (1.0 + std::abs(two_ref)));

        const Complex three = weaklab::trace_of_product(a, b, c);
        const Complex three_ref = (a * b * c).trace();
        CHECK(std::abs(three - three_ref) <=
              1e-12 * (1.0 + std::abs(three_ref)));
    }
}

TEST_CASE("outer product and vector norm") {
    const std::vector<Complex> v{Complex(1.0, 0.0), Complex(0.0, 1.0)};
    const ComplexMatrix m = weaklab::outer_product(v);
    CHECK(m(0, 0) == Complex(1.0, 0.0));
    CHECK(m(0, 1) == Complex(0.0, -1.0));
    CHECK(m(1, 0) == Complex(0.0, 1.0));
    CHECK(m(1, 1) == Complex(1.0, 0.0));
    CHECK(weaklab::vector_norm(v) == doctest::Approx(std::sqrt(2.0)));
}
