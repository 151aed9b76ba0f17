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
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace weaklab {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage. This is the carrier type
/// for every operator in the library; dimensions are capped at
/// kMaxDimension.
class ComplexMatrix {
  public:
    /// Zero matrix of the given dimension.
    explicit ComplexMatrix(std::size_t dim);

    /// Matrix from row-major entries; entries.size() must equal dim*dim.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);

    /// Convenience builder for literals in tests and scenario code.
    static ComplexMatrix
    from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t dim() const { return dim_; }

    Complex &operator()(std::size_t i, std::size_t j) {
        return entries_[i * dim_ + j];
    }
    const Complex &operator()(std::size_t i, std::size_t j) const {
        return entries_[i * dim_ + j];
    }

    const std::vector<Complex> &entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    /// Largest entrywise modulus.
    double max_abs() const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        lhs += rhs;
        return lhs;
    }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) {
        lhs *= scalar;
        return lhs;
    }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) {
        rhs *= scalar;
        return rhs;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &lhs,
                                   const ComplexMatrix &rhs);

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Largest entrywise |a - b|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest entrywise |M - M^dagger|.
double hermiticity_defect(const ComplexMatrix &m);

/// Outer product v * v^dagger (unnormalized).
ComplexMatrix outer_product(std::span<const Complex> v);

/// Tr(a * b) without forming the product.
Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// Tr(a * b * c).
Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b,
                         const ComplexMatrix &c);

/// Euclidean norm of a complex vector.
double vector_norm(std::span<const Complex> v);

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace weaklab
