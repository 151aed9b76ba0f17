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

#include "weaklab/complex_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "weaklab/errors.hpp"
#include "weaklab/tolerances.hpp"

namespace weaklab {

namespace {

void check_dim(std::size_t dim) {
    if (dim < 1 || dim > kMaxDimension) {
        throw ValidationError("dimension",
                              "matrix dimension " + std::to_string(dim) +
                                  " outside [1, " +
                                  std::to_string(kMaxDimension) + "]");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    check_dim(dim);
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim);
    if (entries_.size() != dim_ * dim_) {
        throw ValidationError("entry count",
                              "expected " + std::to_string(dim_ * dim_) +
                                  " entries, got " +
                                  std::to_string(entries_.size()));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t dim = rows.size();
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (const auto &row : rows) {
        if (row.size() != dim) {
            throw ValidationError("entry count", "rows must form a square matrix");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(dim, std::move(entries));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex &z : entries_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += rhs.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= rhs.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
    for (Complex &z : entries_) {
        z *= scalar;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    require_same_dim(lhs, rhs);
    const std::size_t d = lhs.dim();
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

double hermiticity_defect(const ComplexMatrix &m) {
    double defect = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = i; j < m.dim(); ++j) {
            defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return defect;
}

ComplexMatrix outer_product(std::span<const Complex> v) {
    ComplexMatrix out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return out;
}

Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < a.dim(); ++k) {
            t += a(i, k) * b(k, i);
        }
    }
    return t;
}

Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b,
                         const ComplexMatrix &c) {
    require_same_dim(a, b);
    require_same_dim(b, c);
    return trace_of_product(a * b, c);
}

double vector_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const Complex &z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a.dim()) +
                                "x" + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + "x" +
                                std::to_string(b.dim()));
    }
}

}  // namespace weaklab
