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

#include "weaklab/operators.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "weaklab/errors.hpp"
#include "weaklab/tolerances.hpp"

namespace weaklab {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix &m) {
    const auto d = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXcd out(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    return out;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

// Ascending eigenvalues of a matrix already known to be Hermitian within
// tolerance.
std::vector<double> eigenvalues_unchecked(const ComplexMatrix &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        to_eigen(m), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd &vals = solver.eigenvalues();
    return {vals.data(), vals.data() + vals.size()};
}

}  // namespace

std::vector<std::string> density_violations(const ComplexMatrix &mat) {
    std::vector<std::string> out;
    const double herm = hermiticity_defect(mat);
    if (herm > kTol.hermitian) {
        out.push_back("hermitian: max|M - M^dagger| = " + fmt(herm));
    }
    const double trace_err = std::abs(mat.trace() - Complex{1.0, 0.0});
    if (trace_err > kTol.unit_trace) {
        out.push_back("unit trace: |Tr - 1| = " + fmt(trace_err));
    }
    if (herm <= kTol.hermitian) {
        const std::vector<double> vals = eigenvalues_unchecked(mat);
        if (vals.front() < -kTol.psd) {
            out.push_back("positive semidefinite: smallest eigenvalue = " +
                          fmt(vals.front()));
        }
    }
    return out;
}

std::vector<std::string> projector_violations(const ComplexMatrix &mat) {
    std::vector<std::string> out;
    const double herm = hermiticity_defect(mat);
    if (herm > kTol.hermitian) {
        out.push_back("hermitian: max|M - M^dagger| = " + fmt(herm));
    }
    const double idem = max_abs_diff(mat * mat, mat);
    if (idem > kTol.idempotent) {
        out.push_back("idempotent: max|P*P - P| = " + fmt(idem));
    }
    const double tr = mat.trace().real();
    const double rank = std::round(tr);
    if (std::abs(tr - rank) > kTol.projector_rank) {
        out.push_back("rank: |Tr - round(Tr)| = " +
                      fmt(std::abs(tr - rank)));
    } else if (rank < 0.5) {
        out.push_back("rank: rank must be >= 1, Tr = " + fmt(tr));
    }
    return out;
}

std::vector<std::string> observable_violations(const ComplexMatrix &mat) {
    std::vector<std::string> out;
    const double herm = hermiticity_defect(mat);
    if (herm > kTol.hermitian) {
        out.push_back("hermitian: max|M - M^dagger| = " + fmt(herm));
    }
    return out;
}

namespace {

void throw_if_violated(const std::vector<std::string> &violations,
                       const std::string &type_name) {
    if (violations.empty()) {
        return;
    }
    std::string invariant = violations.front().substr(0, violations.front().find(':'));
    std::string message = type_name + " violates ";
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i > 0) {
            message += "; ";
        }
        message += violations[i];
    }
    throw ValidationError(std::move(invariant), message);
}

}  // namespace

DensityOperator::DensityOperator(ComplexMatrix mat) : mat_(std::move(mat)) {
    throw_if_violated(density_violations(mat_), "density operator");
}

Projector::Projector(ComplexMatrix mat) : mat_(std::move(mat)), rank_(0) {
    throw_if_violated(projector_violations(mat_), "projector");
    rank_ = static_cast<std::size_t>(std::llround(mat_.trace().real()));
}

Projector Projector::complement() const {
    if (rank_ == dim()) {
        throw ValidationError("projector rank",
                              "complement of a full-rank projector is the zero "
                              "operator, which has no rank");
    }
    return Projector(ComplexMatrix::identity(dim()) - mat_);
}

std::vector<double> eigenvalues(const ComplexMatrix &m) {
    const double herm = hermiticity_defect(m);
    if (herm > kTol.hermitian) {
        throw NotHermitian("matrix is not Hermitian: max|M - M^dagger| = " +
                           fmt(herm));
    }
    return eigenvalues_unchecked(m);
}

std::vector<EigenSpace> eigh(const ComplexMatrix &m) {
    const double herm = hermiticity_defect(m);
    if (herm > kTol.hermitian) {
        throw NotHermitian("matrix is not Hermitian: max|M - M^dagger| = " +
                           fmt(herm));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
    const Eigen::VectorXd &vals = solver.eigenvalues();
    const Eigen::MatrixXcd &vecs = solver.eigenvectors();
    const std::size_t d = m.dim();

    double max_abs_val = 0.0;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        max_abs_val = std::max(max_abs_val, std::abs(vals(i)));
    }
    const double merge_gap = kTol.degeneracy_merge * (1.0 + max_abs_val);

    std::vector<EigenSpace> spectrum;
    std::size_t start = 0;
    while (start < d) {
        std::size_t stop = start + 1;
        while (stop < d && vals(static_cast<Eigen::Index>(stop)) -
                                   vals(static_cast<Eigen::Index>(stop - 1)) <
                               merge_gap) {
            ++stop;
        }
        double value = 0.0;
        ComplexMatrix proj(d);
        for (std::size_t k = start; k < stop; ++k) {
            value += vals(static_cast<Eigen::Index>(k));
            for (std::size_t i = 0; i < d; ++i) {
                const Complex vi = vecs(static_cast<Eigen::Index>(i),
                                        static_cast<Eigen::Index>(k));
                for (std::size_t j = 0; j < d; ++j) {
                    proj(i, j) += vi * std::conj(vecs(static_cast<Eigen::Index>(j),
                                                      static_cast<Eigen::Index>(k)));
                }
            }
        }
        value /= static_cast<double>(stop - start);
        spectrum.push_back(EigenSpace{value, Projector(std::move(proj))});
        start = stop;
    }
    return spectrum;
}

Observable::Observable(ComplexMatrix mat) : mat_(std::move(mat)) {
    throw_if_violated(observable_violations(mat_), "observable");
    spectrum_ = eigh(mat_);

    // Completeness, orthogonality, and reconstruction of the input.
    const std::size_t d = mat_.dim();
    ComplexMatrix sum_proj(d);
    ComplexMatrix reconstructed(d);
    for (const EigenSpace &es : spectrum_) {
        sum_proj += es.projector.mat();
        reconstructed += es.projector.mat() * Complex{es.value, 0.0};
    }
    const double completeness = max_abs_diff(sum_proj, ComplexMatrix::identity(d));
    if (completeness > kTol.spectral) {
        throw ValidationError("spectral completeness",
                              "eigenprojectors do not sum to identity: " +
                                  fmt(completeness));
    }
    for (std::size_t i = 0; i < spectrum_.size(); ++i) {
        for (std::size_t j = i + 1; j < spectrum_.size(); ++j) {
            const double overlap =
                (spectrum_[i].projector.mat() * spectrum_[j].projector.mat())
                    .max_abs();
            if (overlap > kTol.spectral) {
                throw ValidationError("spectral orthogonality",
                                      "eigenprojectors overlap: " + fmt(overlap));
            }
        }
    }
    const double recon_err = max_abs_diff(reconstructed, mat_);
    if (recon_err > kTol.spectral) {
        throw ValidationError("spectral reconstruction",
                              "sum of eigenvalue*projector deviates from the "
                              "matrix by " +
                                  fmt(recon_err));
    }
}

DensityOperator density_from_state_vector(std::span<const Complex> v) {
    const double norm = vector_norm(v);
    if (norm <= 1e-12) {
        throw ZeroVector("state vector has norm " + fmt(norm));
    }
    ComplexMatrix m = outer_product(v);
    m *= Complex{1.0 / (norm * norm), 0.0};
    return DensityOperator(std::move(m));
}

Projector projector_onto(std::span<const Complex> v) {
    const double norm = vector_norm(v);
    if (norm <= 1e-12) {
        throw ZeroVector("state vector has norm " + fmt(norm));
    }
    ComplexMatrix m = outer_product(v);
    m *= Complex{1.0 / (norm * norm), 0.0};
    return Projector(std::move(m));
}

double expectation(const DensityOperator &rho, const Observable &b) {
    const Complex t = trace_of_product(rho.mat(), b.mat());
    if (std::abs(t.imag()) > kTol.imag_expectation) {
        throw ValidationError("real expectation",
                              "Tr(rho*B) has imaginary part " + fmt(t.imag()));
    }
    return t.real();
}

double born_probability(const DensityOperator &rho, const Projector &p) {
    const Complex t = trace_of_product(rho.mat(), p.mat());
    if (std::abs(t.imag()) > kTol.imag_expectation) {
        throw ValidationError("real expectation",
                              "Tr(rho*P) has imaginary part " + fmt(t.imag()));
    }
    return std::clamp(t.real(), 0.0, 1.0);
}

}  // namespace weaklab
