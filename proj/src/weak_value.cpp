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

#include "weaklab/weak_value.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "weaklab/errors.hpp"
#include "weaklab/luders.hpp"
#include "weaklab/tolerances.hpp"

namespace weaklab {

namespace {

double checked_selection_probability(const DensityOperator &rho,
                                     const Projector &p) {
    const double prob = born_probability(rho, p);
    if (prob <= kTol.null_outcome) {
        throw NullOutcome("selection probability Tr(rho*P) <= 1e-12");
    }
    return prob;
}

WeakValue weak_value_from_matrices(const DensityOperator &rho,
                                   const Projector &p, const ComplexMatrix &b) {
    require_same_dim(rho.mat(), b);
    const double prob = checked_selection_probability(rho, p);
    const Complex numerator = trace_of_product(rho.mat(), p.mat(), b);
    return WeakValue{numerator.real() / prob, numerator.imag() / prob};
}

}  // namespace

WeakValue weak_value_direct(const DensityOperator &rho, const Projector &p,
                            const Observable &b) {
    return weak_value_from_matrices(rho, p, b.mat());
}

WeakValue weak_value_direct(const DensityOperator &rho, const Projector &p,
                            const Projector &b) {
    return weak_value_from_matrices(rho, p, b.mat());
}

double reconstruct_re(const DensityOperator &rho, const Projector &p,
                      const Observable &b) {
    require_same_dim(rho.mat(), b.mat());
    const double prob = checked_selection_probability(rho, p);
    const DensityOperator selected = selective_update(rho, p).post_state;
    const DensityOperator unread = nonselective_update(rho, p);
    return expectation(selected, b) +
           (expectation(rho, b) - expectation(unread, b)) / (2.0 * prob);
}

double reconstruct_im(const DensityOperator &rho, const Projector &p,
                      const Observable &b) {
    require_same_dim(rho.mat(), b.mat());
    const double prob = checked_selection_probability(rho, p);
    const DensityOperator rotated = phase_rotate(rho, p, std::numbers::pi / 2.0);
    const DensityOperator unread = nonselective_update(rho, p);
    return (expectation(rotated, b) - expectation(unread, b)) / (2.0 * prob);
}

double reconstruct_im_general(const DensityOperator &rho, const Projector &p,
                              const Observable &b, double phi) {
    require_same_dim(rho.mat(), b.mat());
    const double prob = checked_selection_probability(rho, p);
    const double w = require_signal_phase(phi);
    const double c = std::cos(w);
    const double s = std::sin(w);
    const DensityOperator rotated = phase_rotate(rho, p, w);
    const DensityOperator unread = nonselective_update(rho, p);
    return (expectation(rotated, b) - (1.0 - c) * expectation(unread, b) -
            c * expectation(rho, b)) /
           (2.0 * s * prob);
}

std::vector<WeakValue> weak_probabilities(const DensityOperator &rho,
                                          const Projector &p_a,
                                          const std::vector<Projector> &basis) {
    if (basis.empty()) {
        throw IncompleteBasis("projector family is empty");
    }
    const std::size_t d = basis.front().dim();
    ComplexMatrix sum(d);
    for (const Projector &pb : basis) {
        require_same_dim(pb.mat(), basis.front().mat());
        sum += pb.mat();
    }
    const double completeness = max_abs_diff(sum, ComplexMatrix::identity(d));
    if (completeness > kTol.spectral) {
        throw IncompleteBasis(
            "projector family does not sum to identity: max deviation " +
            std::to_string(completeness));
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const double overlap = (basis[i].mat() * basis[j].mat()).max_abs();
            if (overlap > kTol.spectral) {
                throw IncompleteBasis("projector family is not orthogonal: "
                                      "max|Pi*Pj| = " +
                                      std::to_string(overlap));
            }
        }
    }
    std::vector<WeakValue> out;
    out.reserve(basis.size());
    for (const Projector &pb : basis) {
        out.push_back(weak_value_direct(rho, p_a, pb));
    }
    return out;
}

double disturbance(const DensityOperator &rho, const Projector &p,
                   const Observable &b) {
    require_same_dim(rho.mat(), b.mat());
    require_same_dim(rho.mat(), p.mat());
    return expectation(rho, b) - expectation(nonselective_update(rho, p), b);
}

ReconstructionReport analyze(const DensityOperator &rho, const Projector &p,
                             const Observable &b) {
    ReconstructionReport report;
    report.direct = weak_value_direct(rho, p, b);
    report.re_reconstructed = reconstruct_re(rho, p, b);
    report.im_reconstructed = reconstruct_im(rho, p, b);
    report.disturbance = disturbance(rho, p, b);
    report.selection_probability = checked_selection_probability(rho, p);
    report.eigen_range = {b.min_eigenvalue(), b.max_eigenvalue()};
    report.nonclassical_re =
        report.re_reconstructed < report.eigen_range.first - kTol.nonclassical ||
        report.re_reconstructed > report.eigen_range.second + kTol.nonclassical;
    report.nonclassical_im = std::abs(report.im_reconstructed) > kTol.nonclassical;

    // The reconstruction must agree with the defining ratio; a gap here
    // signals a numerical problem upstream.
    if (std::abs(report.re_reconstructed - report.direct.re) > 1e-10 ||
        std::abs(report.im_reconstructed - report.direct.im) > 1e-10) {
        throw ValidationError("reconstruction agreement",
                              "reconstructed weak value deviates from the "
                              "direct ratio by more than 1e-10");
    }
    return report;
}

}  // namespace weaklab
