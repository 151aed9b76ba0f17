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

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "weaklab/operators.hpp"
#include "weaklab/rng.hpp"
#include "weaklab/weak_value.hpp"

namespace weaklab {

/// A complete measurement configuration: preparation rho, selection
/// projector P, readout observable B, and the rotation angle used by the
/// imaginary-part arm. Construction validates that all dimensions agree and
/// that the selection probability Tr(rho P) exceeds 1e-12.
struct Scenario {
    Scenario(DensityOperator rho_in, Projector projector_in,
             Observable observable_in,
             double phi_in = std::numbers::pi / 2.0, std::string label_in = "");

    DensityOperator rho;
    Projector projector;
    Observable observable;
    double phi;
    std::string label;
};

/// The three independently sampled measurement procedures. The baseline arm
/// reads B directly; the project arm measures P (keeping the record) and
/// then B; the rotate arm applies the selective phase rotation and then
/// measures B.
enum class Arm : std::uint32_t {
    kBaseline = 0,
    kProjectThenMeasure = 1,
    kRotateThenMeasure = 2,
};

/// Stable lowercase name for report output.
std::string arm_name(Arm arm);

struct ArmEstimate {
    Arm arm;
    double mean;
    double std_error;
    std::uint64_t shots;
};

/// Outcome of a single sampled projector measurement.
struct ProjectorSample {
    bool yes;
    DensityOperator post_state;
};

/// Integer occurrence counts for one merged eigenvalue of the observable.
/// `selected` counts the subset of `count` whose projector record was yes;
/// it stays zero for arms without a projector stage.
struct OutcomeTally {
    double eigenvalue;
    std::uint64_t count = 0;
    std::uint64_t selected = 0;
};

/// Full result of one sampled arm. The optional fields are populated only
/// for the project arm: `selected` and `rejected` are the per-record-subset
/// estimates (`rejected` requires at least two no-shots), and the
/// yes-fraction estimates the selection probability. All statistics derive
/// from `tallies`, so the mixture identity
///   mean = yes_fraction * yes_mean + (1 - yes_fraction) * no_mean
/// holds on the same data by construction.
struct ArmRun {
    ArmEstimate estimate;
    std::optional<ArmEstimate> selected;
    std::optional<ArmEstimate> rejected;
    std::optional<double> yes_fraction;
    std::optional<double> yes_fraction_se;
    std::vector<OutcomeTally> tallies;
};

/// Statistical reconstruction of a weak value from three sampled arms,
/// with first-order propagated standard errors and the exact report
/// alongside for comparison.
struct SampledReconstruction {
    double re_hat;
    double re_se;
    double im_hat;
    double im_se;
    double selection_prob_hat;
    double selection_prob_se;
    std::vector<ArmEstimate> per_arm;
    ReconstructionReport exact;
};

/// One Born-rule draw of the yes/no projector measurement. The outcome is
/// yes with probability Tr(rho P) (clamped to [0, 1]); the post state is the
/// outcome-kept update on the recorded branch. Branches of numerically zero
/// probability are never taken.
ProjectorSample sample_projector(const DensityOperator &rho, const Projector &p,
                                 Rng &rng);

/// One projective draw of the observable: returns merged eigenvalue
/// lambda_i with probability Tr(rho Pi_i). Throws BadSpectrum when the
/// branch probabilities fail to sum to 1 within 1e-9.
double sample_observable(const DensityOperator &rho, const Observable &b,
                         Rng &rng);

/// Samples one arm for `shots` draws, split evenly over `partitions`
/// independent substreams derived from (seed, arm, partition). Pooling is
/// exact integer tally addition, so a fixed (seed, partitions) pair gives a
/// bit-identical result. Requires shots >= 2; throws EmptySelection when the
/// project arm records fewer than two yes-shots.
ArmRun run_arm(const Scenario &scenario, Arm arm, std::uint64_t shots,
               std::uint64_t seed, std::uint32_t partitions = 1);

/// Runs all three arms at shots_per_arm each (>= 100) and plugs the arm
/// means into the real- and imaginary-part reconstruction formulas at the
/// scenario's angle. Standard errors are propagated to first order treating
/// the inputs as independent; arms use disjoint substreams so cross-arm
/// independence holds by construction.
SampledReconstruction reconstruct_sampled(const Scenario &scenario,
                                          std::uint64_t shots_per_arm,
                                          std::uint64_t seed,
                                          std::uint32_t partitions = 1);

/// Collision-free deterministic substream seed for (master, arm, partition).
/// Pure bit mixing, identical on every platform.
std::uint64_t derive_substream_seed(std::uint64_t master_seed,
                                    std::uint32_t arm_index,
                                    std::uint32_t partition_index);

}  // namespace weaklab
