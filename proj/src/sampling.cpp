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

#include "weaklab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "weaklab/errors.hpp"
#include "weaklab/luders.hpp"
#include "weaklab/tolerances.hpp"

namespace weaklab {

namespace {

// Merged-spectrum outcome distribution with a closed cumulative table; the
// final entry is forced to 1 so every uniform in [0, 1) lands in a bucket.
struct OutcomeDistribution {
    std::vector<double> eigenvalues;
    std::vector<double> cumulative;
};

OutcomeDistribution make_distribution(const DensityOperator &rho,
                                      const Observable &b) {
    require_same_dim(rho.mat(), b.mat());
    const auto &spaces = b.spectrum();
    std::vector<double> probs;
    probs.reserve(spaces.size());
    double sum = 0.0;
    for (const auto &space : spaces) {
        const double prob = born_probability(rho, space.projector);
        probs.push_back(prob);
        sum += prob;
    }
    if (std::abs(sum - 1.0) > kTol.prob_sum) {
        throw BadSpectrum("outcome probabilities sum to " +
                          std::to_string(sum) + ", off 1 by more than 1e-9");
    }
    OutcomeDistribution dist;
    dist.eigenvalues.reserve(spaces.size());
    dist.cumulative.reserve(spaces.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        dist.eigenvalues.push_back(spaces[i].value);
        acc += probs[i] / sum;
        dist.cumulative.push_back(acc);
    }
    dist.cumulative.back() = 1.0;
    return dist;
}

std::size_t draw_index(const OutcomeDistribution &dist, double u) {
    const auto it = std::upper_bound(dist.cumulative.begin(),
                                     dist.cumulative.end(), u);
    return static_cast<std::size_t>(it - dist.cumulative.begin());
}

// Histogram mean as a convex combination of eigenvalues, clamped into the
// spectrum so rounding cannot push it past the extremes. A single occupied
// bucket yields that eigenvalue exactly (weight 1.0), which keeps the
// standard error of a deterministic outcome at exactly zero.
ArmEstimate estimate_from_counts(Arm arm, const std::vector<double> &values,
                                 const std::vector<std::uint64_t> &counts,
                                 std::uint64_t total, double lo, double hi) {
    double mean = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (counts[i] == 0) {
            continue;
        }
        mean += (static_cast<double>(counts[i]) / static_cast<double>(total)) *
                values[i];
    }
    mean = std::clamp(mean, lo, hi);
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (counts[i] == 0) {
            continue;
        }
        const double dev = values[i] - mean;
        sum_sq += static_cast<double>(counts[i]) * dev * dev;
    }
    const double variance = sum_sq / static_cast<double>(total - 1);
    const double std_error = std::sqrt(variance / static_cast<double>(total));
    return ArmEstimate{arm, mean, std_error, total};
}

}  // namespace

Scenario::Scenario(DensityOperator rho_in, Projector projector_in,
                   Observable observable_in, double phi_in,
                   std::string label_in)
    : rho(std::move(rho_in)), projector(std::move(projector_in)),
      observable(std::move(observable_in)), phi(phi_in),
      label(std::move(label_in)) {
    require_same_dim(rho.mat(), projector.mat());
    require_same_dim(rho.mat(), observable.mat());
    if (born_probability(rho, projector) <= kTol.null_outcome) {
        throw NullOutcome("scenario selection probability Tr(rho*P) <= 1e-12");
    }
}

std::string arm_name(Arm arm) {
    switch (arm) {
    case Arm::kBaseline:
        return "baseline";
    case Arm::kProjectThenMeasure:
        return "project_then_measure";
    case Arm::kRotateThenMeasure:
        return "rotate_then_measure";
    }
    throw BadParameter("unknown arm");
}

ProjectorSample sample_projector(const DensityOperator &rho,
                                 const Projector &p, Rng &rng) {
    require_same_dim(rho.mat(), p.mat());
    const double prob = std::clamp(born_probability(rho, p), 0.0, 1.0);
    // One uniform per draw regardless of degeneracy keeps the stream layout
    // fixed; branches of numerically zero probability are overridden.
    const double u = rng.next_uniform();
    bool yes = u < prob;
    if (prob <= kTol.null_outcome) {
        yes = false;
    } else if (1.0 - prob <= kTol.null_outcome) {
        yes = true;
    }
    if (yes) {
        return ProjectorSample{true, selective_update(rho, p).post_state};
    }
    return ProjectorSample{false,
                           selective_update(rho, p.complement()).post_state};
}

double sample_observable(const DensityOperator &rho, const Observable &b,
                         Rng &rng) {
    const OutcomeDistribution dist = make_distribution(rho, b);
    return dist.eigenvalues[draw_index(dist, rng.next_uniform())];
}

ArmRun run_arm(const Scenario &scenario, Arm arm, std::uint64_t shots,
               std::uint64_t seed, std::uint32_t partitions) {
    if (shots < 2) {
        throw BadParameter("run_arm requires at least 2 shots");
    }
    if (partitions == 0) {
        throw BadParameter("partition count must be at least 1");
    }

    const Observable &b = scenario.observable;
    const std::size_t buckets = b.spectrum().size();
    std::vector<double> values;
    values.reserve(buckets);
    for (const auto &space : b.spectrum()) {
        values.push_back(space.value);
    }

    // Branch states and outcome tables are shot-independent; build them once.
    const bool is_project = arm == Arm::kProjectThenMeasure;
    OutcomeDistribution dist_main{{}, {}};
    OutcomeDistribution dist_no{{}, {}};
    double yes_prob = 0.0;
    bool no_reachable = false;
    switch (arm) {
    case Arm::kBaseline:
        dist_main = make_distribution(scenario.rho, b);
        break;
    case Arm::kProjectThenMeasure: {
        yes_prob = std::clamp(
            born_probability(scenario.rho, scenario.projector), 0.0, 1.0);
        dist_main = make_distribution(
            selective_update(scenario.rho, scenario.projector).post_state, b);
        no_reachable = 1.0 - yes_prob > kTol.null_outcome;
        if (no_reachable) {
            dist_no = make_distribution(
                selective_update(scenario.rho, scenario.projector.complement())
                    .post_state,
                b);
        }
        break;
    }
    case Arm::kRotateThenMeasure:
        dist_main = make_distribution(
            phase_rotate(scenario.rho, scenario.projector, scenario.phi), b);
        break;
    }

    std::vector<std::uint64_t> count(buckets, 0);
    std::vector<std::uint64_t> sel(buckets, 0);
    const std::uint64_t base = shots / partitions;
    const std::uint64_t remainder = shots % partitions;
    for (std::uint32_t part = 0; part < partitions; ++part) {
        const std::uint64_t n = base + (part < remainder ? 1 : 0);
        if (n == 0) {
            continue;
        }
        Rng rng(derive_substream_seed(seed, static_cast<std::uint32_t>(arm),
                                      part));
        for (std::uint64_t i = 0; i < n; ++i) {
            if (is_project) {
                const double u = rng.next_uniform();
                const bool yes = no_reachable ? u < yes_prob : true;
                const std::size_t idx =
                    draw_index(yes ? dist_main : dist_no, rng.next_uniform());
                ++count[idx];
                if (yes) {
                    ++sel[idx];
                }
            } else {
                ++count[draw_index(dist_main, rng.next_uniform())];
            }
        }
    }

    const double lo = b.min_eigenvalue();
    const double hi = b.max_eigenvalue();
    ArmRun run{estimate_from_counts(arm, values, count, shots, lo, hi),
               std::nullopt,
               std::nullopt,
               std::nullopt,
               std::nullopt,
               {}};
    run.tallies.reserve(buckets);
    for (std::size_t i = 0; i < buckets; ++i) {
        run.tallies.push_back(OutcomeTally{values[i], count[i], sel[i]});
    }

    if (is_project) {
        std::uint64_t yes_total = 0;
        for (const auto tally : sel) {
            yes_total += tally;
        }
        if (yes_total < 2) {
            throw EmptySelection(
                "yes-subset holds " + std::to_string(yes_total) +
                " shots; at least 2 are needed for a selected estimate");
        }
        run.selected = estimate_from_counts(arm, values, sel, yes_total, lo, hi);
        const std::uint64_t no_total = shots - yes_total;
        if (no_total >= 2) {
            std::vector<std::uint64_t> rej(buckets);
            for (std::size_t i = 0; i < buckets; ++i) {
                rej[i] = count[i] - sel[i];
            }
            run.rejected = estimate_from_counts(arm, values, rej, no_total, lo, hi);
        }
        const double fraction =
            static_cast<double>(yes_total) / static_cast<double>(shots);
        run.yes_fraction = fraction;
        run.yes_fraction_se = std::sqrt(fraction * (1.0 - fraction) /
                                        static_cast<double>(shots - 1));
    }
    return run;
}

SampledReconstruction reconstruct_sampled(const Scenario &scenario,
                                          std::uint64_t shots_per_arm,
                                          std::uint64_t seed,
                                          std::uint32_t partitions) {
    if (shots_per_arm < 100) {
        throw BadParameter("reconstruction requires at least 100 shots per arm");
    }
    const double w = require_signal_phase(scenario.phi);

    const ArmRun baseline =
        run_arm(scenario, Arm::kBaseline, shots_per_arm, seed, partitions);
    const ArmRun project = run_arm(scenario, Arm::kProjectThenMeasure,
                                   shots_per_arm, seed, partitions);
    const ArmRun rotate = run_arm(scenario, Arm::kRotateThenMeasure,
                                  shots_per_arm, seed, partitions);

    const double m0 = baseline.estimate.mean;
    const double se0 = baseline.estimate.std_error;
    const double mn = project.estimate.mean;
    const double sen = project.estimate.std_error;
    const double ms = project.selected->mean;
    const double ses = project.selected->std_error;
    const double mr = rotate.estimate.mean;
    const double ser = rotate.estimate.std_error;
    const double p_hat = *project.yes_fraction;
    const double p_se = *project.yes_fraction_se;

    SampledReconstruction out{0.0,
                              0.0,
                              0.0,
                              0.0,
                              p_hat,
                              p_se,
                              {baseline.estimate, project.estimate,
                               *project.selected, rotate.estimate},
                              analyze(scenario.rho, scenario.projector,
                                      scenario.observable)};

    out.re_hat = ms + (m0 - mn) / (2.0 * p_hat);
    const double re_p_sens = (m0 - mn) / (2.0 * p_hat * p_hat);
    out.re_se = std::sqrt(ses * ses +
                          (se0 * se0 + sen * sen) / (4.0 * p_hat * p_hat) +
                          re_p_sens * re_p_sens * p_se * p_se);

    const double c = std::cos(w);
    const double s = std::sin(w);
    out.im_hat = (mr - (1.0 - c) * mn - c * m0) / (2.0 * s * p_hat);
    const double denom_sq = 4.0 * s * s * p_hat * p_hat;
    const double im_p_sens = out.im_hat / p_hat;
    out.im_se = std::sqrt((ser * ser + (1.0 - c) * (1.0 - c) * sen * sen +
                           c * c * se0 * se0) /
                              denom_sq +
                          im_p_sens * im_p_sens * p_se * p_se);
    return out;
}

std::uint64_t derive_substream_seed(std::uint64_t master_seed,
                                    std::uint32_t arm_index,
                                    std::uint32_t partition_index) {
    std::uint64_t x = mix_bits(master_seed);
    x ^= (static_cast<std::uint64_t>(arm_index) << 32) |
         static_cast<std::uint64_t>(partition_index);
    return mix_bits(x);
}

}  // namespace weaklab
