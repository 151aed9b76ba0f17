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
#include <optional>
#include <string>

#include "weaklab/sampling.hpp"

namespace weaklab {

inline constexpr const char *kToolVersion = "1.0.0";

/// Full result of one command invocation: input fingerprints, the exact
/// analysis, and the sampled reconstruction when shots were requested.
/// The machine-readable serialization excludes `timing_seconds` so that a
/// fixed (scenario, shots, seed, partitions) tuple always produces a
/// byte-identical document; timing appears in the human summary only.
struct RunReport {
    std::string label;
    std::size_t dim = 0;
    std::string rho_hash;
    std::string projector_hash;
    std::string observable_hash;
    double phi = 0.0;
    ReconstructionReport exact;
    std::optional<SampledReconstruction> sampled;
    std::optional<std::uint64_t> shots_per_arm;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> partitions;
    double timing_seconds = 0.0;
    std::string version = kToolVersion;
};

/// Order-independent fingerprint of a matrix: FNV-1a over the dimension and
/// the IEEE-754 bit patterns of the row-major entries. Hex encoded with an
/// algorithm prefix.
std::string matrix_hash(const ComplexMatrix &m);

/// Assembles a report. When `shots_per_arm` is set, runs the sampled
/// reconstruction at (seed, partitions); timing is left at zero for the
/// caller to fill.
RunReport build_run_report(const Scenario &scenario,
                           std::optional<std::uint64_t> shots_per_arm,
                           std::uint64_t seed, std::uint32_t partitions);

/// Machine-readable JSON document (trailing newline, stable field order,
/// shortest round-trip number formatting, no timing field).
std::string report_to_json(const RunReport &report);

/// CSV with header arm,shots,mean,std_error: one row per arm estimate
/// (baseline, project_then_measure, project_then_measure_yes,
/// rotate_then_measure) and one summary row per reconstructed component.
/// Requires a sampled section.
std::string report_to_csv(const RunReport &report);

/// Human-readable multi-line summary (intended for standard error),
/// including the wall-clock timing.
std::string human_summary(const RunReport &report);

}  // namespace weaklab
