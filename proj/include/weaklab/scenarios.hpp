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
#include <vector>

#include "weaklab/sampling.hpp"

namespace weaklab {

/// Parameters accepted by the builtin scenario catalog. Unused fields are
/// ignored by scenarios that do not take them.
struct BuiltinParams {
    double alpha = 1.4;        // amplified_spin tilt angle
    int box = 3;               // three_box readout basis index, 1..3
    std::size_t dim = 4;       // random scenario dimension
    std::uint64_t seed = 1;    // random scenario generation seed
};

/// Names understood by builtin(), in catalog order.
std::vector<std::string> builtin_names();

/// Constructs a catalog scenario:
///   three_box          (1,1,1)/sqrt(3) preparation, selection onto
///                      (1,1,-1)/sqrt(3), readout |box><box|
///   amplified_spin     |0><0| preparation, selection onto
///                      (cos a, sin a), readout Pauli-x; weak value tan(a)
///   imaginary_qubit    |0><0| preparation, selection onto (1, i)/sqrt(2),
///                      readout Pauli-x; weak value -i
///   commuting_control  diagonal rho, P, B in d = 3; every weak value
///                      classical
///   random             full-rank rho, rank-(d/2) projector, Gaussian
///                      observable from the given seed, redrawn until
///                      Tr(rho P) is well clear of zero
/// Throws UnknownScenario for other names and BadParameter for out-of-range
/// parameters (amplified_spin requires cos^2(a) > 1e-10).
Scenario builtin(const std::string &name, const BuiltinParams &params = {});

/// Optional run settings carried by a scenario file next to the operators.
struct RunDefaults {
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
};

/// Parses a scenario document (JSON text). Field names: dim, rho, projector,
/// observable, phi, shots, seed, label. Complex entries are [re, im] pairs;
/// rho and projector accept either a vector (pure state / rank-1 range) or a
/// row-major matrix. Throws ParseError with field diagnostics on malformed
/// documents and ValidationError naming the violated invariant on bad
/// operators.
Scenario parse_scenario(const std::string &text,
                        RunDefaults *defaults = nullptr);

/// parse_scenario over the contents of a file.
Scenario load_scenario_file(const std::string &path,
                            RunDefaults *defaults = nullptr);

/// Serializes a scenario to the document format accepted by
/// parse_scenario. Matrices are written in full (row-major, [re, im]
/// entries); parse(serialize(s)) reproduces the operators exactly.
std::string serialize_scenario(const Scenario &scenario);

/// Collects every invariant violation in a scenario document without
/// stopping at the first, as "<invariant>: <detail>" lines. Returns an empty
/// list when the document is valid. Parse failures surface as a single
/// "parse: ..." entry.
std::vector<std::string> scenario_violations(const std::string &text);

}  // namespace weaklab
