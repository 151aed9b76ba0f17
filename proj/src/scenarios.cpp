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

#include "weaklab/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "weaklab/errors.hpp"
#include "weaklab/luders.hpp"
#include "weaklab/random_states.hpp"
#include "weaklab/tolerances.hpp"

namespace weaklab {

namespace {

using nlohmann::json;

Scenario make_three_box(int box) {
    if (box < 1 || box > 3) {
        throw BadParameter("three_box readout index must be 1, 2, or 3");
    }
    const std::array<Complex, 3> prepared{1.0, 1.0, 1.0};
    const std::array<Complex, 3> selected{1.0, 1.0, -1.0};
    ComplexMatrix box_matrix(3);
    box_matrix(static_cast<std::size_t>(box - 1),
               static_cast<std::size_t>(box - 1)) = 1.0;
    std::string label = "three_box";
    if (box != 3) {
        label += "_b" + std::to_string(box);
    }
    return Scenario(density_from_state_vector(prepared),
                    projector_onto(selected), Observable(box_matrix),
                    std::numbers::pi / 2.0, label);
}

Scenario make_amplified_spin(double alpha) {
    if (!std::isfinite(alpha)) {
        throw BadParameter("amplified_spin angle must be finite");
    }
    const double c = std::cos(alpha);
    if (c * c <= 1e-10) {
        throw BadParameter(
            "amplified_spin requires cos^2(alpha) > 1e-10; alpha = " +
            std::to_string(alpha) + " leaves the selection probability "
                                    "indistinguishable from zero");
    }
    const std::array<Complex, 2> prepared{1.0, 0.0};
    const std::array<Complex, 2> selected{c, std::sin(alpha)};
    const ComplexMatrix pauli_x =
        ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    return Scenario(density_from_state_vector(prepared),
                    projector_onto(selected), Observable(pauli_x),
                    std::numbers::pi / 2.0, "amplified_spin");
}

Scenario make_imaginary_qubit() {
    const std::array<Complex, 2> prepared{1.0, 0.0};
    const std::array<Complex, 2> selected{Complex(1.0, 0.0), Complex(0.0, 1.0)};
    const ComplexMatrix pauli_x =
        ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    return Scenario(density_from_state_vector(prepared),
                    projector_onto(selected), Observable(pauli_x),
                    std::numbers::pi / 2.0, "imaginary_qubit");
}

Scenario make_commuting_control() {
    const std::array<double, 3> rho_diag{0.5, 0.3, 0.2};
    const std::array<double, 3> proj_diag{1.0, 1.0, 0.0};
    const std::array<double, 3> obs_diag{2.0, -1.0, 0.5};
    return Scenario(DensityOperator(ComplexMatrix::diagonal(rho_diag)),
                    Projector(ComplexMatrix::diagonal(proj_diag)),
                    Observable(ComplexMatrix::diagonal(obs_diag)),
                    std::numbers::pi / 2.0, "commuting_control");
}

Scenario make_random(std::size_t dim, std::uint64_t seed) {
    if (dim < 2 || dim > kMaxDimension) {
        throw BadParameter("random scenario dimension must be in [2, 64]");
    }
    Rng rng(seed);
    const std::size_t rank = std::max<std::size_t>(1, dim / 2);
    // Redraw until the selection probability is well clear of zero so the
    // conditional state stays numerically meaningful.
    for (;;) {
        DensityOperator rho = random_density(rng, dim);
        Projector projector = random_projector(rng, dim, rank);
        Observable observable = random_observable(rng, dim);
        if (born_probability(rho, projector) > 1e-6) {
            return Scenario(std::move(rho), std::move(projector),
                            std::move(observable), std::numbers::pi / 2.0,
                            "random_d" + std::to_string(dim) + "_s" +
                                std::to_string(seed));
        }
    }
}

[[noreturn]] void fail_parse(const std::string &message) {
    throw ParseError(message);
}

json parse_json_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        fail_parse(std::string("document is not valid JSON: ") + e.what());
    }
}

Complex entry_to_complex(const json &j, const std::string &context) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number()) {
        fail_parse(context + ": complex entries must be [re, im] number pairs");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

std::vector<Complex> to_vector(const json &j, std::size_t dim,
                               const std::string &field) {
    if (j.size() != dim) {
        fail_parse(field + " has " + std::to_string(j.size()) +
                   " entries but dim is " + std::to_string(dim));
    }
    std::vector<Complex> v;
    v.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v.push_back(entry_to_complex(j[i],
                                     field + "[" + std::to_string(i) + "]"));
    }
    return v;
}

ComplexMatrix to_matrix(const json &j, std::size_t dim,
                        const std::string &field) {
    if (j.size() != dim) {
        fail_parse(field + " has " + std::to_string(j.size()) +
                   " rows but dim is " + std::to_string(dim));
    }
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const json &row = j[r];
        if (!row.is_array() || row.size() != dim) {
            fail_parse(field + " row " + std::to_string(r) + " must hold " +
                       std::to_string(dim) + " [re, im] pairs");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = entry_to_complex(row[c], field + "[" + std::to_string(r) +
                                                   "][" + std::to_string(c) +
                                                   "]");
        }
    }
    return m;
}

enum class Shape { kVector, kMatrix };

Shape classify(const json &j, const std::string &field) {
    if (!j.is_array() || j.empty()) {
        fail_parse(field + " must be a non-empty array");
    }
    const json &first = j[0];
    if (!first.is_array() || first.empty()) {
        fail_parse(field + " must be a vector of [re, im] pairs or a matrix "
                           "of rows of such pairs");
    }
    if (first[0].is_number()) {
        return Shape::kVector;
    }
    if (first[0].is_array()) {
        return Shape::kMatrix;
    }
    fail_parse(field + " must be a vector of [re, im] pairs or a matrix of "
                       "rows of such pairs");
}

// One operator field in either of its two accepted representations.
struct OperatorField {
    std::vector<Complex> vec;
    std::optional<ComplexMatrix> mat;
};

struct RawDoc {
    std::size_t dim = 0;
    OperatorField rho;
    OperatorField projector;
    std::optional<ComplexMatrix> observable;
    double phi = std::numbers::pi / 2.0;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    std::string label;
};

OperatorField extract_operator(const json &j, std::size_t dim,
                               const std::string &field) {
    OperatorField out;
    if (classify(j, field) == Shape::kVector) {
        out.vec = to_vector(j, dim, field);
    } else {
        out.mat = to_matrix(j, dim, field);
    }
    return out;
}

std::optional<std::uint64_t> extract_count(const json &j,
                                           const std::string &field) {
    if (j.is_number_unsigned()) {
        return j.get<std::uint64_t>();
    }
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v < 0) {
            fail_parse(field + " must be non-negative");
        }
        return static_cast<std::uint64_t>(v);
    }
    fail_parse(field + " must be an integer");
}

RawDoc extract(const json &doc) {
    if (!doc.is_object()) {
        fail_parse("document root must be an object");
    }
    static constexpr std::array<const char *, 8> known{
        "dim", "rho", "projector", "observable",
        "phi", "shots", "seed", "label"};
    for (const auto &item : doc.items()) {
        if (std::find_if(known.begin(), known.end(), [&](const char *k) {
                return item.key() == k;
            }) == known.end()) {
            fail_parse("unknown field '" + item.key() + "'");
        }
    }
    for (const char *required : {"dim", "rho", "projector", "observable"}) {
        if (!doc.contains(required)) {
            fail_parse(std::string("missing required field '") + required +
                       "'");
        }
    }

    RawDoc raw;
    const json &d = doc["dim"];
    if (!d.is_number_integer() && !d.is_number_unsigned()) {
        fail_parse("dim must be an integer");
    }
    const auto dim_value = d.get<std::int64_t>();
    if (dim_value < 1) {
        fail_parse("dim must be at least 1");
    }
    if (static_cast<std::size_t>(dim_value) > kMaxDimension) {
        throw ValidationError("dimension",
                              "dimension: dim is " + std::to_string(dim_value) +
                                  "; the cap is 64");
    }
    raw.dim = static_cast<std::size_t>(dim_value);

    raw.rho = extract_operator(doc["rho"], raw.dim, "rho");
    raw.projector = extract_operator(doc["projector"], raw.dim, "projector");
    if (classify(doc["observable"], "observable") != Shape::kMatrix) {
        fail_parse("observable must be a full matrix");
    }
    raw.observable = to_matrix(doc["observable"], raw.dim, "observable");

    if (doc.contains("phi")) {
        if (!doc["phi"].is_number()) {
            fail_parse("phi must be a number");
        }
        raw.phi = doc["phi"].get<double>();
    }
    if (doc.contains("shots")) {
        raw.shots = extract_count(doc["shots"], "shots");
    }
    if (doc.contains("seed")) {
        const json &s = doc["seed"];
        if (s.is_number_unsigned()) {
            raw.seed = s.get<std::uint64_t>();
        } else if (s.is_number_integer()) {
            raw.seed = static_cast<std::uint64_t>(s.get<std::int64_t>());
        } else {
            fail_parse("seed must be an integer");
        }
    }
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) {
            fail_parse("label must be a string");
        }
        raw.label = doc["label"].get<std::string>();
    }
    return raw;
}

DensityOperator build_density(const OperatorField &field) {
    if (field.mat) {
        return DensityOperator(*field.mat);
    }
    return density_from_state_vector(field.vec);
}

Projector build_projector(const OperatorField &field) {
    if (field.mat) {
        return Projector(*field.mat);
    }
    return projector_onto(field.vec);
}

nlohmann::ordered_json matrix_to_json(const ComplexMatrix &m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"three_box", "amplified_spin", "imaginary_qubit",
            "commuting_control", "random"};
}

Scenario builtin(const std::string &name, const BuiltinParams &params) {
    if (name == "three_box") {
        return make_three_box(params.box);
    }
    if (name == "amplified_spin") {
        return make_amplified_spin(params.alpha);
    }
    if (name == "imaginary_qubit") {
        return make_imaginary_qubit();
    }
    if (name == "commuting_control") {
        return make_commuting_control();
    }
    if (name == "random") {
        return make_random(params.dim, params.seed);
    }
    std::string known;
    for (const auto &n : builtin_names()) {
        if (!known.empty()) {
            known += ", ";
        }
        known += n;
    }
    throw UnknownScenario("no builtin scenario named '" + name +
                          "'; known names: " + known);
}

Scenario parse_scenario(const std::string &text, RunDefaults *defaults) {
    const RawDoc raw = extract(parse_json_text(text));
    if (defaults != nullptr) {
        defaults->shots = raw.shots;
        defaults->seed = raw.seed;
    }
    return Scenario(build_density(raw.rho), build_projector(raw.projector),
                    Observable(*raw.observable), raw.phi, raw.label);
}

Scenario load_scenario_file(const std::string &path, RunDefaults *defaults) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read scenario file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), defaults);
}

std::string serialize_scenario(const Scenario &scenario) {
    nlohmann::ordered_json doc;
    doc["dim"] = scenario.rho.dim();
    doc["rho"] = matrix_to_json(scenario.rho.mat());
    doc["projector"] = matrix_to_json(scenario.projector.mat());
    doc["observable"] = matrix_to_json(scenario.observable.mat());
    doc["phi"] = scenario.phi;
    doc["label"] = scenario.label;
    return doc.dump(2) + "\n";
}

std::vector<std::string> scenario_violations(const std::string &text) {
    std::vector<std::string> out;
    std::optional<RawDoc> raw;
    try {
        raw.emplace(extract(parse_json_text(text)));
    } catch (const ValidationError &e) {
        out.push_back(e.what());
        return out;
    } catch (const ParseError &e) {
        out.push_back(std::string("parse: ") + e.what());
        return out;
    }

    std::optional<DensityOperator> rho;
    if (raw->rho.mat) {
        const auto lines = density_violations(*raw->rho.mat);
        for (const auto &line : lines) {
            out.push_back("rho " + line);
        }
        if (lines.empty()) {
            rho.emplace(*raw->rho.mat);
        }
    } else {
        try {
            rho.emplace(density_from_state_vector(raw->rho.vec));
        } catch (const Error &e) {
            out.push_back(std::string("rho zero vector: ") + e.what());
        }
    }

    std::optional<Projector> projector;
    if (raw->projector.mat) {
        const auto lines = projector_violations(*raw->projector.mat);
        for (const auto &line : lines) {
            out.push_back("projector " + line);
        }
        if (lines.empty()) {
            try {
                projector.emplace(*raw->projector.mat);
            } catch (const ValidationError &e) {
                out.push_back(e.what());
            }
        }
    } else {
        try {
            projector.emplace(projector_onto(raw->projector.vec));
        } catch (const Error &e) {
            out.push_back(std::string("projector zero vector: ") + e.what());
        }
    }

    const auto obs_lines = observable_violations(*raw->observable);
    for (const auto &line : obs_lines) {
        out.push_back("observable " + line);
    }
    std::optional<Observable> observable;
    if (obs_lines.empty()) {
        try {
            observable.emplace(*raw->observable);
        } catch (const ValidationError &e) {
            out.push_back(e.what());
        }
    }

    if (rho && projector) {
        const double prob = born_probability(*rho, *projector);
        if (prob <= kTol.null_outcome) {
            std::ostringstream line;
            line << "selection probability: Tr(rho*P) = " << prob
                 << " <= 1e-12";
            out.push_back(line.str());
        }
    }
    try {
        require_signal_phase(raw->phi);
    } catch (const DegeneratePhase &e) {
        out.push_back(std::string("phase: ") + e.what());
    }
    return out;
}

}  // namespace weaklab
