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

#include "weaklab/report.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <sstream>
#include <string>

#include "json.hpp"
#include "weaklab/errors.hpp"
#include "weaklab/weak_value.hpp"

namespace weaklab {

namespace {

// Fixed labels for the four per-arm estimates, in the order
// reconstruct_sampled emits them.
const std::array<const char *, 4> kArmLabels{
    "baseline", "project_then_measure", "project_then_measure_yes",
    "rotate_then_measure"};

// Shortest round-trip decimal form; identical across platforms for
// identical bits.
std::string format_double(double value) {
    std::array<char, 32> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), result.ptr);
}

void hash_u64(std::uint64_t value, std::uint64_t &state) {
    for (int byte = 0; byte < 8; ++byte) {
        state ^= (value >> (8 * byte)) & 0xffULL;
        state *= 1099511628211ULL;
    }
}

nlohmann::ordered_json arm_to_json(const ArmEstimate &estimate,
                                   const char *name) {
    nlohmann::ordered_json j;
    j["arm"] = name;
    j["shots"] = estimate.shots;
    j["mean"] = estimate.mean;
    j["std_error"] = estimate.std_error;
    return j;
}

}  // namespace

std::string matrix_hash(const ComplexMatrix &m) {
    std::uint64_t state = 1469598103934665603ULL;
    hash_u64(static_cast<std::uint64_t>(m.dim()), state);
    for (const Complex &entry : m.entries()) {
        hash_u64(std::bit_cast<std::uint64_t>(entry.real()), state);
        hash_u64(std::bit_cast<std::uint64_t>(entry.imag()), state);
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[static_cast<std::size_t>(i)] = digits[state & 0xfULL];
        state >>= 4;
    }
    return "fnv1a64:" + hex;
}

RunReport build_run_report(const Scenario &scenario,
                           std::optional<std::uint64_t> shots_per_arm,
                           std::uint64_t seed, std::uint32_t partitions) {
    RunReport report;
    report.label = scenario.label;
    report.dim = scenario.rho.dim();
    report.rho_hash = matrix_hash(scenario.rho.mat());
    report.projector_hash = matrix_hash(scenario.projector.mat());
    report.observable_hash = matrix_hash(scenario.observable.mat());
    report.phi = scenario.phi;
    if (shots_per_arm) {
        report.sampled =
            reconstruct_sampled(scenario, *shots_per_arm, seed, partitions);
        report.exact = report.sampled->exact;
        report.shots_per_arm = shots_per_arm;
        report.seed = seed;
        report.partitions = partitions;
    } else {
        report.exact =
            analyze(scenario.rho, scenario.projector, scenario.observable);
    }
    return report;
}

std::string report_to_json(const RunReport &report) {
    nlohmann::ordered_json doc;
    doc["tool"] = "weaklab";
    doc["version"] = report.version;
    doc["label"] = report.label;

    nlohmann::ordered_json inputs;
    inputs["dim"] = report.dim;
    inputs["rho_hash"] = report.rho_hash;
    inputs["projector_hash"] = report.projector_hash;
    inputs["observable_hash"] = report.observable_hash;
    inputs["phi"] = report.phi;
    doc["inputs"] = inputs;

    const ReconstructionReport &exact = report.exact;
    nlohmann::ordered_json ex;
    ex["weak_value"] = {{"re", exact.direct.re}, {"im", exact.direct.im}};
    ex["re_reconstructed"] = exact.re_reconstructed;
    ex["im_reconstructed"] = exact.im_reconstructed;
    ex["disturbance"] = exact.disturbance;
    ex["selection_probability"] = exact.selection_probability;
    ex["eigen_range"] = {exact.eigen_range.first, exact.eigen_range.second};
    ex["nonclassical_re"] = exact.nonclassical_re;
    ex["nonclassical_im"] = exact.nonclassical_im;
    doc["exact"] = ex;

    if (report.sampled) {
        const SampledReconstruction &s = *report.sampled;
        nlohmann::ordered_json sj;
        sj["shots_per_arm"] = report.shots_per_arm.value();
        sj["seed"] = report.seed.value();
        sj["partitions"] = report.partitions.value();
        sj["re_hat"] = s.re_hat;
        sj["re_se"] = s.re_se;
        sj["im_hat"] = s.im_hat;
        sj["im_se"] = s.im_se;
        sj["selection_prob_hat"] = s.selection_prob_hat;
        sj["selection_prob_se"] = s.selection_prob_se;
        nlohmann::ordered_json arms = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < s.per_arm.size(); ++i) {
            arms.push_back(arm_to_json(s.per_arm[i], kArmLabels[i]));
        }
        sj["arms"] = arms;
        doc["sampled"] = sj;
    }
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const RunReport &report) {
    if (!report.sampled) {
        throw BadParameter("CSV output requires a sampled section; rerun "
                           "with --shots");
    }
    const SampledReconstruction &s = *report.sampled;
    std::string out = "arm,shots,mean,std_error\n";
    for (std::size_t i = 0; i < s.per_arm.size(); ++i) {
        const ArmEstimate &e = s.per_arm[i];
        out += std::string(kArmLabels[i]) + "," + std::to_string(e.shots) +
               "," + format_double(e.mean) + "," +
               format_double(e.std_error) + "\n";
    }
    const std::uint64_t total = 3 * report.shots_per_arm.value();
    out += "reconstructed_re," + std::to_string(total) + "," +
           format_double(s.re_hat) + "," + format_double(s.re_se) + "\n";
    out += "reconstructed_im," + std::to_string(total) + "," +
           format_double(s.im_hat) + "," + format_double(s.im_se) + "\n";
    return out;
}

std::string human_summary(const RunReport &report) {
    std::ostringstream out;
    out << "scenario: " << (report.label.empty() ? "(unnamed)" : report.label)
        << " (dim " << report.dim << ")\n";
    const ReconstructionReport &exact = report.exact;
    out << "selection probability: " << exact.selection_probability << "\n";
    out << "weak value: re = " << exact.direct.re
        << ", im = " << exact.direct.im << "\n";
    out << "reconstructed: re = " << exact.re_reconstructed
        << ", im = " << exact.im_reconstructed << "\n";
    out << "disturbance: " << exact.disturbance << "\n";
    out << "eigen range: [" << exact.eigen_range.first << ", "
        << exact.eigen_range.second << "]\n";
    out << "nonclassical: re " << (exact.nonclassical_re ? "yes" : "no")
        << ", im " << (exact.nonclassical_im ? "yes" : "no") << "\n";
    if (report.sampled) {
        const SampledReconstruction &s = *report.sampled;
        out << "sampled: " << report.shots_per_arm.value()
            << " shots/arm, seed " << report.seed.value() << ", "
            << report.partitions.value() << " partition(s)\n";
        out << "  re_hat = " << s.re_hat << " +/- " << s.re_se << "\n";
        out << "  im_hat = " << s.im_hat << " +/- " << s.im_se << "\n";
        out << "  selection_prob_hat = " << s.selection_prob_hat << " +/- "
            << s.selection_prob_se << "\n";
    }
    out << "elapsed: " << report.timing_seconds << " s\n";
    return out.str();
}

}  // namespace weaklab
