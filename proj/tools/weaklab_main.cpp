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

// Command-line front end. Exit codes: 0 success, 2 validation or parse or
// parameter error, 3 null selection outcome, 4 empty sampled selection.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "weaklab/errors.hpp"
#include "weaklab/report.hpp"
#include "weaklab/scenarios.hpp"

namespace {

using namespace weaklab;

struct ScenarioOptions {
    std::string ref;
    double alpha = 1.4;
    int box = 3;
    std::size_t dim = 4;
    std::uint64_t scenario_seed = 1;
};

struct OutputOptions {
    std::string path;
    bool csv = false;
};

void add_scenario_options(CLI::App *cmd, ScenarioOptions &opts) {
    cmd->add_option("scenario", opts.ref,
                    "builtin scenario name or scenario file path")
        ->required();
    cmd->add_option("--alpha", opts.alpha,
                    "amplified_spin tilt angle in radians");
    cmd->add_option("--box", opts.box, "three_box readout index (1, 2, or 3)");
    cmd->add_option("--dim", opts.dim, "random scenario dimension");
    cmd->add_option("--scenario-seed", opts.scenario_seed,
                    "random scenario generation seed");
}

void add_output_options(CLI::App *cmd, OutputOptions &opts) {
    cmd->add_option("--output", opts.path,
                    "write the report to this file instead of stdout");
    cmd->add_flag("--csv", opts.csv,
                  "emit the per-arm CSV instead of the JSON report");
}

Scenario resolve_scenario(const ScenarioOptions &opts, RunDefaults *defaults) {
    const auto names = builtin_names();
    if (std::find(names.begin(), names.end(), opts.ref) != names.end()) {
        BuiltinParams params;
        params.alpha = opts.alpha;
        params.box = opts.box;
        params.dim = opts.dim;
        params.seed = opts.scenario_seed;
        return builtin(opts.ref, params);
    }
    return load_scenario_file(opts.ref, defaults);
}

Scenario with_phi(const Scenario &s, double phi) {
    return Scenario(s.rho, s.projector, s.observable, phi, s.label);
}

void emit(const RunReport &report, const OutputOptions &out) {
    const std::string payload =
        out.csv ? report_to_csv(report) : report_to_json(report);
    if (out.path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream file(out.path, std::ios::binary);
        if (!file) {
            throw BadParameter("cannot write output file '" + out.path + "'");
        }
        file << payload;
    }
    std::cerr << human_summary(report);
}

int run_command(const ScenarioOptions &scenario_opts,
                const OutputOptions &output_opts,
                std::optional<std::uint64_t> shots_flag,
                std::optional<std::uint64_t> seed_flag,
                std::optional<double> phi_flag, std::uint32_t partitions,
                bool sampled_mode) {
    const auto start = std::chrono::steady_clock::now();
    RunDefaults defaults;
    Scenario scenario = resolve_scenario(scenario_opts, &defaults);
    if (phi_flag) {
        scenario = with_phi(scenario, *phi_flag);
    }

    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;
    if (sampled_mode) {
        if (shots_flag) {
            shots = *shots_flag;
        } else if (defaults.shots) {
            shots = *defaults.shots;
        } else {
            throw BadParameter("run requires --shots (or a shots field in "
                               "the scenario file)");
        }
        if (seed_flag) {
            seed = *seed_flag;
        } else if (defaults.seed) {
            seed = *defaults.seed;
        }
    }

    RunReport report = build_run_report(scenario, shots, seed, partitions);
    report.timing_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    emit(report, output_opts);
    return 0;
}

int validate_command(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cout << "parse: cannot read scenario file '" << path << "'\n";
        return 2;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const auto violations = scenario_violations(buffer.str());
    if (violations.empty()) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto &line : violations) {
        std::cout << line << "\n";
    }
    return 2;
}

int list_command() {
    std::cout << "three_box           three-state preparation (1,1,1)/sqrt(3) "
                 "selected onto (1,1,-1)/sqrt(3); readout |box><box| "
                 "(--box, default 3)\n";
    std::cout << "amplified_spin      qubit prepared in |0>, selected onto "
                 "(cos a, sin a); weak value tan(a) (--alpha, default 1.4)\n";
    std::cout << "imaginary_qubit     qubit prepared in |0>, selected onto "
                 "(1, i)/sqrt(2); weak value -i\n";
    std::cout << "commuting_control   diagonal rho, P, B in d = 3; every "
                 "weak value classical\n";
    std::cout << "random              reproducible random scenario "
                 "(--dim, --scenario-seed)\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"weaklab: exact and sampled weak value reconstruction"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("weaklab ") + kToolVersion);

    ScenarioOptions exact_scenario;
    OutputOptions exact_output;
    double exact_phi = 0.0;
    CLI::App *exact_cmd = app.add_subcommand(
        "exact", "analyze a scenario with exact linear algebra");
    add_scenario_options(exact_cmd, exact_scenario);
    add_output_options(exact_cmd, exact_output);
    CLI::Option *exact_phi_opt = exact_cmd->add_option(
        "--phi", exact_phi, "override the scenario's rotation angle");

    ScenarioOptions run_scenario;
    OutputOptions run_output;
    std::uint64_t run_shots = 0;
    std::uint64_t run_seed = 0;
    double run_phi = 0.0;
    std::uint32_t run_partitions = 1;
    CLI::App *run_cmd = app.add_subcommand(
        "run", "sample the three measurement arms and reconstruct");
    add_scenario_options(run_cmd, run_scenario);
    add_output_options(run_cmd, run_output);
    CLI::Option *run_shots_opt =
        run_cmd->add_option("--shots", run_shots, "shots per arm (>= 100)");
    CLI::Option *run_seed_opt =
        run_cmd->add_option("--seed", run_seed, "master seed (default 0)");
    CLI::Option *run_phi_opt = run_cmd->add_option(
        "--phi", run_phi, "override the scenario's rotation angle");
    run_cmd->add_option("--partitions", run_partitions,
                        "independent substream count (default 1)");

    std::string validate_path;
    CLI::App *validate_cmd = app.add_subcommand(
        "validate", "check a scenario file against every invariant");
    validate_cmd->add_option("path", validate_path, "scenario file path")
        ->required();

    CLI::App *list_cmd =
        app.add_subcommand("list", "list the builtin scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (exact_cmd->parsed()) {
            std::optional<double> phi;
            if (exact_phi_opt->count() > 0) {
                phi = exact_phi;
            }
            return run_command(exact_scenario, exact_output, std::nullopt,
                               std::nullopt, phi, 1, false);
        }
        if (run_cmd->parsed()) {
            std::optional<std::uint64_t> shots;
            if (run_shots_opt->count() > 0) {
                shots = run_shots;
            }
            std::optional<std::uint64_t> seed;
            if (run_seed_opt->count() > 0) {
                seed = run_seed;
            }
            std::optional<double> phi;
            if (run_phi_opt->count() > 0) {
                phi = run_phi;
            }
            return run_command(run_scenario, run_output, shots, seed, phi,
                               run_partitions, true);
        }
        if (validate_cmd->parsed()) {
            return validate_command(validate_path);
        }
        if (list_cmd->parsed()) {
            return list_command();
        }
    } catch (const NullOutcome &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const EmptySelection &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
