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

// End-to-end checks of the installed command-line binary. Each invocation
// shells out to the real executable, so these tests cover argument parsing,
// exit codes, and the exact bytes of the emitted reports.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "weaklab/scenarios.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using weaklab::Scenario;

namespace {

struct CommandResult {
    int exit_code;
    std::string out;
    std::string err;
};

const fs::path &work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("weaklab_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

CommandResult run_cli(const std::string &args) {
    static int counter = 0;
    const fs::path out_path =
        work_dir() / ("stdout_" + std::to_string(counter) + ".txt");
    const fs::path err_path =
        work_dir() / ("stderr_" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string command = std::string(WEAKLAB_CLI_PATH) + " " + args +
                                " > " + out_path.string() + " 2> " +
                                err_path.string();
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return CommandResult{WEXITSTATUS(status), read_file(out_path),
                         read_file(err_path)};
}

fs::path write_scenario(const std::string &name, const std::string &content) {
    const fs::path path = work_dir() / name;
    write_file(path, content);
    return path;
}

}  // namespace

TEST_CASE("version and help") {
    const auto version = run_cli("--version");
    CHECK(version.exit_code == 0);
    CHECK(version.out == "weaklab 1.0.0\n");

    const auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("exact") != std::string::npos);
    CHECK(help.out.find("run") != std::string::npos);
    CHECK(help.out.find("validate") != std::string::npos);

    const auto nothing = run_cli("");
    CHECK(nothing.exit_code == 2);

    const auto unknown = run_cli("frobnicate");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("exact subcommand") {
    SUBCASE("builtin scenario report") {
        const auto result = run_cli("exact three_box");
        CHECK(result.exit_code == 0);
        const json report = json::parse(result.out);
        CHECK(report["tool"] == "weaklab");
        CHECK(report["label"] == "three_box");
        CHECK(report["inputs"]["dim"] == 3);
        CHECK(report["exact"]["weak_value"]["re"].get<double>() ==
              doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(report["exact"]["nonclassical_re"] == true);
        CHECK(report["exact"]["nonclassical_im"] == false);
        CHECK_FALSE(report.contains("sampled"));
        // The human-readable summary goes to stderr, not into the payload.
        CHECK(result.err.find("weak value") != std::string::npos);
    }
    SUBCASE("matches the golden report byte for byte") {
        const auto result = run_cli("exact three_box");
        CHECK(result.exit_code == 0);
        const std::string golden = read_file(
            fs::path(WEAKLAB_GOLDEN_DIR) / "exact_three_box.json");
        CHECK(result.out == golden);
    }
    SUBCASE("classical control stays inside the range") {
        const auto result = run_cli("exact commuting_control");
        CHECK(result.exit_code == 0);
        const json report = json::parse(result.out);
        CHECK(report["exact"]["nonclassical_re"] == false);
        CHECK(report["exact"]["nonclassical_im"] == false);
        CHECK(report["exact"]["weak_value"]["re"].get<double>() ==
              doctest::Approx(0.875).epsilon(1e-12));
    }
    SUBCASE("scenario parameters are forwarded") {
        const auto result = run_cli("exact amplified_spin --alpha 0.5");
        CHECK(result.exit_code == 0);
        const json report = json::parse(result.out);
        CHECK(report["exact"]["weak_value"]["re"].get<double>() ==
              doctest::Approx(std::tan(0.5)).epsilon(1e-10));
    }
    SUBCASE("output file instead of stdout") {
        const fs::path out = work_dir() / "report.json";
        const auto result =
            run_cli("exact three_box --output " + out.string());
        CHECK(result.exit_code == 0);
        CHECK(result.out.empty());
        const json report = json::parse(read_file(out));
        CHECK(report["label"] == "three_box");
    }
    SUBCASE("missing scenario file") {
        const auto result = run_cli("exact /nonexistent/scenario.json");
        CHECK(result.exit_code == 2);
    }
    SUBCASE("unknown builtin name") {
        const auto result = run_cli("exact not_a_scenario");
        CHECK(result.exit_code == 2);
    }
    SUBCASE("orthogonal scenario file exits with the null-outcome code") {
        const fs::path path = write_scenario("orthogonal.json", R"({
            "dim": 2,
            "rho": [[1.0, 0.0], [0.0, 0.0]],
            "projector": [[0.0, 0.0], [1.0, 0.0]],
            "observable": [[[1.0, 0.0], [0.0, 0.0]],
                           [[0.0, 0.0], [1.0, 0.0]]]
        })");
        const auto result = run_cli("exact " + path.string());
        CHECK(result.exit_code == 3);
    }
}

TEST_CASE("run subcommand") {
    SUBCASE("sampled report structure and accuracy") {
        const auto result = run_cli("run three_box --shots 20000 --seed 7");
        CHECK(result.exit_code == 0);
        const json report = json::parse(result.out);
        REQUIRE(report.contains("sampled"));
        const auto &sampled = report["sampled"];
        CHECK(sampled["shots_per_arm"] == 20000);
        CHECK(sampled["seed"] == 7);
        CHECK(sampled["partitions"] == 1);
        REQUIRE(sampled["arms"].size() == 4);
        CHECK(sampled["arms"][0]["arm"] == "baseline");
        CHECK(sampled["arms"][1]["arm"] == "project_then_measure");
        CHECK(sampled["arms"][2]["arm"] == "project_then_measure_yes");
        CHECK(sampled["arms"][3]["arm"] == "rotate_then_measure");

        const double re_hat = sampled["re_hat"].get<double>();
        const double re_se = sampled["re_se"].get<double>();
        const double exact_re =
            report["exact"]["re_reconstructed"].get<double>();
        CHECK(std::abs(re_hat - exact_re) <= 5.0 * re_se);
    }
    SUBCASE("identical invocations emit identical bytes") {
        const auto first = run_cli("run three_box --shots 5000 --seed 11");
        const auto second = run_cli("run three_box --shots 5000 --seed 11");
        CHECK(first.exit_code == 0);
        CHECK(second.exit_code == 0);
        CHECK(first.out == second.out);
    }
    SUBCASE("imaginary part lands on the exact value") {
        const auto result =
            run_cli("run imaginary_qubit --shots 100000 --seed 7");
        CHECK(result.exit_code == 0);
        const json report = json::parse(result.out);
        const double im_hat = report["sampled"]["im_hat"].get<double>();
        const double im_se = report["sampled"]["im_se"].get<double>();
        CHECK(std::abs(im_hat - (-1.0)) <= 5.0 * im_se);
    }
    SUBCASE("csv payload") {
        const auto result =
            run_cli("run three_box --shots 2000 --seed 3 --csv");
        CHECK(result.exit_code == 0);
        std::istringstream lines(result.out);
        std::string line;
        std::vector<std::string> rows;
        while (std::getline(lines, line)) {
            rows.push_back(line);
        }
        REQUIRE(rows.size() == 7);
        CHECK(rows[0] == "arm,shots,mean,std_error");
        CHECK(rows[1].rfind("baseline,2000,", 0) == 0);
        CHECK(rows[2].rfind("project_then_measure,2000,", 0) == 0);
        CHECK(rows[3].rfind("project_then_measure_yes,", 0) == 0);
        CHECK(rows[4].rfind("rotate_then_measure,2000,", 0) == 0);
        CHECK(rows[5].rfind("reconstructed_re,6000,", 0) == 0);
        CHECK(rows[6].rfind("reconstructed_im,6000,", 0) == 0);
    }
    SUBCASE("shots from the scenario file") {
        const Scenario sc = weaklab::builtin("three_box", {});
        std::string text = weaklab::serialize_scenario(sc);
        json doc = json::parse(text);
        doc["shots"] = 400;
        doc["seed"] = 5;
        const fs::path path =
            write_scenario("with_defaults.json", doc.dump(2) + "\n");
        const auto result = run_cli("run " + path.string());
        CHECK(result.exit_code == 0);
        const json report = json::parse(result.out);
        CHECK(report["sampled"]["shots_per_arm"] == 400);
        CHECK(report["sampled"]["seed"] == 5);

        // The flag overrides the file default.
        const auto overridden =
            run_cli("run " + path.string() + " --shots 600");
        const json report2 = json::parse(overridden.out);
        CHECK(report2["sampled"]["shots_per_arm"] == 600);
    }
    SUBCASE("missing shots is a parameter error") {
        const auto result = run_cli("run three_box --seed 1");
        CHECK(result.exit_code == 2);
    }
    SUBCASE("too few shots is a parameter error") {
        const auto result = run_cli("run three_box --shots 50 --seed 1");
        CHECK(result.exit_code == 2);
    }
    SUBCASE("starved selection exits with the empty-selection code") {
        const auto result = run_cli(
            "run amplified_spin --alpha 1.5707 --shots 100 --seed 7");
        CHECK(result.exit_code == 4);
    }
    SUBCASE("degenerate rotation angle is a parameter error") {
        const auto result =
            run_cli("run three_box --shots 200 --seed 1 --phi 0");
        CHECK(result.exit_code == 2);
    }
}

TEST_CASE("validate subcommand") {
    SUBCASE("valid builtin documents pass") {
        for (const auto &name : weaklab::builtin_names()) {
            const Scenario sc = weaklab::builtin(name, {});
            const fs::path path = write_scenario(
                "valid_" + name + ".json", weaklab::serialize_scenario(sc));
            const auto result = run_cli("validate " + path.string());
            CHECK(result.exit_code == 0);
            CHECK(result.out == "ok\n");
        }
    }
    SUBCASE("broken invariants are named") {
        const fs::path path = write_scenario("bad_trace.json", R"({
            "dim": 2,
            "rho": [[[0.5, 0.0], [0.0, 0.0]],
                    [[0.0, 0.0], [0.4, 0.0]]],
            "projector": [[1.0, 0.0], [0.0, 0.0]],
            "observable": [[[1.0, 0.0], [0.0, 0.0]],
                           [[0.0, 0.0], [1.0, 0.0]]]
        })");
        const auto result = run_cli("validate " + path.string());
        CHECK(result.exit_code == 2);
        CHECK(result.out.find("unit trace") != std::string::npos);
    }
    SUBCASE("orthogonal preparation and selection are cross-checked") {
        const fs::path path = write_scenario("null_outcome.json", R"({
            "dim": 2,
            "rho": [[1.0, 0.0], [0.0, 0.0]],
            "projector": [[0.0, 0.0], [1.0, 0.0]],
            "observable": [[[1.0, 0.0], [0.0, 0.0]],
                           [[0.0, 0.0], [1.0, 0.0]]]
        })");
        const auto result = run_cli("validate " + path.string());
        CHECK(result.exit_code == 2);
        CHECK(result.out.find("selection probability") != std::string::npos);
    }
    SUBCASE("unreadable file reports a parse failure") {
        const auto result = run_cli("validate /nonexistent/scenario.json");
        CHECK(result.exit_code == 2);
        CHECK(result.out.rfind("parse:", 0) == 0);
    }
}

TEST_CASE("list subcommand") {
    const auto first = run_cli("list");
    CHECK(first.exit_code == 0);
    for (const auto &name : weaklab::builtin_names()) {
        CHECK(first.out.find(name) != std::string::npos);
    }
    const auto second = run_cli("list");
    CHECK(first.out == second.out);
}
