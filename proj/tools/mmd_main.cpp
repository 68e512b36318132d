// Copyright 2026 The mmd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmd/runner.hpp"
#include "mmd/scenario.hpp"

namespace {

struct CliArgs {
    std::string scenario_path;
    std::string out_path;
    std::string format = "json";
    std::uint64_t seed = 0;
    bool seed_given = false;
    long max_dim = 16384;
};

int run(const std::string& command, const CliArgs& args) {
    nlohmann::json scenario = nlohmann::json::object();
    if (!args.scenario_path.empty()) {
        std::ifstream in(args.scenario_path);
        if (!in) {
            std::cerr << "error: cannot open scenario file " << args.scenario_path << "\n";
            return 2;
        }
        try {
            in >> scenario;
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "error: scenario is not valid JSON: " << e.what() << "\n";
            return 2;
        }
    } else if (command != "suite") {
        std::cerr << "error: command \"" << command << "\" requires --scenario\n";
        return 2;
    }

    mmd::RunOptions options;
    options.has_seed = args.seed_given;
    options.seed = args.seed;
    options.max_dim = args.max_dim;
    options.format = args.format;

    auto start = std::chrono::steady_clock::now();
    mmd::RunResult result;
    try {
        result = mmd::run_command(command, scenario, options);
    } catch (const mmd::ScenarioError& e) {
        nlohmann::json err{{"error", e.what()}, {"pointer", e.pointer}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        nlohmann::json err{{"error", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 1;
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string payload = result.report.dump(2) + "\n";
    if (args.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(args.out_path);
        if (!out) {
            std::cerr << "error: cannot write " << args.out_path << "\n";
            return 2;
        }
        out << payload;
        if (args.format == "csv" && !result.csv.empty()) {
            std::ofstream csv(args.out_path + ".csv");
            csv << result.csv;
        }
    }
    if (args.out_path.empty() && args.format == "csv" && !result.csv.empty()) std::cout << result.csv;

    // timing stays on stderr so that report files are bit-identical across runs
    std::cerr << command << ": " << (result.exit_code == 0 ? "pass" : "fail") << " in " << elapsed << " s\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-dimensional simulator for operator-algebraic measurement: couplings, instruments, amplification cascades, crossed products, and symmetry sectors over finite abelian groups"};
    app.require_subcommand(1);

    CliArgs args;
    const std::vector<std::string> commands{"verify", "measure", "amplify", "sectors", "crossed", "ssb", "suite"};
    const std::vector<std::string> descriptions{
        "run the coupling-relation suite for a group and representation",
        "evaluate outcome probabilities and posterior states",
        "run the pointer amplification cascade",
        "decompose a generated matrix *-algebra into sectors",
        "build both crossed-product pictures and verify their equivalence",
        "subgroup, annihilator, and sector-bundle bookkeeping",
        "run the built-in scenario matrix over all groups of order <= 8",
    };

    for (size_t i = 0; i < commands.size(); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i], descriptions[i]);
        sub->add_option("--scenario", args.scenario_path, "scenario JSON file");
        sub->add_option("--out", args.out_path, "report output path (default: stdout)");
        sub->add_option("--format", args.format, "json|csv (csv adds a table next to the report)")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", args.seed, "seed override for all randomized checks")
            ->trigger_on_parse()
            ->each([&args](const std::string&) { args.seed_given = true; });
        sub->add_option("--max-dim", args.max_dim, "cap on dense cascade dimensions")
            ->envname("MMD_MAX_DIM")
            ->check(CLI::PositiveNumber);
    }

    CLI11_PARSE(app, argc, argv);

    for (const auto& cmd : commands)
        if (app.got_subcommand(cmd)) return run(cmd, args);
    return 2;
}
