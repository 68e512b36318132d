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

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "mmd/linalg.hpp"

namespace mmd {

struct RunOptions {
    bool has_seed = false;       // command-line seed overrides the scenario's
    std::uint64_t seed = 0;
    Index max_dim = 16384;       // cap on dense cascade dimensions
    std::string format = "json"; // "json" | "csv"
};

struct RunResult {
    nlohmann::json report;
    std::string csv;  // filled for tabular commands when format == "csv"
    int exit_code = 0;
};

/// Commands: verify, measure, amplify, sectors, crossed, ssb, suite.
/// Scenario problems throw ScenarioError (exit 2 at the CLI); failing
/// checks yield exit_code 1. Reports are bit-identical for identical
/// (scenario, seed) pairs.
RunResult run_command(const std::string& command, const nlohmann::json& scenario, const RunOptions& options);

}  // namespace mmd
