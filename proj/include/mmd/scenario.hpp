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
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmd/group.hpp"
#include "mmd/operator.hpp"

namespace mmd {

/// Scenario-file violation, carrying the JSON-pointer path of the offending
/// field. Surfaced by the CLI with exit code 2.
struct ScenarioError : std::runtime_error {
    ScenarioError(const std::string& message, std::string pointer_path)
        : std::runtime_error(message + " (at " + pointer_path + ")"), pointer(std::move(pointer_path)) {}

    std::string pointer;
};

// Complex numbers are serialized as [re, im] arrays everywhere; matrices as
// row-major arrays of rows of [re, im] pairs.
cplx parse_complex(const nlohmann::json& j, const std::string& ptr);
Vec parse_vector(const nlohmann::json& j, const std::string& ptr);
Mat parse_matrix(const nlohmann::json& j, const std::string& ptr);

nlohmann::json json_complex(const cplx& c);
nlohmann::json json_vector(const Vec& v);
nlohmann::json json_matrix(const Mat& m);

FiniteAbelianGroup parse_group(const nlohmann::json& scenario);

/// "standard" / "regular" expand to the regular representation (the standard
/// coupling U_u = u); an object {"generators": [...]} supplies one unitary
/// per cyclic factor.
UnitaryRep parse_rep(const nlohmann::json& scenario, const FiniteAbelianGroup& g);

/// {"vector": [...]} (normalized check) or {"matrix": ...} (density check).
DensityState parse_state_density(const nlohmann::json& scenario, const std::string& key, Index dim);
Vec parse_state_vector(const nlohmann::json& scenario, const std::string& key, Index dim);

/// Outcome sets as lists of character tuples, resolved to character indices.
std::vector<std::vector<int>> parse_outcome_sets(const nlohmann::json& scenario, const FiniteAbelianGroup& g);

std::vector<std::vector<int>> parse_subgroup_generators(const nlohmann::json& scenario, const FiniteAbelianGroup& g);

std::vector<Mat> parse_algebra_generators(const nlohmann::json& scenario);

std::uint64_t parse_seed(const nlohmann::json& scenario);

/// Accepts a missing field or the current version (1); rejects others.
void validate_schema_version(const nlohmann::json& scenario);

/// "0,1" style label for the element/character with the given index.
std::string tuple_label(const FiniteAbelianGroup& g, int index);

}  // namespace mmd
