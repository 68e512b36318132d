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

#include "mmd/scenario.hpp"

#include <algorithm>
#include <sstream>

#include "mmd/kt.hpp"

namespace mmd {

namespace {

const nlohmann::json& require_field(const nlohmann::json& j, const std::string& key, const std::string& ptr) {
    if (!j.is_object() || !j.contains(key)) throw ScenarioError("missing required field", ptr + "/" + key);
    return j.at(key);
}

}  // namespace

cplx parse_complex(const nlohmann::json& j, const std::string& ptr) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ScenarioError("complex number must be a [re, im] array", ptr);
    return {j[0].get<double>(), j[1].get<double>()};
}

Vec parse_vector(const nlohmann::json& j, const std::string& ptr) {
    if (!j.is_array() || j.empty()) throw ScenarioError("vector must be a non-empty array", ptr);
    Vec v(static_cast<Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = parse_complex(j[i], ptr + "/" + std::to_string(i));
    return v;
}

Mat parse_matrix(const nlohmann::json& j, const std::string& ptr) {
    if (!j.is_array() || j.empty()) throw ScenarioError("matrix must be a non-empty array of rows", ptr);
    const size_t rows = j.size();
    size_t cols = 0;
    Mat m;
    for (size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        std::string rptr = ptr + "/" + std::to_string(r);
        if (!row.is_array() || row.empty()) throw ScenarioError("matrix row must be a non-empty array", rptr);
        if (r == 0) {
            cols = row.size();
            m = Mat(static_cast<Index>(rows), static_cast<Index>(cols));
        }
        if (row.size() != cols) throw ScenarioError("matrix rows have inconsistent lengths", rptr);
        for (size_t c = 0; c < cols; ++c)
            m(static_cast<Index>(r), static_cast<Index>(c)) = parse_complex(row[c], rptr + "/" + std::to_string(c));
    }
    return m;
}

nlohmann::json json_complex(const cplx& c) {
    return nlohmann::json::array({c.real(), c.imag()});
}

nlohmann::json json_vector(const Vec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(json_complex(v(i)));
    return out;
}

nlohmann::json json_matrix(const Mat& m) {
    nlohmann::json out = nlohmann::json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(json_complex(m(r, c)));
        out.push_back(row);
    }
    return out;
}

FiniteAbelianGroup parse_group(const nlohmann::json& scenario) {
    const auto& j = require_field(scenario, "group_orders", "");
    if (!j.is_array() || j.empty()) throw ScenarioError("group_orders must be a non-empty integer array", "/group_orders");
    std::vector<int> orders;
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer() || j[i].get<int>() < 1)
            throw ScenarioError("cyclic order must be a positive integer", "/group_orders/" + std::to_string(i));
        orders.push_back(j[i].get<int>());
    }
    try {
        return FiniteAbelianGroup(orders);
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(e.what(), "/group_orders");
    }
}

UnitaryRep parse_rep(const nlohmann::json& scenario, const FiniteAbelianGroup& g) {
    if (!scenario.contains("rep")) return regular_rep(g);
    const auto& j = scenario.at("rep");
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "standard" || s == "regular") return regular_rep(g);
        throw ScenarioError("rep string must be \"standard\" or \"regular\"", "/rep");
    }
    if (!j.is_object() || !j.contains("generators")) throw ScenarioError("rep must be a string or {\"generators\": [...]}", "/rep");
    const auto& gens = j.at("generators");
    if (!gens.is_array() || static_cast<int>(gens.size()) != g.rank())
        throw ScenarioError("rep needs one generator matrix per cyclic factor", "/rep/generators");
    std::vector<Mat> images;
    for (size_t i = 0; i < gens.size(); ++i) {
        std::string ptr = "/rep/generators/" + std::to_string(i);
        const auto& entry = gens[i];
        Mat m = entry.is_object() ? parse_matrix(require_field(entry, "matrix", ptr), ptr + "/matrix") : parse_matrix(entry, ptr);
        images.push_back(std::move(m));
    }
    try {
        return UnitaryRep(g, images);
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(e.what(), "/rep/generators");
    }
}

Vec parse_state_vector(const nlohmann::json& scenario, const std::string& key, Index dim) {
    const auto& j = require_field(scenario, key, "");
    std::string ptr = "/" + key;
    const nlohmann::json& body = j.is_object() ? require_field(j, "vector", ptr) : j;
    if (j.is_object()) ptr += "/vector";
    Vec v = parse_vector(body, ptr);
    if (v.size() != dim) throw ScenarioError("state dimension does not match the representation", ptr);
    if (std::abs(v.norm() - 1.0) > 1e-8) throw ScenarioError("state vector is not normalized", ptr);
    return v;
}

DensityState parse_state_density(const nlohmann::json& scenario, const std::string& key, Index dim) {
    const auto& j = require_field(scenario, key, "");
    std::string ptr = "/" + key;
    if (j.is_object() && j.contains("matrix")) {
        Mat rho = parse_matrix(j.at("matrix"), ptr + "/matrix");
        if (rho.rows() != dim) throw ScenarioError("state dimension does not match the representation", ptr + "/matrix");
        DensityState out{rho, {dim}};
        try {
            out.check(1e-8);
        } catch (const std::invalid_argument& e) {
            throw ScenarioError(e.what(), ptr + "/matrix");
        }
        return out;
    }
    Vec v = parse_state_vector(scenario, key, dim);
    v /= v.norm();
    return {v * v.adjoint(), {dim}};
}

std::vector<std::vector<int>> parse_outcome_sets(const nlohmann::json& scenario, const FiniteAbelianGroup& g) {
    std::vector<std::vector<int>> sets;
    if (!scenario.contains("outcome_sets")) return sets;
    const auto& j = scenario.at("outcome_sets");
    if (!j.is_array()) throw ScenarioError("outcome_sets must be an array of character-tuple lists", "/outcome_sets");
    for (size_t s = 0; s < j.size(); ++s) {
        std::string sptr = "/outcome_sets/" + std::to_string(s);
        if (!j[s].is_array() || j[s].empty()) throw ScenarioError("outcome set must be a non-empty array", sptr);
        std::vector<int> set;
        for (size_t k = 0; k < j[s].size(); ++k) {
            std::string kptr = sptr + "/" + std::to_string(k);
            const auto& t = j[s][k];
            if (!t.is_array()) throw ScenarioError("character must be a tuple", kptr);
            std::vector<int> tuple;
            for (const auto& e : t) {
                if (!e.is_number_integer()) throw ScenarioError("character tuple entries must be integers", kptr);
                tuple.push_back(e.get<int>());
            }
            try {
                set.push_back(g.index_of(tuple));
            } catch (const std::invalid_argument& e) {
                throw ScenarioError(e.what(), kptr);
            }
        }
        std::vector<int> sorted = set;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ScenarioError("outcome set contains a duplicate character", sptr);
        sets.push_back(std::move(set));
    }
    return sets;
}

std::vector<std::vector<int>> parse_subgroup_generators(const nlohmann::json& scenario, const FiniteAbelianGroup& g) {
    const auto& j = require_field(scenario, "subgroup_generators", "");
    if (!j.is_array()) throw ScenarioError("subgroup_generators must be an array of element tuples", "/subgroup_generators");
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < j.size(); ++i) {
        std::string ptr = "/subgroup_generators/" + std::to_string(i);
        if (!j[i].is_array()) throw ScenarioError("subgroup generator must be an element tuple", ptr);
        std::vector<int> tuple;
        for (const auto& e : j[i]) {
            if (!e.is_number_integer()) throw ScenarioError("element tuple entries must be integers", ptr);
            tuple.push_back(e.get<int>());
        }
        if (static_cast<int>(tuple.size()) != g.rank()) throw ScenarioError("element tuple has wrong rank", ptr);
        for (size_t k = 0; k < tuple.size(); ++k)
            if (tuple[k] < 0 || tuple[k] >= g.orders()[k]) throw ScenarioError("element tuple entry out of range", ptr);
        out.push_back(std::move(tuple));
    }
    return out;
}

std::vector<Mat> parse_algebra_generators(const nlohmann::json& scenario) {
    const auto& j = require_field(scenario, "algebra_generators", "");
    if (!j.is_array() || j.empty()) throw ScenarioError("algebra_generators must be a non-empty array of matrices", "/algebra_generators");
    std::vector<Mat> out;
    for (size_t i = 0; i < j.size(); ++i) {
        std::string ptr = "/algebra_generators/" + std::to_string(i);
        const auto& entry = j[i];
        Mat m = entry.is_object() ? parse_matrix(require_field(entry, "matrix", ptr), ptr + "/matrix") : parse_matrix(entry, ptr);
        if (m.rows() != m.cols()) throw ScenarioError("algebra generator must be square", ptr);
        if (!out.empty() && m.rows() != out.front().rows()) throw ScenarioError("algebra generators must share one ambient dimension", ptr);
        out.push_back(std::move(m));
    }
    return out;
}

void validate_schema_version(const nlohmann::json& scenario) {
    if (!scenario.contains("schema_version")) return;  // defaults to the current version
    const auto& v = scenario.at("schema_version");
    if (!v.is_number_integer() || v.get<int>() != 1)
        throw ScenarioError("unsupported schema_version (this build reads version 1)", "/schema_version");
}

std::uint64_t parse_seed(const nlohmann::json& scenario) {
    if (!scenario.contains("seed")) return 0;
    const auto& j = scenario.at("seed");
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ScenarioError("seed must be a non-negative integer", "/seed");
    return j.get<std::uint64_t>();
}

std::string tuple_label(const FiniteAbelianGroup& g, int index) {
    auto t = g.tuple_of(index);
    std::ostringstream os;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << t[i];
    }
    return os.str();
}

}  // namespace mmd
