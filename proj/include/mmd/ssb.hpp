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

#include <vector>

#include "mmd/group.hpp"

namespace mmd {

/// Subgroup H of a finite abelian ambient group G, with its coset
/// decomposition. Coset representatives are canonical: the
/// lexicographically least member, which is the smallest element index.
struct SubgroupSpec {
    FiniteAbelianGroup group;
    std::vector<int> elements;    // sorted element indices of H
    std::vector<int> coset_reps;  // sorted canonical representatives

    int subgroup_order() const { return static_cast<int>(elements.size()); }
    int coset_count() const { return static_cast<int>(coset_reps.size()); }
};

/// Close the generators (element tuples) under the group law. Throws
/// std::invalid_argument on a tuple outside G.
SubgroupSpec make_subgroup(const FiniteAbelianGroup& g, const std::vector<std::vector<int>>& generator_tuples);
SubgroupSpec make_subgroup_from_indices(const FiniteAbelianGroup& g, const std::vector<int>& generator_indices);

/// Cosets as sorted element lists, ordered by canonical representative.
std::vector<std::vector<int>> quotient(const SubgroupSpec& h);

/// H-perp = { chi : chi restricted to H is trivial }, exact integer test.
std::vector<int> annihilator(const SubgroupSpec& h);

struct RestrictionReport {
    int image_size = 0;           // number of distinct restrictions to H
    bool surjective = false;      // image_size == |H|
    bool kernel_is_annihilator = false;
};

/// The restriction map from characters of G to characters of H.
RestrictionReport restriction_map_report(const SubgroupSpec& h);

/// Sectors under breakdown to H: base = cosets (degenerate vacua), fiber =
/// characters of H (labelled by canonical lifts to G), one sector per pair.
struct SectorBundle {
    std::vector<int> base_cosets;          // canonical coset representatives
    std::vector<int> fiber_labels;         // smallest G-character per restriction class
    std::vector<std::pair<int, int>> sectors;  // (coset rep, fiber label)

    int base_size() const { return static_cast<int>(base_cosets.size()); }
    int fiber_size() const { return static_cast<int>(fiber_labels.size()); }
    int total() const { return static_cast<int>(sectors.size()); }
};

SectorBundle sector_bundle(const SubgroupSpec& h);

/// Every subgroup of G, as sorted element-index lists (includes {e} and G).
std::vector<std::vector<int>> all_subgroups(const FiniteAbelianGroup& g);

}  // namespace mmd
