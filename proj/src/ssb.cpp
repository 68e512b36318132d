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

#include "mmd/ssb.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mmd {

namespace {

std::vector<int> close_under_law(const FiniteAbelianGroup& g, std::vector<int> seed) {
    std::set<int> members{g.identity()};
    for (int s : seed) members.insert(s);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> current(members.begin(), members.end());
        for (int a : current)
            for (int b : current)
                if (members.insert(g.op(a, b)).second) grew = true;
        for (int a : current)
            if (members.insert(g.inverse(a)).second) grew = true;
    }
    return {members.begin(), members.end()};
}

}  // namespace

SubgroupSpec make_subgroup(const FiniteAbelianGroup& g, const std::vector<std::vector<int>>& generator_tuples) {
    std::vector<int> idx;
    for (const auto& t : generator_tuples) idx.push_back(g.index_of(t));  // throws if outside G
    return make_subgroup_from_indices(g, idx);
}

SubgroupSpec make_subgroup_from_indices(const FiniteAbelianGroup& g, const std::vector<int>& generator_indices) {
    for (int i : generator_indices)
        if (i < 0 || i >= g.size()) throw std::invalid_argument("make_subgroup: generator outside the group");
    SubgroupSpec h{g, close_under_law(g, generator_indices), {}};
    std::set<int> seen;
    for (int a = 0; a < g.size(); ++a) {
        if (seen.count(a)) continue;
        h.coset_reps.push_back(a);  // smallest unseen index is the canonical representative
        for (int e : h.elements) seen.insert(g.op(a, e));
    }
    return h;
}

std::vector<std::vector<int>> quotient(const SubgroupSpec& h) {
    std::vector<std::vector<int>> cosets;
    for (int rep : h.coset_reps) {
        std::vector<int> c;
        for (int e : h.elements) c.push_back(h.group.op(rep, e));
        std::sort(c.begin(), c.end());
        cosets.push_back(std::move(c));
    }
    return cosets;
}

std::vector<int> annihilator(const SubgroupSpec& h) {
    DualGroup dual(h.group);
    std::vector<int> out;
    for (int chi = 0; chi < dual.size(); ++chi) {
        bool trivial = true;
        for (int e : h.elements)
            if (dual.pair_exponent(chi, e) != 0) {
                trivial = false;
                break;
            }
        if (trivial) out.push_back(chi);
    }
    return out;
}

RestrictionReport restriction_map_report(const SubgroupSpec& h) {
    DualGroup dual(h.group);
    std::set<std::vector<long>> image;
    std::vector<int> kernel;
    for (int chi = 0; chi < dual.size(); ++chi) {
        std::vector<long> restriction;
        restriction.reserve(h.elements.size());
        bool trivial = true;
        for (int e : h.elements) {
            long ex = dual.pair_exponent(chi, e);
            restriction.push_back(ex);
            if (ex != 0) trivial = false;
        }
        image.insert(std::move(restriction));
        if (trivial) kernel.push_back(chi);
    }
    RestrictionReport report;
    report.image_size = static_cast<int>(image.size());
    report.surjective = report.image_size == h.subgroup_order();
    report.kernel_is_annihilator = kernel == annihilator(h);
    return report;
}

SectorBundle sector_bundle(const SubgroupSpec& h) {
    DualGroup dual(h.group);
    // group the characters of G by their restriction to H; the smallest
    // index in each class labels the corresponding character of H
    std::map<std::vector<long>, int> classes;
    for (int chi = 0; chi < dual.size(); ++chi) {
        std::vector<long> restriction;
        for (int e : h.elements) restriction.push_back(dual.pair_exponent(chi, e));
        auto it = classes.find(restriction);
        if (it == classes.end()) classes.emplace(std::move(restriction), chi);
    }
    SectorBundle bundle;
    bundle.base_cosets = h.coset_reps;
    for (const auto& [r, chi] : classes) bundle.fiber_labels.push_back(chi);
    std::sort(bundle.fiber_labels.begin(), bundle.fiber_labels.end());
    for (int coset : bundle.base_cosets)
        for (int fiber : bundle.fiber_labels) bundle.sectors.emplace_back(coset, fiber);
    return bundle;
}

std::vector<std::vector<int>> all_subgroups(const FiniteAbelianGroup& g) {
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> queue;
    std::vector<int> trivial{g.identity()};
    found.insert(trivial);
    queue.push_back(trivial);
    while (!queue.empty()) {
        std::vector<int> current = queue.back();
        queue.pop_back();
        for (int x = 0; x < g.size(); ++x) {
            std::vector<int> seed = current;
            seed.push_back(x);
            std::vector<int> closed = close_under_law(g, seed);
            if (found.insert(closed).second) queue.push_back(closed);
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace mmd
