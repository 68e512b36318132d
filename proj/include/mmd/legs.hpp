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

#include "mmd/linalg.hpp"

namespace mmd {

// Addressing for labelled tensor legs over a row-major layout (leg 0 is the
// slowest index, matching kron()). Multi-leg identities go through this one
// primitive instead of stride arithmetic at call sites.
class LegTable {
  public:
    LegTable(std::vector<Index> dims, std::vector<int> legs);

    Index sub_dim() const { return sub_dim_; }
    Index rest_dim() const { return rest_dim_; }
    Index total_dim() const { return sub_dim_ * rest_dim_; }

    /// Flat index for (selected-legs index, remaining-legs index).
    Index flat(Index sub, Index rest) const { return sub_offsets_[static_cast<size_t>(sub)] + rest_offsets_[static_cast<size_t>(rest)]; }

  private:
    Index sub_dim_ = 1;
    Index rest_dim_ = 1;
    std::vector<Index> sub_offsets_;
    std::vector<Index> rest_offsets_;
};

/// x acting on the listed legs, identity elsewhere.
Mat embed_on_legs(const Mat& x, const std::vector<int>& legs, const std::vector<Index>& dims);

/// Apply x (acting on the listed legs) to a state vector.
Vec apply_on_legs(const Mat& x, const Vec& v, const std::vector<int>& legs, const std::vector<Index>& dims);

/// Partial trace of a density matrix over the legs not listed in keep.
Mat partial_trace_keep(const Mat& rho, const std::vector<int>& keep, const std::vector<Index>& dims);

/// Partial trace of |v><v| over the legs not listed in keep, without
/// materializing the full projector.
Mat pure_partial_trace(const Vec& v, const std::vector<int>& keep, const std::vector<Index>& dims);

}  // namespace mmd
