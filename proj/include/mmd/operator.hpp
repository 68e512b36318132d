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
#include <map>
#include <vector>

#include "mmd/group.hpp"
#include "mmd/legs.hpp"
#include "mmd/linalg.hpp"

namespace mmd {

/// Dense operator on a labelled tensor-product space. The signature lists
/// the tensor-factor dimensions; their product equals the matrix dimension.
struct Operator {
    Mat m;
    std::vector<Index> signature;

    static Operator identity(std::vector<Index> signature);
    Index dim() const { return m.rows(); }
    void check() const;  // throws on signature/matrix mismatch
};

struct StateVector {
    Vec v;
    std::vector<Index> signature;

    Index dim() const { return v.size(); }
    void check(double tol = 1e-10) const;  // unit norm
};

struct DensityState {
    Mat rho;
    std::vector<Index> signature;

    Index dim() const { return rho.rows(); }
    void check(double tol = 1e-10) const;  // psd, trace one
};

Operator tensor(const Operator& a, const Operator& b);
StateVector tensor(const StateVector& a, const StateVector& b);
DensityState tensor(const DensityState& a, const DensityState& b);

DensityState pure_density(const StateVector& s);

/// Trace out every factor not listed in keep (indices into the signature).
DensityState partial_trace(const DensityState& rho, const std::vector<int>& keep);

/**
 * Unitary representation of a finite abelian group, stored as one unitary
 * per cyclic-factor generator; the full table u -> U_u is precomputed.
 */
class UnitaryRep {
  public:
    struct unchecked_t {};
    static constexpr unchecked_t unchecked{};

    /// Validates (unitary, commuting, correct generator orders) at 1e-10.
    UnitaryRep(FiniteAbelianGroup g, std::vector<Mat> generator_images);
    /// Builds the table without validation; snag_decompose re-validates.
    UnitaryRep(FiniteAbelianGroup g, std::vector<Mat> generator_images, unchecked_t);

    static UnitaryRep trivial(const FiniteAbelianGroup& g, Index dim);

    const FiniteAbelianGroup& group() const { return g_; }
    Index dim() const { return dim_; }
    const Mat& at(int u) const { return table_[static_cast<size_t>(u)]; }
    const std::vector<Mat>& generator_images() const { return gens_; }

    /// Throws std::invalid_argument if the data is not a unitary representation.
    void validate(double tol = 1e-10) const;

  private:
    void build_table();

    FiniteAbelianGroup g_;
    std::vector<Mat> gens_;
    Index dim_;
    std::vector<Mat> table_;
};

UnitaryRep tensor(const UnitaryRep& a, const UnitaryRep& b);
UnitaryRep tensor_power(const UnitaryRep& r, int m);

/**
 * The family {E(chi)} of orthogonal projections from the spectral
 * decomposition U_u = sum_chi conj(chi(u)) E(chi) of a unitary
 * representation of a finite abelian group. Only characters with a
 * nonzero projection are stored (the support).
 */
struct SpectralMeasure {
    DualGroup dual;
    std::vector<int> labels;       // character indices, ascending
    std::vector<Mat> projections;  // parallel to labels

    Index dim() const { return projections.empty() ? 0 : projections.front().rows(); }
    bool in_support(int chi) const;
    const Mat& at(int chi) const;  // throws std::domain_error if absent
    std::vector<int> support() const { return labels; }
};

/**
 * Spectral decomposition by simultaneous diagonalization of the commuting
 * generator unitaries: a seeded random Hermitian combination
 * sum_g r_g (U_g + U_g^*) + i s_g (U_g - U_g^*) is diagonalized, eigenvalue
 * clusters are merged at 1e-8, and each cluster is labelled by evaluating
 * every generator on it. Eigenvalues that are not within 1e-8 of a root of
 * unity of the required order raise a spectral-mismatch error.
 */
SpectralMeasure snag_decompose(const UnitaryRep& rep, std::uint64_t seed = 0);

/// Multiplicity of each character: m(chi) = rank E(chi).
std::map<int, int> rep_multiplicities(const UnitaryRep& rep);

/// Unitary equivalence up to multiplicity. For finite abelian groups this
/// is equality of the character supports.
bool quasi_equivalent(const UnitaryRep& a, const UnitaryRep& b);

class RandomSource;

/// Representation with seeded random spectral data: dim characters drawn
/// with replacement and a random joint eigenbasis.
UnitaryRep random_rep(const FiniteAbelianGroup& g, Index dim, RandomSource& rng);

}  // namespace mmd
