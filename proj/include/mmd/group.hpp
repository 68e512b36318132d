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

/**
 * Finite abelian group presented as a product of cyclic factors
 * Z_{d1} x ... x Z_{dk}. Elements are k-tuples with the i-th entry in
 * {0,...,d_i-1}; the group law is componentwise addition mod d_i.
 *
 * Elements are addressed by their lexicographic index (leftmost digit
 * most significant). This fixed enumeration defines every matrix basis
 * downstream, so reports are reproducible bit for bit.
 */
class FiniteAbelianGroup {
  public:
    /// Throws std::invalid_argument on an empty list or a non-positive order.
    explicit FiniteAbelianGroup(std::vector<int> orders);

    int size() const { return size_; }
    int rank() const { return static_cast<int>(orders_.size()); }
    const std::vector<int>& orders() const { return orders_; }
    int exponent() const;  // lcm of the cyclic orders

    int identity() const { return 0; }
    int op(int a, int b) const;
    int inverse(int a) const;
    int power(int a, int n) const;
    int element_order(int a) const;

    std::vector<int> tuple_of(int index) const;
    int index_of(const std::vector<int>& tuple) const;

    /// Index of the standard generator of the given cyclic factor.
    int generator(int factor) const;

    bool same_presentation(const FiniteAbelianGroup& other) const { return orders_ == other.orders_; }

  private:
    std::vector<int> orders_;
    int size_;
};

/**
 * The dual group of characters. It carries the same presentation and
 * indexing as the primal group; the character indexed by gamma acts as
 *
 *   gamma(u) = exp(2 pi i sum_j gamma_j u_j / d_j).
 */
class DualGroup {
  public:
    explicit DualGroup(const FiniteAbelianGroup& base);

    const FiniteAbelianGroup& structure() const { return g_; }
    int size() const { return g_.size(); }
    int identity_character() const { return 0; }

    /// gamma(u) as a unit complex number.
    cplx pair(int gamma, int u) const;

    /// Exact integer exponent e with gamma(u) = exp(2 pi i e / exponent_modulus()).
    long pair_exponent(int gamma, int u) const;
    long exponent_modulus() const { return lcm_; }

  private:
    FiniteAbelianGroup g_;
    long lcm_;
};

/// gamma(u), checking that the two presentations match
/// (throws std::domain_error otherwise).
cplx character_value(const DualGroup& dual, int gamma, const FiniteAbelianGroup& primal, int u);

// A GroupFunction is a complex amplitude per group element: a plain dense
// vector indexed by the fixed element enumeration.
using GroupFunction = Vec;

/// Unitary Fourier transform F[gamma, u] = conj(gamma(u)) / sqrt(|U|).
/// The counting Haar measure is folded into this single constant, which
/// makes F exactly unitary.
Mat fourier_matrix(const FiniteAbelianGroup& g);
Vec fourier(const FiniteAbelianGroup& g, const Vec& f);
Vec fourier_inverse(const FiniteAbelianGroup& g, const Vec& fhat);

/// Invariant mean (1/|U|) sum_u f(u).
cplx haar_mean(const FiniteAbelianGroup& g, const Vec& f);

/// f composed with translation by u: (translate f)(v) = f(v + u).
Vec translate(const FiniteAbelianGroup& g, const Vec& f, int u);

/// All isomorphism types of abelian groups of order <= max_order,
/// as lists of cyclic orders (one representative per type).
std::vector<std::vector<int>> all_abelian_groups_up_to(int max_order);

}  // namespace mmd
