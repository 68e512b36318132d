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
#include <vector>

#include "mmd/linalg.hpp"

namespace mmd {

/**
 * A unit-containing *-closed subalgebra of the n x n matrices, stored as an
 * orthonormal (Hilbert-Schmidt) basis of the spanned subspace. All subspace
 * comparisons go through projection-difference norms, so they are
 * basis-independent.
 */
class MatrixStarAlgebra {
  public:
    /// Smallest unit-containing *-closed subalgebra containing the
    /// generators, computed by span closure. Throws std::runtime_error if
    /// the closure does not stabilize within 2 n^2 rounds.
    static MatrixStarAlgebra generate(Index ambient_dim, const std::vector<Mat>& generators);

    /// Wrap a span the caller knows to be a unital *-closed algebra
    /// (orthonormalized here, no closure performed).
    static MatrixStarAlgebra assume_span(Index ambient_dim, const std::vector<Mat>& spanning);

    Index ambient_dim() const { return ambient_; }
    Index dim() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }  // ambient^2 x dim, orthonormal columns
    Mat basis_element(Index i) const;

    Mat project(const Mat& x) const;
    bool contains(const Mat& x, double tol = 1e-9) const;
    bool contains_subspace(const MatrixStarAlgebra& other, double tol = 1e-9) const;
    bool same_subspace(const MatrixStarAlgebra& other, double tol = 1e-9) const;
    bool is_abelian(double tol = 1e-9) const;
    bool contains_identity(double tol = 1e-9) const;

    /// Largest residual left by projecting a product of two basis elements
    /// back onto the span. Small for a genuinely closed algebra.
    double closure_residual() const;

  private:
    MatrixStarAlgebra(Index ambient, Mat basis) : ambient_(ambient), basis_(std::move(basis)) {}

    Index ambient_;
    Mat basis_;
};

/// {X : XB = BX for every B in the algebra}.
MatrixStarAlgebra commutant(const MatrixStarAlgebra& a);

/// A intersected with its commutant.
MatrixStarAlgebra center(const MatrixStarAlgebra& a);

MatrixStarAlgebra intersect(const MatrixStarAlgebra& a, const MatrixStarAlgebra& b, double tol = 1e-9);

/// Span of {a_i (x) b_j}; an algebra whenever both inputs are.
MatrixStarAlgebra algebra_tensor(const MatrixStarAlgebra& a, const MatrixStarAlgebra& b);

bool is_factor(const MatrixStarAlgebra& a);

/// Maximal abelian inside m: a abelian and a = a' /\ m as subspaces.
/// Throws std::invalid_argument if a is not contained in m.
bool is_masa(const MatrixStarAlgebra& a, const MatrixStarAlgebra& m);

struct SectorDecomposition {
    struct Sector {
        Mat central_projection;
        int block_dim = 0;     // d_i: size of the full matrix block
        int multiplicity = 0;  // m_i: how many times the block repeats
        int label = 0;
        double eigenvalue = 0;  // of the separating central element
    };
    std::vector<Sector> sectors;
};

/**
 * Minimal central projections from the eigenprojections of a seeded random
 * self-adjoint central element (clusters merged at 1e-8). Each compressed
 * block is verified to be a factor; failure raises std::runtime_error
 * (ill-conditioned input).
 */
SectorDecomposition sector_decompose(const MatrixStarAlgebra& m, std::uint64_t seed = 0);

/// Dimension of {T : T a_i = b_i T for all i}. Zero for two disjoint
/// (inequivalent irreducible) representations.
int intertwiner_space_dim(const std::vector<Mat>& images_a, const std::vector<Mat>& images_b);

/// Full matrix algebra and the diagonal subalgebra, as convenience builders.
MatrixStarAlgebra full_matrix_algebra(Index n);
MatrixStarAlgebra diagonal_algebra(Index n);
MatrixStarAlgebra scalar_algebra(Index n);

}  // namespace mmd
