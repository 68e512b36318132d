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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace mmd {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kPi = 3.14159265358979323846;

/// Kronecker product with the left factor on the slow index.
Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

/// Column-major vectorization, so that vec(AXB) = (B^T (x) A) vec(X).
Vec vectorize(const Mat& m);
Mat unvectorize(const Vec& v, Index rows, Index cols);

/// Hilbert-Schmidt inner product tr(a^* b).
cplx hs_inner(const Mat& a, const Mat& b);
double hs_norm(const Mat& a);

double unitarity_defect(const Mat& m);  // ||m^* m - 1||_F

/// Square root of a positive semidefinite matrix; eigenvalues in
/// [-clamp_tol, 0) are clamped to zero, anything lower throws.
Mat matrix_sqrt_psd(const Mat& m, double clamp_tol = 1e-10);

/// Orthonormal basis (as columns) of the column span of `vectors`,
/// with rank decided at `tol` relative to the largest singular value.
Mat orthonormal_basis(const Mat& vectors, double tol = 1e-10);

/// Frobenius norm of P_a - P_b for the orthogonal projections onto the
/// column spans of qa and qb (columns assumed orthonormal).
double subspace_distance(const Mat& qa, const Mat& qb);

/// Orthonormal basis of the intersection of two column spans, cut at
/// principal-angle cosine >= 1 - tol.
Mat subspace_intersection(const Mat& qa, const Mat& qb, double tol = 1e-9);

/// Orthonormal basis of the nullspace of the positive semidefinite
/// Gram matrix `gram` (eigenvalue cutoff relative to the largest).
Mat nullspace_of_gram(const Mat& gram, double cutoff = 1e-10);

}  // namespace mmd
