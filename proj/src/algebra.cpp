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

#include "mmd/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "mmd/rng.hpp"

namespace mmd {

namespace {

Mat stack_columns(Index ambient, const std::vector<Mat>& mats) {
    Mat cols(ambient * ambient, static_cast<Index>(mats.size()));
    for (size_t i = 0; i < mats.size(); ++i) cols.col(static_cast<Index>(i)) = vectorize(mats[i]);
    return cols;
}

}  // namespace

MatrixStarAlgebra MatrixStarAlgebra::generate(Index ambient_dim, const std::vector<Mat>& generators) {
    std::vector<Mat> seed;
    seed.push_back(Mat::Identity(ambient_dim, ambient_dim));
    for (const Mat& g : generators) {
        if (g.rows() != ambient_dim || g.cols() != ambient_dim)
            throw std::invalid_argument("generate: generator dimension mismatch");
        seed.push_back(g);
        seed.push_back(g.adjoint());
    }
    Mat basis = orthonormal_basis(stack_columns(ambient_dim, seed), 1e-10);

    std::vector<Mat> multipliers;
    for (const Mat& g : generators) {
        multipliers.push_back(g);
        multipliers.push_back(g.adjoint());
    }

    const Index cap = 2 * ambient_dim * ambient_dim;
    for (Index round = 0; round <= cap; ++round) {
        std::vector<Mat> fresh;
        for (const Mat& g : multipliers) {
            for (Index c = 0; c < basis.cols(); ++c) {
                Mat b = unvectorize(basis.col(c), ambient_dim, ambient_dim);
                Mat prod = g * b;
                Vec residual = vectorize(prod) - basis * (basis.adjoint() * vectorize(prod));
                if (residual.norm() > 1e-10 * std::max(1.0, prod.norm())) fresh.push_back(prod);
            }
        }
        if (fresh.empty()) return MatrixStarAlgebra(ambient_dim, std::move(basis));
        Mat extended(ambient_dim * ambient_dim, basis.cols() + static_cast<Index>(fresh.size()));
        extended.leftCols(basis.cols()) = basis;
        for (size_t i = 0; i < fresh.size(); ++i) extended.col(basis.cols() + static_cast<Index>(i)) = vectorize(fresh[i]);
        Mat next = orthonormal_basis(extended, 1e-10);
        if (next.cols() == basis.cols()) return MatrixStarAlgebra(ambient_dim, std::move(next));
        basis = std::move(next);
    }
    throw std::runtime_error("generate: span closure did not stabilize");
}

MatrixStarAlgebra MatrixStarAlgebra::assume_span(Index ambient_dim, const std::vector<Mat>& spanning) {
    for (const Mat& g : spanning)
        if (g.rows() != ambient_dim || g.cols() != ambient_dim)
            throw std::invalid_argument("assume_span: dimension mismatch");
    return MatrixStarAlgebra(ambient_dim, orthonormal_basis(stack_columns(ambient_dim, spanning), 1e-10));
}

Mat MatrixStarAlgebra::basis_element(Index i) const {
    return unvectorize(basis_.col(i), ambient_, ambient_);
}

Mat MatrixStarAlgebra::project(const Mat& x) const {
    Vec v = vectorize(x);
    return unvectorize(basis_ * (basis_.adjoint() * v), ambient_, ambient_);
}

bool MatrixStarAlgebra::contains(const Mat& x, double tol) const {
    return (x - project(x)).norm() <= tol * std::max(1.0, x.norm());
}

bool MatrixStarAlgebra::contains_subspace(const MatrixStarAlgebra& other, double tol) const {
    for (Index c = 0; c < other.basis_.cols(); ++c) {
        Vec v = other.basis_.col(c);
        if ((v - basis_ * (basis_.adjoint() * v)).norm() > tol) return false;
    }
    return true;
}

bool MatrixStarAlgebra::same_subspace(const MatrixStarAlgebra& other, double tol) const {
    if (ambient_ != other.ambient_) return false;
    if (dim() != other.dim()) return false;
    return subspace_distance(basis_, other.basis_) <= tol;
}

bool MatrixStarAlgebra::is_abelian(double tol) const {
    for (Index i = 0; i < dim(); ++i) {
        Mat a = basis_element(i);
        for (Index j = i + 1; j < dim(); ++j) {
            Mat b = basis_element(j);
            if ((a * b - b * a).norm() > tol) return false;
        }
    }
    return true;
}

bool MatrixStarAlgebra::contains_identity(double tol) const {
    return contains(Mat::Identity(ambient_, ambient_), tol);
}

double MatrixStarAlgebra::closure_residual() const {
    double worst = 0;
    for (Index i = 0; i < dim(); ++i) {
        Mat a = basis_element(i);
        for (Index j = 0; j < dim(); ++j) {
            Mat prod = a * basis_element(j);
            double r = (prod - project(prod)).norm();
            worst = std::max(worst, r);
        }
    }
    return worst;
}

MatrixStarAlgebra commutant(const MatrixStarAlgebra& a) {
    const Index n = a.ambient_dim();
    const Index n2 = n * n;
    // X commutes with B iff (B^T (x) 1 - 1 (x) B) vec(X) = 0; accumulate the
    // Gram matrix of the stacked maps and read off its nullspace.
    Mat gram = Mat::Zero(n2, n2);
    Mat id = Mat::Identity(n, n);
    for (Index c = 0; c < a.dim(); ++c) {
        Mat b = a.basis_element(c);
        Mat k = kron(b.transpose(), id) - kron(id, b);
        gram += k.adjoint() * k;
    }
    Mat null_basis = nullspace_of_gram(gram, 1e-12);
    return MatrixStarAlgebra::assume_span(n, [&] {
        std::vector<Mat> mats;
        for (Index c = 0; c < null_basis.cols(); ++c) mats.push_back(unvectorize(null_basis.col(c), n, n));
        return mats;
    }());
}

MatrixStarAlgebra center(const MatrixStarAlgebra& a) {
    return intersect(a, commutant(a));
}

MatrixStarAlgebra intersect(const MatrixStarAlgebra& a, const MatrixStarAlgebra& b, double tol) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient dimension mismatch");
    Mat q = subspace_intersection(a.basis(), b.basis(), tol);
    std::vector<Mat> mats;
    for (Index c = 0; c < q.cols(); ++c) mats.push_back(unvectorize(q.col(c), a.ambient_dim(), a.ambient_dim()));
    return MatrixStarAlgebra::assume_span(a.ambient_dim(), mats);
}

MatrixStarAlgebra algebra_tensor(const MatrixStarAlgebra& a, const MatrixStarAlgebra& b) {
    std::vector<Mat> mats;
    for (Index i = 0; i < a.dim(); ++i)
        for (Index j = 0; j < b.dim(); ++j) mats.push_back(kron(a.basis_element(i), b.basis_element(j)));
    return MatrixStarAlgebra::assume_span(a.ambient_dim() * b.ambient_dim(), mats);
}

bool is_factor(const MatrixStarAlgebra& a) {
    return center(a).dim() == 1;
}

bool is_masa(const MatrixStarAlgebra& a, const MatrixStarAlgebra& m) {
    if (a.ambient_dim() != m.ambient_dim() || !m.contains_subspace(a))
        throw std::invalid_argument("is_masa: a is not contained in m");
    if (!a.is_abelian()) return false;
    // the relative commutant a' /\ m, not a' alone
    MatrixStarAlgebra rel = intersect(commutant(a), m);
    return rel.same_subspace(a);
}

SectorDecomposition sector_decompose(const MatrixStarAlgebra& m, std::uint64_t seed) {
    MatrixStarAlgebra z = center(m);
    RandomSource rng(RandomSource::derive(seed, 0x5ec7));

    // complex coefficients: the Hermitian part of a real combination can
    // fail to separate conjugate characters in the centre
    Mat x = Mat::Zero(m.ambient_dim(), m.ambient_dim());
    for (Index c = 0; c < z.dim(); ++c) x += rng.complex_normal() * z.basis_element(c);
    Mat h = (x + x.adjoint()) / 2.0;

    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    const auto& ev = es.eigenvalues();
    const Mat& q = es.eigenvectors();

    SectorDecomposition out;
    Index start = 0;
    int label = 0;
    while (start < ev.size()) {
        Index end = start + 1;
        while (end < ev.size() && ev(end) - ev(end - 1) <= 1e-8) ++end;
        Mat block = q.middleCols(start, end - start);
        Mat proj = block * block.adjoint();
        if (!z.contains(proj, 1e-8))
            throw std::runtime_error("sector_decompose: eigenprojection left the centre (ill-conditioned input)");

        // compress the algebra to the block and read off d and the multiplicity
        std::vector<Mat> compressed;
        for (Index c = 0; c < m.dim(); ++c) compressed.push_back(block.adjoint() * m.basis_element(c) * block);
        MatrixStarAlgebra restricted = MatrixStarAlgebra::assume_span(end - start, compressed);
        if (!is_factor(restricted))
            throw std::runtime_error("sector_decompose: compressed block is not a factor (ill-conditioned input)");
        double d_sq = static_cast<double>(restricted.dim());
        int d = static_cast<int>(std::llround(std::sqrt(d_sq)));
        if (static_cast<Index>(d) * d != restricted.dim())
            throw std::runtime_error("sector_decompose: block dimension is not a perfect square");
        int rank = static_cast<int>(end - start);
        if (rank % d != 0) throw std::runtime_error("sector_decompose: multiplicity is not integral");

        SectorDecomposition::Sector s;
        s.central_projection = proj;
        s.block_dim = d;
        s.multiplicity = rank / d;
        s.label = label++;
        s.eigenvalue = ev(start);
        out.sectors.push_back(std::move(s));
        start = end;
    }
    return out;
}

int intertwiner_space_dim(const std::vector<Mat>& images_a, const std::vector<Mat>& images_b) {
    if (images_a.size() != images_b.size()) throw std::invalid_argument("intertwiner_space_dim: image count mismatch");
    if (images_a.empty()) throw std::invalid_argument("intertwiner_space_dim: no images");
    Index da = images_a.front().rows();
    Index db = images_b.front().rows();
    Mat gram = Mat::Zero(da * db, da * db);
    Mat ida = Mat::Identity(da, da);
    Mat idb = Mat::Identity(db, db);
    for (size_t i = 0; i < images_a.size(); ++i) {
        // T a - b T = 0, T of shape db x da
        Mat k = kron(images_a[i].transpose(), idb) - kron(ida, images_b[i]);
        gram += k.adjoint() * k;
    }
    return static_cast<int>(nullspace_of_gram(gram, 1e-12).cols());
}

MatrixStarAlgebra full_matrix_algebra(Index n) {
    std::vector<Mat> units;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            Mat e = Mat::Zero(n, n);
            e(i, j) = 1;
            units.push_back(e);
        }
    return MatrixStarAlgebra::assume_span(n, units);
}

MatrixStarAlgebra diagonal_algebra(Index n) {
    std::vector<Mat> units;
    for (Index i = 0; i < n; ++i) {
        Mat e = Mat::Zero(n, n);
        e(i, i) = 1;
        units.push_back(e);
    }
    return MatrixStarAlgebra::assume_span(n, units);
}

MatrixStarAlgebra scalar_algebra(Index n) {
    return MatrixStarAlgebra::assume_span(n, {Mat::Identity(n, n)});
}

}  // namespace mmd
