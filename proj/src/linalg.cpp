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

#include "mmd/linalg.hpp"

#include <stdexcept>

namespace mmd {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vec kron(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

Vec vectorize(const Mat& m) {
    return Eigen::Map<const Vec>(m.data(), m.size());
}

Mat unvectorize(const Vec& v, Index rows, Index cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("unvectorize: size mismatch");
    return Eigen::Map<const Mat>(v.data(), rows, cols);
}

cplx hs_inner(const Mat& a, const Mat& b) {
    return (a.adjoint() * b).trace();
}

double hs_norm(const Mat& a) {
    return a.norm();
}

double unitarity_defect(const Mat& m) {
    return (m.adjoint() * m - Mat::Identity(m.cols(), m.cols())).norm();
}

Mat matrix_sqrt_psd(const Mat& m, double clamp_tol) {
    Eigen::SelfAdjointEigenSolver<Mat> es((m + m.adjoint()) / 2.0);
    Eigen::VectorXd ev = es.eigenvalues();
    for (Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < -clamp_tol) throw std::invalid_argument("matrix_sqrt_psd: matrix is not positive semidefinite");
        if (ev(i) < 0) ev(i) = 0;
    }
    return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

Mat orthonormal_basis(const Mat& vectors, double tol) {
    if (vectors.cols() == 0) return Mat(vectors.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(vectors, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    double cutoff = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    Index rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) ++rank;
    return svd.matrixU().leftCols(rank);
}

double subspace_distance(const Mat& qa, const Mat& qb) {
    Mat pa = qa * qa.adjoint();
    Mat pb = qb * qb.adjoint();
    return (pa - pb).norm();
}

Mat subspace_intersection(const Mat& qa, const Mat& qb, double tol) {
    if (qa.cols() == 0 || qb.cols() == 0) return Mat(qa.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(qa.adjoint() * qb, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    Index count = 0;
    while (count < sv.size() && sv(count) >= 1.0 - tol) ++count;
    return qa * svd.matrixU().leftCols(count);
}

Mat nullspace_of_gram(const Mat& gram, double cutoff) {
    Eigen::SelfAdjointEigenSolver<Mat> es((gram + gram.adjoint()) / 2.0);
    const auto& ev = es.eigenvalues();
    double cut = cutoff * std::max(1.0, ev(ev.size() - 1));
    Index dim = 0;
    while (dim < ev.size() && ev(dim) <= cut) ++dim;
    return es.eigenvectors().leftCols(dim);
}

}  // namespace mmd
