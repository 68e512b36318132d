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

#include "mmd/kt.hpp"

#include <stdexcept>

namespace mmd {

Mat KTOperator::dense() const {
    const Index n2 = static_cast<Index>(perm.size());
    Mat out = Mat::Zero(n2, n2);
    for (Index c = 0; c < n2; ++c) out(perm[static_cast<size_t>(c)], c) = 1;
    return out;
}

int KTOperator::apply_index(int a, int b) const {
    return perm[static_cast<size_t>(a * group_size + b)];
}

KTOperator kt_w(const FiniteAbelianGroup& g) {
    const int n = g.size();
    KTOperator w{KTOperator::Kind::W, n, std::vector<int>(static_cast<size_t>(n) * n)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) w.perm[static_cast<size_t>(a * n + b)] = g.op(a, b) * n + b;
    return w;
}

KTOperator kt_v(const DualGroup& dual) {
    const auto& g = dual.structure();
    const int n = g.size();
    KTOperator v{KTOperator::Kind::V, n, std::vector<int>(static_cast<size_t>(n) * n)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) v.perm[static_cast<size_t>(a * n + b)] = a * n + g.op(a, b);
    return v;
}

Mat kt_v_via_fourier(const FiniteAbelianGroup& g) {
    Mat f = fourier_matrix(g);
    Mat ff = kron(f, f);
    return ff * kt_w(g).dense().adjoint() * ff.adjoint();
}

Mat translation_unitary(const FiniteAbelianGroup& g, int u) {
    const int n = g.size();
    Mat m = Mat::Zero(n, n);
    for (int v = 0; v < n; ++v) m(g.op(u, v), v) = 1;
    return m;
}

UnitaryRep regular_rep(const FiniteAbelianGroup& g) {
    std::vector<Mat> gens;
    for (int j = 0; j < g.rank(); ++j) gens.push_back(translation_unitary(g, g.generator(j)));
    return UnitaryRep(g, gens);
}

UnitaryRep dual_regular_rep(const DualGroup& dual) {
    return regular_rep(dual.structure());
}

CouplingOperator coupling_uw(const UnitaryRep& rep) {
    const int n = rep.group().size();
    const Index d = rep.dim();
    Mat m = Mat::Zero(d * n, d * n);
    for (int u = 0; u < n; ++u) {
        const Mat& uu = rep.at(u);
        for (Index s = 0; s < d; ++s)
            for (Index t = 0; t < d; ++t) m(s * n + u, t * n + u) = uu(s, t);
    }
    return {CouplingOperator::Form::UW, std::move(m), d, n};
}

CouplingOperator fourier_coupling(const CouplingOperator& uw, const FiniteAbelianGroup& g) {
    if (uw.form != CouplingOperator::Form::UW) throw std::invalid_argument("fourier_coupling: expected a U(W)-form coupling");
    if (uw.pointer_dim != g.size()) throw std::invalid_argument("fourier_coupling: group size mismatch");
    Mat f = kron(Mat::Identity(uw.sys_dim, uw.sys_dim), fourier_matrix(g));
    return {CouplingOperator::Form::UtildeW, f * uw.m * f.adjoint(), uw.sys_dim, uw.pointer_dim};
}

CouplingOperator coupling_utilde_v(const UnitaryRep& rep) {
    CouplingOperator utw = fourier_coupling(coupling_uw(rep), rep.group());
    return {CouplingOperator::Form::UtildeV, utw.m.adjoint(), utw.sys_dim, utw.pointer_dim};
}

Mat coupling_spectral_form(const SpectralMeasure& e) {
    const auto& g = e.dual.structure();
    const int n = g.size();
    const Index d = e.dim();
    Mat out = Mat::Zero(d * n, d * n);
    for (size_t i = 0; i < e.labels.size(); ++i)
        out += kron(e.projections[i], translation_unitary(g, e.labels[i]).adjoint());
    return out;
}

double pentagonal_residual_w(const FiniteAbelianGroup& g) {
    // both sides are permutations of the basis of l2(U)^(x)3; each basis
    // vector on which they disagree contributes 2 to the squared norm
    const int n = g.size();
    long mismatches = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                // lhs = W12 W23: (a,b,c) -> (a, b+c, c) -> (a+b+c, b+c, c)
                int l1 = a, l2 = g.op(b, c), l3 = c;
                l1 = g.op(l1, l2);
                // rhs = W23 W13 W12: (a,b,c) -> (a+b, b, c) -> (a+b+c, b, c) -> (a+b+c, b+c, c)
                int r1 = g.op(a, b), r2 = b, r3 = c;
                r1 = g.op(r1, r3);
                r2 = g.op(r2, r3);
                if (l1 != r1 || l2 != r2 || l3 != r3) ++mismatches;
            }
    return std::sqrt(2.0 * static_cast<double>(mismatches));
}

double pentagonal_residual_v(const DualGroup& dual) {
    const auto& g = dual.structure();
    const int n = g.size();
    long mismatches = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                // lhs = V23 V12: (a,b,c) -> (a, a+b, c) -> (a, a+b, a+b+c)
                int l1 = a, l2 = g.op(a, b), l3 = c;
                l3 = g.op(l2, l3);
                // rhs = V12 V13 V23: (a,b,c) -> (a, b, b+c) -> (a, b, a+b+c) -> (a, a+b, a+b+c)
                int r1 = a, r2 = b, r3 = g.op(b, c);
                r3 = g.op(a, r3);
                r2 = g.op(r1, r2);
                if (l1 != r1 || l2 != r2 || l3 != r3) ++mismatches;
            }
    return std::sqrt(2.0 * static_cast<double>(mismatches));
}

double modified_pentagonal_residual(const UnitaryRep& rep) {
    // per pointer pair (a, b) both sides carry the same pointer labels
    // (a+b, b) and system blocks U_{a+b} vs U_b U_a
    const auto& g = rep.group();
    const int n = g.size();
    double sq = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Mat diff = rep.at(g.op(a, b)) - rep.at(b) * rep.at(a);
            sq += diff.squaredNorm();
        }
    return std::sqrt(sq);
}

double intertwining_residual(const UnitaryRep& rep) {
    const auto& g = rep.group();
    const int n = g.size();
    double worst = 0;
    for (int u = 0; u < n; ++u) {
        double sq = 0;
        for (int v = 0; v < n; ++v) {
            Mat diff = rep.at(g.op(u, v)) - rep.at(u) * rep.at(v);
            sq += diff.squaredNorm();
        }
        worst = std::max(worst, std::sqrt(sq));
    }
    return worst;
}

double route_equality_v(const FiniteAbelianGroup& g) {
    return (kt_v(DualGroup(g)).dense() - kt_v_via_fourier(g)).norm();
}

double route_equality_coupling(const UnitaryRep& rep) {
    CouplingOperator utw = fourier_coupling(coupling_uw(rep), rep.group());
    return (utw.m - coupling_spectral_form(snag_decompose(rep))).norm();
}

}  // namespace mmd
