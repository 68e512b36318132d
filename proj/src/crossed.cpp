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

#include "mmd/crossed.hpp"

#include <stdexcept>

namespace mmd {

namespace {

void check_compatible(const MatrixStarAlgebra& m, const UnitaryRep& rep) {
    if (m.ambient_dim() != rep.dim())
        throw std::invalid_argument("crossed product: algebra and representation dimensions differ");
}

}  // namespace

CrossedProduct build_schrodinger(const MatrixStarAlgebra& m, const UnitaryRep& rep) {
    check_compatible(m, rep);
    const int n = rep.group().size();
    std::vector<Mat> gens;
    Mat idp = Mat::Identity(n, n);
    for (Index c = 0; c < m.dim(); ++c) gens.push_back(kron(m.basis_element(c), idp));
    for (int j = 0; j < rep.group().rank(); ++j) {
        int u = rep.group().generator(j);
        gens.push_back(kron(rep.at(u), translation_unitary(rep.group(), u)));
    }
    return {CrossedProduct::Picture::Schrodinger, MatrixStarAlgebra::generate(rep.dim() * n, gens), m, rep};
}

CrossedProduct build_heisenberg(const MatrixStarAlgebra& m, const UnitaryRep& rep) {
    check_compatible(m, rep);
    const int n = rep.group().size();
    Mat uw = coupling_uw(rep).m;
    std::vector<Mat> gens;
    Mat idp = Mat::Identity(n, n);
    Mat ids = Mat::Identity(rep.dim(), rep.dim());
    for (Index c = 0; c < m.dim(); ++c) gens.push_back(uw.adjoint() * kron(m.basis_element(c), idp) * uw);
    for (int j = 0; j < rep.group().rank(); ++j)
        gens.push_back(kron(ids, translation_unitary(rep.group(), rep.group().generator(j))));
    return {CrossedProduct::Picture::Heisenberg, MatrixStarAlgebra::generate(rep.dim() * n, gens), m, rep};
}

EquivalenceReport alpha_w_equivalence(const CrossedProduct& schrodinger, const CrossedProduct& heisenberg,
                                      const UnitaryRep& rep, double tol, bool enforce) {
    if (schrodinger.picture != CrossedProduct::Picture::Schrodinger ||
        heisenberg.picture != CrossedProduct::Picture::Heisenberg)
        throw std::invalid_argument("alpha_w_equivalence: pictures passed in the wrong order");
    const MatrixStarAlgebra& s = schrodinger.algebra;
    const MatrixStarAlgebra& h = heisenberg.algebra;
    if (s.ambient_dim() != h.ambient_dim()) throw std::invalid_argument("alpha_w_equivalence: ambient dimension mismatch");

    // both pictures must come from the same generating data
    for (const CrossedProduct* cp : {&schrodinger, &heisenberg}) {
        if (!cp->action.group().same_presentation(rep.group()) || cp->action.dim() != rep.dim())
            throw std::invalid_argument("alpha_w_equivalence: representation does not match the generating data");
        for (size_t j = 0; j < rep.generator_images().size(); ++j)
            if ((cp->action.generator_images()[j] - rep.generator_images()[j]).norm() > 1e-12)
                throw std::invalid_argument("alpha_w_equivalence: representation does not match the generating data");
    }
    if (!schrodinger.source.same_subspace(heisenberg.source))
        throw std::invalid_argument("alpha_w_equivalence: the two pictures were generated from different algebras");

    Mat uw = coupling_uw(rep).m;
    std::vector<Mat> mapped_s, mapped_h;
    for (Index c = 0; c < s.dim(); ++c) mapped_s.push_back(uw.adjoint() * unvectorize(s.basis().col(c), s.ambient_dim(), s.ambient_dim()) * uw);
    for (Index c = 0; c < h.dim(); ++c) mapped_h.push_back(uw * unvectorize(h.basis().col(c), h.ambient_dim(), h.ambient_dim()) * uw.adjoint());

    MatrixStarAlgebra s_mapped = MatrixStarAlgebra::assume_span(s.ambient_dim(), mapped_s);
    MatrixStarAlgebra h_mapped = MatrixStarAlgebra::assume_span(h.ambient_dim(), mapped_h);

    EquivalenceReport report;
    report.schrodinger_to_heisenberg = subspace_distance(s_mapped.basis(), h.basis());
    report.heisenberg_to_schrodinger = subspace_distance(h_mapped.basis(), s.basis());
    report.pass = report.schrodinger_to_heisenberg <= tol && report.heisenberg_to_schrodinger <= tol;
    if (enforce && !report.pass)
        throw std::runtime_error("alpha_w_equivalence: the two pictures are not Ad(U(W))-conjugate within tolerance");
    return report;
}

Mat convolution_rep(const std::vector<Mat>& fhat, const UnitaryRep& rep) {
    const int n = rep.group().size();
    if (static_cast<int>(fhat.size()) != n) throw std::invalid_argument("convolution_rep: one coefficient per group element required");
    const Index d = rep.dim();
    Mat out = Mat::Zero(d * n, d * n);
    for (int u = 0; u < n; ++u) {
        if (fhat[static_cast<size_t>(u)].rows() != d || fhat[static_cast<size_t>(u)].cols() != d)
            throw std::invalid_argument("convolution_rep: coefficient dimension mismatch");
        out += kron(Mat(fhat[static_cast<size_t>(u)] * rep.at(u)), translation_unitary(rep.group(), u));
    }
    return out;
}

std::vector<Mat> convolve(const std::vector<Mat>& f1, const std::vector<Mat>& f2, const UnitaryRep& rep) {
    const auto& g = rep.group();
    const int n = g.size();
    if (static_cast<int>(f1.size()) != n || static_cast<int>(f2.size()) != n)
        throw std::invalid_argument("convolve: one coefficient per group element required");
    std::vector<Mat> out(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) {
        Mat acc = Mat::Zero(rep.dim(), rep.dim());
        for (int v = 0; v < n; ++v) {
            int w = g.op(g.inverse(v), u);  // v^{-1} u
            acc += f1[static_cast<size_t>(v)] * rep.at(v) * f2[static_cast<size_t>(w)] * rep.at(v).adjoint();
        }
        out[static_cast<size_t>(u)] = acc;
    }
    return out;
}

MatrixStarAlgebra coupled_center(const MatrixStarAlgebra& m, const MatrixStarAlgebra& a) {
    if (!is_factor(m)) throw std::invalid_argument("coupled_center: m must be a factor");
    if (!a.is_abelian()) throw std::invalid_argument("coupled_center: a must be abelian");
    return center(algebra_tensor(m, a));
}

}  // namespace mmd
