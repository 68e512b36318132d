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

#include "mmd/instrument.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmd {

void POVM::check(double tol) const {
    if (labels.size() != effects.size()) throw std::invalid_argument("POVM: label/effect count mismatch");
    if (effects.empty()) throw std::invalid_argument("POVM: empty");
    Mat sum = Mat::Zero(dim(), dim());
    for (const Mat& f : effects) {
        Eigen::SelfAdjointEigenSolver<Mat> es((f + f.adjoint()) / 2.0);
        if (es.eigenvalues().minCoeff() < -tol) throw std::invalid_argument("POVM: effect is not positive semidefinite");
        sum += f;
    }
    if ((sum - Mat::Identity(dim(), dim())).norm() > tol) throw std::invalid_argument("POVM: effects do not sum to one");
}

Instrument::Instrument(const UnitaryRep& rep) : Instrument(full_matrix_algebra(rep.dim()), rep) {}

Instrument::Instrument(MatrixStarAlgebra system, const UnitaryRep& rep)
    : system_(std::move(system)),
      measured_(MatrixStarAlgebra::generate(rep.dim(), rep.generator_images())),
      rep_(rep),
      spectral_(snag_decompose(rep)),
      coupling_(fourier_coupling(coupling_uw(rep), rep.group()).m) {
    if (system_.ambient_dim() != rep.dim())
        throw std::invalid_argument("Instrument: system algebra and representation dimensions differ");
    if (!is_factor(system_)) throw std::invalid_argument("Instrument: system algebra must be a factor");
    if (!system_.contains_subspace(measured_))
        throw std::invalid_argument("Instrument: measured algebra is not contained in the system algebra");
    masa_ = is_masa(measured_, system_);
}

void Instrument::validate_delta(const std::vector<int>& delta) const {
    if (delta.empty()) throw std::domain_error("Instrument: empty outcome set");
    std::vector<int> sorted = delta;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::domain_error("Instrument: outcome set contains a duplicate character");
    for (int chi : delta)
        if (!spectral_.in_support(chi)) throw std::domain_error("Instrument: outcome set leaves the spectral support");
}

Mat Instrument::heisenberg_image(const std::vector<int>& delta, const Mat& observable) const {
    const int n = rep_.group().size();
    Mat chi_delta = Mat::Zero(n, n);
    for (int chi : delta) chi_delta(chi, chi) = 1;
    return coupling_ * kron(observable, chi_delta) * coupling_.adjoint();
}

cplx Instrument::apply(const DensityState& omega, const std::vector<int>& delta, const Mat& observable) const {
    validate_delta(delta);
    if (omega.dim() != rep_.dim() || observable.rows() != rep_.dim() || observable.cols() != rep_.dim())
        throw std::invalid_argument("Instrument: dimension mismatch");
    const int n = rep_.group().size();
    Mat sandwich = heisenberg_image(delta, observable);
    // pointer in the neutral position |iota>
    Vec iota = Vec::Zero(n);
    iota(0) = 1;
    Mat state = kron(omega.rho, Mat(iota * iota.adjoint()));
    return (state * sandwich).trace();
}

double Instrument::probability(const DensityState& omega, const std::vector<int>& delta) const {
    cplx p = apply(omega, delta, Mat::Identity(rep_.dim(), rep_.dim()));
    return p.real();
}

Mat Instrument::conditioned_state(const DensityState& omega, const std::vector<int>& delta) const {
    const int n = rep_.group().size();
    const Index d = rep_.dim();
    Vec iota = Vec::Zero(n);
    iota(0) = 1;
    Mat sigma = coupling_.adjoint() * kron(omega.rho, Mat(iota * iota.adjoint())) * coupling_;
    // contract the pointer against the read-out set
    Mat out = Mat::Zero(d, d);
    for (int chi : delta)
        for (Index s = 0; s < d; ++s)
            for (Index t = 0; t < d; ++t) out(s, t) += sigma(s * n + chi, t * n + chi);
    return out;
}

DensityState Instrument::posterior(const DensityState& omega, const std::vector<int>& delta) const {
    validate_delta(delta);
    Mat rho = conditioned_state(omega, delta);
    double p = rho.trace().real();
    if (p <= 1e-12) throw std::runtime_error("Instrument: conditioning on an outcome of zero probability");
    rho /= p;
    rho = (rho + Mat(rho.adjoint())) / 2.0;
    return {rho, {rep_.dim()}};
}

POVM Instrument::povm_effects() const {
    const int n = rep_.group().size();
    const Index d = rep_.dim();
    // isometry J xi = UtildeW^* (xi (x) |iota>)
    Mat j(d * n, d);
    for (Index t = 0; t < d; ++t) {
        Vec col = Vec::Zero(d * n);
        col(t * n + 0) = 1;
        j.col(t) = coupling_.adjoint() * col;
    }
    POVM povm;
    for (int chi : spectral_.labels) {
        Mat block(d, d);
        for (Index t = 0; t < d; ++t)
            for (Index s = 0; s < d; ++s) block(s, t) = j(s * n + chi, t);
        povm.labels.push_back(chi);
        povm.effects.push_back(block.adjoint() * block);
    }
    return povm;
}

NaimarkDilation naimark_dilate(const POVM& povm) {
    povm.check(1e-10);
    const Index d = povm.dim();
    const Index k = static_cast<Index>(povm.effects.size());
    Mat v = Mat::Zero(d * k, d);
    for (Index i = 0; i < k; ++i) {
        Mat root = matrix_sqrt_psd(povm.effects[static_cast<size_t>(i)]);
        for (Index s = 0; s < d; ++s)
            for (Index t = 0; t < d; ++t) v(s * k + i, t) = root(s, t);
    }
    NaimarkDilation out;
    out.isometry = std::move(v);
    for (Index i = 0; i < k; ++i) {
        Mat e = Mat::Zero(k, k);
        e(i, i) = 1;
        out.projections.push_back(kron(Mat::Identity(d, d), e));
    }
    return out;
}

}  // namespace mmd
