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

#include "mmd/operator.hpp"

#include <algorithm>
#include <stdexcept>

#include "mmd/rng.hpp"

namespace mmd {

namespace {

Index signature_product(const std::vector<Index>& sig) {
    Index p = 1;
    for (Index d : sig) p *= d;
    return p;
}

std::vector<Index> concat(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::vector<Index> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

Operator Operator::identity(std::vector<Index> signature) {
    Index n = signature_product(signature);
    return {Mat::Identity(n, n), std::move(signature)};
}

void Operator::check() const {
    if (m.rows() != m.cols()) throw std::invalid_argument("Operator: matrix not square");
    if (signature_product(signature) != m.rows()) throw std::invalid_argument("Operator: signature does not match dimension");
}

void StateVector::check(double tol) const {
    if (signature_product(signature) != v.size()) throw std::invalid_argument("StateVector: signature does not match dimension");
    if (std::abs(v.norm() - 1.0) > tol) throw std::invalid_argument("StateVector: not unit norm");
}

void DensityState::check(double tol) const {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("DensityState: matrix not square");
    if (signature_product(signature) != rho.rows()) throw std::invalid_argument("DensityState: signature does not match dimension");
    if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
        throw std::invalid_argument("DensityState: trace is not one");
    Eigen::SelfAdjointEigenSolver<Mat> es((rho + rho.adjoint()) / 2.0);
    if (es.eigenvalues().minCoeff() < -tol) throw std::invalid_argument("DensityState: not positive semidefinite");
}

Operator tensor(const Operator& a, const Operator& b) {
    return {kron(a.m, b.m), concat(a.signature, b.signature)};
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    return {kron(a.v, b.v), concat(a.signature, b.signature)};
}

DensityState tensor(const DensityState& a, const DensityState& b) {
    return {kron(a.rho, b.rho), concat(a.signature, b.signature)};
}

DensityState pure_density(const StateVector& s) {
    return {s.v * s.v.adjoint(), s.signature};
}

DensityState partial_trace(const DensityState& rho, const std::vector<int>& keep) {
    for (int k : keep)
        if (k < 0 || k >= static_cast<int>(rho.signature.size()))
            throw std::invalid_argument("partial_trace: keep index out of range");
    Mat out = partial_trace_keep(rho.rho, keep, rho.signature);
    std::vector<Index> sig;
    for (int k : keep) sig.push_back(rho.signature[static_cast<size_t>(k)]);
    return {out, sig};
}

UnitaryRep::UnitaryRep(FiniteAbelianGroup g, std::vector<Mat> generator_images)
    : UnitaryRep(std::move(g), std::move(generator_images), unchecked) {
    validate();
}

UnitaryRep::UnitaryRep(FiniteAbelianGroup g, std::vector<Mat> generator_images, unchecked_t)
    : g_(std::move(g)), gens_(std::move(generator_images)) {
    if (static_cast<int>(gens_.size()) != g_.rank())
        throw std::invalid_argument("UnitaryRep: one generator image per cyclic factor required");
    dim_ = gens_.empty() ? 1 : gens_.front().rows();
    for (const Mat& u : gens_)
        if (u.rows() != dim_ || u.cols() != dim_) throw std::invalid_argument("UnitaryRep: generator dimension mismatch");
    build_table();
}

void UnitaryRep::build_table() {
    // powers of each generator, then one product per element
    std::vector<std::vector<Mat>> powers(gens_.size());
    for (size_t j = 0; j < gens_.size(); ++j) {
        int d = g_.orders()[j];
        powers[j].resize(static_cast<size_t>(d));
        powers[j][0] = Mat::Identity(dim_, dim_);
        for (int p = 1; p < d; ++p) powers[j][static_cast<size_t>(p)] = powers[j][static_cast<size_t>(p - 1)] * gens_[j];
    }
    table_.resize(static_cast<size_t>(g_.size()));
    for (int u = 0; u < g_.size(); ++u) {
        auto t = g_.tuple_of(u);
        Mat acc = Mat::Identity(dim_, dim_);
        for (size_t j = 0; j < t.size(); ++j) acc = acc * powers[j][static_cast<size_t>(t[j])];
        table_[static_cast<size_t>(u)] = acc;
    }
}

UnitaryRep UnitaryRep::trivial(const FiniteAbelianGroup& g, Index dim) {
    std::vector<Mat> gens(static_cast<size_t>(g.rank()), Mat::Identity(dim, dim));
    return UnitaryRep(g, gens);
}

void UnitaryRep::validate(double tol) const {
    for (size_t j = 0; j < gens_.size(); ++j) {
        if (unitarity_defect(gens_[j]) > tol) throw std::invalid_argument("UnitaryRep: generator image is not unitary");
        int d = g_.orders()[j];
        Mat p = Mat::Identity(dim_, dim_);
        for (int k = 0; k < d; ++k) p = p * gens_[j];
        if ((p - Mat::Identity(dim_, dim_)).norm() > tol)
            throw std::invalid_argument("UnitaryRep: generator image has wrong order");
        for (size_t i = 0; i < j; ++i)
            if ((gens_[i] * gens_[j] - gens_[j] * gens_[i]).norm() > tol)
                throw std::invalid_argument("UnitaryRep: generator images do not commute");
    }
}

UnitaryRep tensor(const UnitaryRep& a, const UnitaryRep& b) {
    if (!a.group().same_presentation(b.group()))
        throw std::invalid_argument("tensor(UnitaryRep): representations of different groups");
    std::vector<Mat> gens;
    for (size_t j = 0; j < a.generator_images().size(); ++j)
        gens.push_back(kron(a.generator_images()[j], b.generator_images()[j]));
    return UnitaryRep(a.group(), gens, UnitaryRep::unchecked);
}

UnitaryRep tensor_power(const UnitaryRep& r, int m) {
    if (m < 1) throw std::invalid_argument("tensor_power: exponent must be >= 1");
    UnitaryRep out = r;
    for (int i = 1; i < m; ++i) out = tensor(out, r);
    return out;
}

bool SpectralMeasure::in_support(int chi) const {
    return std::binary_search(labels.begin(), labels.end(), chi);
}

const Mat& SpectralMeasure::at(int chi) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), chi);
    if (it == labels.end() || *it != chi) throw std::domain_error("SpectralMeasure: character outside support");
    return projections[static_cast<size_t>(it - labels.begin())];
}

namespace {

// One attempt at simultaneous diagonalization; returns false when a cluster
// fails to be a joint eigenspace (the random combination was degenerate).
bool try_snag(const UnitaryRep& rep, std::uint64_t seed, SpectralMeasure& out, bool& spectral_mismatch) {
    const auto& g = rep.group();
    const Index n = rep.dim();
    RandomSource rng(seed);

    Mat h = Mat::Zero(n, n);
    for (const Mat& u : rep.generator_images()) {
        double r = rng.normal();
        double s = rng.normal();
        h += r * (u + u.adjoint()) + cplx(0, 1) * s * (u - u.adjoint());
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    const auto& ev = es.eigenvalues();
    const Mat& q = es.eigenvectors();

    std::map<int, Mat> by_label;
    Index start = 0;
    while (start < n) {
        Index end = start + 1;
        while (end < n && ev(end) - ev(end - 1) <= 1e-8) ++end;
        Mat block = q.middleCols(start, end - start);

        // label the cluster by the generator eigenvalues
        std::vector<int> digits(static_cast<size_t>(g.rank()));
        for (int j = 0; j < g.rank(); ++j) {
            Mat s = block.adjoint() * rep.generator_images()[static_cast<size_t>(j)] * block;
            cplx lambda = s.trace() / static_cast<double>(end - start);
            if ((s - lambda * Mat::Identity(s.rows(), s.cols())).norm() > 1e-8 * std::sqrt(static_cast<double>(s.rows())))
                return false;  // cluster mixes two labels; retry with a new combination
            int d = g.orders()[static_cast<size_t>(j)];
            double angle = -std::arg(lambda) * d / (2.0 * kPi);
            int digit = static_cast<int>(std::llround(angle)) % d;
            if (digit < 0) digit += d;
            double theta = -2.0 * kPi * digit / d;
            if (std::abs(lambda - cplx(std::cos(theta), std::sin(theta))) > 1e-8) {
                spectral_mismatch = true;
                return false;
            }
            digits[static_cast<size_t>(j)] = digit;
        }
        int chi = g.index_of(digits);
        Mat proj = block * block.adjoint();
        auto it = by_label.find(chi);
        if (it == by_label.end())
            by_label.emplace(chi, proj);
        else
            it->second += proj;
        start = end;
    }

    out.labels.clear();
    out.projections.clear();
    for (auto& [chi, proj] : by_label) {
        out.labels.push_back(chi);
        out.projections.push_back(proj);
    }
    return true;
}

}  // namespace

SpectralMeasure snag_decompose(const UnitaryRep& rep, std::uint64_t seed) {
    rep.validate();
    SpectralMeasure out{DualGroup(rep.group()), {}, {}};
    bool spectral_mismatch = false;
    for (int attempt = 0; attempt < 4; ++attempt) {
        if (try_snag(rep, RandomSource::derive(seed, static_cast<std::uint64_t>(attempt)), out, spectral_mismatch)) return out;
        if (spectral_mismatch) throw std::runtime_error("snag_decompose: eigenvalue is not a root of unity of the required order");
    }
    throw std::runtime_error("snag_decompose: simultaneous diagonalization failed to separate labels");
}

std::map<int, int> rep_multiplicities(const UnitaryRep& rep) {
    SpectralMeasure e = snag_decompose(rep);
    std::map<int, int> m;
    for (size_t i = 0; i < e.labels.size(); ++i)
        m[e.labels[i]] = static_cast<int>(std::llround(e.projections[i].trace().real()));
    return m;
}

bool quasi_equivalent(const UnitaryRep& a, const UnitaryRep& b) {
    if (!a.group().same_presentation(b.group()))
        throw std::invalid_argument("quasi_equivalent: representations of different groups");
    auto ma = rep_multiplicities(a);
    auto mb = rep_multiplicities(b);
    std::vector<int> sa, sb;
    for (auto& [chi, m] : ma)
        if (m > 0) sa.push_back(chi);
    for (auto& [chi, m] : mb)
        if (m > 0) sb.push_back(chi);
    return sa == sb;
}

UnitaryRep random_rep(const FiniteAbelianGroup& g, Index dim, RandomSource& rng) {
    DualGroup dual(g);
    std::vector<int> chis;
    for (Index i = 0; i < dim; ++i) chis.push_back(rng.uniform_int(0, g.size() - 1));
    Mat q = rng.random_unitary(dim);
    std::vector<Mat> gens;
    for (int j = 0; j < g.rank(); ++j) {
        Vec d(dim);
        for (Index i = 0; i < dim; ++i) d(i) = std::conj(dual.pair(chis[static_cast<size_t>(i)], g.generator(j)));
        gens.push_back(q * d.asDiagonal() * q.adjoint());
    }
    return UnitaryRep(g, gens, UnitaryRep::unchecked);
}

}  // namespace mmd
