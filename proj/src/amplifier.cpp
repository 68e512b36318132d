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

#include "mmd/amplifier.hpp"

#include <stdexcept>

#include "mmd/legs.hpp"

namespace mmd {

CascadeConfig::CascadeConfig(UnitaryRep r, int n, Index cap) : rep(std::move(r)), stages(n), max_dim(cap) {
    if (stages < 1) throw std::invalid_argument("CascadeConfig: at least one pointer register required");
}

Index CascadeConfig::dense_dim() const {
    Index d = rep.dim();
    for (int i = 0; i < stages; ++i) {
        d *= rep.group().size();
        if (d > (Index(1) << 40)) return d;  // avoid overflow in pathological configs
    }
    return d;
}

std::vector<Index> CascadeConfig::dims() const {
    std::vector<Index> out{rep.dim()};
    out.insert(out.end(), static_cast<size_t>(stages), static_cast<Index>(rep.group().size()));
    return out;
}

std::vector<Index> CascadeState::dims() const {
    std::vector<Index> out{sys_dim};
    out.insert(out.end(), static_cast<size_t>(stages), static_cast<Index>(pointer_dim));
    return out;
}

CascadeState amplify(const Vec& xi, const CascadeConfig& cfg) {
    if (xi.size() != cfg.rep.dim()) throw std::invalid_argument("amplify: state dimension mismatch");
    if (cfg.dense_dim() > cfg.max_dim) throw std::runtime_error("amplify: dense dimension exceeds the cap; use the analytic path");

    const int m = cfg.rep.group().size();
    const auto dims = cfg.dims();

    Vec iota = Vec::Zero(m);
    iota(0) = 1;
    Vec v = xi;
    for (int k = 0; k < cfg.stages; ++k) v = kron(v, iota);

    Mat utv = coupling_utilde_v(cfg.rep).m;
    v = apply_on_legs(utv, v, {0, 1}, dims);

    Mat vd = kt_v(DualGroup(cfg.rep.group())).dense();
    for (int k = 1; k < cfg.stages; ++k) v = apply_on_legs(vd, v, {k, k + 1}, dims);

    return {std::move(v), cfg.rep.dim(), m, cfg.stages};
}

std::vector<Branch> amplify_branches(const Vec& xi, const CascadeConfig& cfg) {
    if (xi.size() != cfg.rep.dim()) throw std::invalid_argument("amplify_branches: state dimension mismatch");
    SpectralMeasure e = snag_decompose(cfg.rep);
    std::vector<Branch> out;
    for (size_t i = 0; i < e.labels.size(); ++i) {
        Vec w = e.projections[i] * xi;
        double c = w.norm();
        if (c > 1e-12) out.push_back({e.labels[i], c, w / c});
    }
    return out;
}

CascadeState state_from_branches(const std::vector<Branch>& branches, const CascadeConfig& cfg) {
    if (cfg.dense_dim() > cfg.max_dim) throw std::runtime_error("state_from_branches: dense dimension exceeds the cap");
    const int m = cfg.rep.group().size();
    Vec v = Vec::Zero(cfg.dense_dim());
    for (const Branch& b : branches) {
        Vec gamma = Vec::Zero(m);
        gamma(b.gamma) = 1;
        Vec term = b.system_component * b.amplitude;
        for (int k = 0; k < cfg.stages; ++k) term = kron(term, gamma);
        v += term;
    }
    return {std::move(v), cfg.rep.dim(), m, cfg.stages};
}

std::vector<Branch> branch_decompose(const CascadeState& s) {
    const int m = s.pointer_dim;
    LegTable t(s.dims(), {0});
    std::vector<Branch> out;
    double captured = 0;
    for (int gamma = 0; gamma < m; ++gamma) {
        // rest index of the pattern (gamma, gamma, ..., gamma)
        Index rest = 0;
        for (int k = 0; k < s.stages; ++k) rest = rest * m + gamma;
        Vec w(s.sys_dim);
        for (Index i = 0; i < s.sys_dim; ++i) w(i) = s.v(t.flat(i, rest));
        double c = w.norm();
        captured += c * c;
        if (c > 1e-12) out.push_back({gamma, c, w / c});
    }
    if (std::abs(s.v.squaredNorm() - captured) > 1e-9)
        throw std::runtime_error("branch_decompose: state is not of cascade branch form");
    return out;
}

Vec recover(const CascadeState& s, const CascadeConfig& cfg) {
    const auto dims = s.dims();
    Mat vd = kt_v(DualGroup(cfg.rep.group())).dense();
    Vec v = s.v;
    for (int k = cfg.stages - 1; k >= 1; --k) v = apply_on_legs(vd.adjoint(), v, {k, k + 1}, dims);
    Mat utv = coupling_utilde_v(cfg.rep).m;
    return apply_on_legs(utv.adjoint(), v, {0, 1}, dims);
}

DensityState decohered_state(const Vec& xi, const CascadeConfig& cfg) {
    CascadeState s = amplify(xi, cfg);
    Mat rho = pure_partial_trace(s.v, {0}, s.dims());
    return {rho, {s.sys_dim}};
}

std::vector<double> pointer_marginal(const CascadeState& s, int reg) {
    if (reg < 1 || reg > s.stages) throw std::invalid_argument("pointer_marginal: register out of range");
    LegTable t(s.dims(), {reg});
    std::vector<double> p(static_cast<size_t>(s.pointer_dim), 0.0);
    for (Index g = 0; g < s.pointer_dim; ++g)
        for (Index r = 0; r < t.rest_dim(); ++r) p[static_cast<size_t>(g)] += std::norm(s.v(t.flat(g, r)));
    return p;
}

Mat pointer_joint(const CascadeState& s, int reg_a, int reg_b) {
    if (reg_a < 1 || reg_a > s.stages || reg_b < 1 || reg_b > s.stages || reg_a == reg_b)
        throw std::invalid_argument("pointer_joint: bad register pair");
    LegTable t(s.dims(), {reg_a, reg_b});
    Mat joint = Mat::Zero(s.pointer_dim, s.pointer_dim);
    for (Index a = 0; a < s.pointer_dim; ++a)
        for (Index b = 0; b < s.pointer_dim; ++b) {
            double mass = 0;
            for (Index r = 0; r < t.rest_dim(); ++r) mass += std::norm(s.v(t.flat(a * s.pointer_dim + b, r)));
            joint(a, b) = mass;
        }
    return joint;
}

namespace {

void require_multiplication_operators(const std::vector<Mat>& fs, int m) {
    for (const Mat& f : fs) {
        if (f.rows() != m || f.cols() != m) throw std::invalid_argument("heisenberg_chain: pointer operator dimension mismatch");
        for (Index i = 0; i < f.rows(); ++i)
            for (Index j = 0; j < f.cols(); ++j)
                if (i != j && f(i, j) != cplx(0, 0))
                    throw std::domain_error("heisenberg_chain: pointer operators must be multiplication (diagonal) operators");
    }
}

}  // namespace

Mat heisenberg_chain(const Mat& a, const std::vector<Mat>& fs, const CascadeConfig& cfg) {
    const int m = cfg.rep.group().size();
    if (static_cast<int>(fs.size()) != cfg.stages) throw std::invalid_argument("heisenberg_chain: one pointer operator per stage required");
    if (a.rows() != cfg.rep.dim() || a.cols() != cfg.rep.dim()) throw std::invalid_argument("heisenberg_chain: system operator dimension mismatch");
    require_multiplication_operators(fs, m);
    if (cfg.dense_dim() > cfg.max_dim) throw std::runtime_error("heisenberg_chain: dense dimension exceeds the cap");

    const auto dims = cfg.dims();
    Mat observable = a;
    for (const Mat& f : fs) observable = kron(observable, f);

    Mat utv = embed_on_legs(coupling_utilde_v(cfg.rep).m, {0, 1}, dims);
    Mat vd = kt_v(DualGroup(cfg.rep.group())).dense();

    Mat forward = utv;
    for (int k = 1; k < cfg.stages; ++k) forward = embed_on_legs(vd, {k, k + 1}, dims) * forward;
    return forward.adjoint() * observable * forward;
}

Mat heisenberg_chain_nested(const Mat& a, const std::vector<Mat>& fs, const CascadeConfig& cfg) {
    const int m = cfg.rep.group().size();
    if (static_cast<int>(fs.size()) != cfg.stages) throw std::invalid_argument("heisenberg_chain_nested: one pointer operator per stage required");
    require_multiplication_operators(fs, m);
    if (cfg.dense_dim() > cfg.max_dim) throw std::runtime_error("heisenberg_chain_nested: dense dimension exceeds the cap");

    Mat vd = kt_v(DualGroup(cfg.rep.group())).dense();
    // innermost pointer operator outward: X_k = Ad(V^*)(f_k (x) X_{k+1})
    Mat x = fs.back();
    for (int k = cfg.stages - 2; k >= 0; --k) {
        Mat combined = kron(fs[static_cast<size_t>(k)], x);
        std::vector<Index> dims(static_cast<size_t>(cfg.stages - k), static_cast<Index>(m));
        Mat v_embedded = embed_on_legs(vd, {0, 1}, dims);
        x = v_embedded.adjoint() * combined * v_embedded;
    }
    Mat combined = kron(a, x);
    Mat utv = embed_on_legs(coupling_utilde_v(cfg.rep).m, {0, 1}, cfg.dims());
    return utv.adjoint() * combined * utv;
}

}  // namespace mmd
