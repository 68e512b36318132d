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

#include "mmd/kt.hpp"
#include "mmd/operator.hpp"

namespace mmd {

/**
 * N-stage amplification cascade: the coupling writes the measured character
 * into the first pointer register and the dual K-T operator copies it down
 * the chain, turning xi = sum_gamma c_gamma xi_gamma into
 * sum_gamma c_gamma xi_gamma (x) |gamma>^(x)N.
 */
struct CascadeConfig {
    UnitaryRep rep;
    int stages = 1;             // N >= 1
    Index max_dim = 16384;      // cap on dim(H) * |Uhat|^N for the dense path

    CascadeConfig(UnitaryRep r, int n, Index cap = 16384);
    Index dense_dim() const;
    std::vector<Index> dims() const;  // [dim H, m, ..., m]
};

/// State on H (x) l2(Uhat)^(x)N with named legs (sys, p1, ..., pN).
struct CascadeState {
    Vec v;
    Index sys_dim = 0;
    int pointer_dim = 0;
    int stages = 0;

    std::vector<Index> dims() const;
};

struct Branch {
    int gamma = 0;
    double amplitude = 0;  // |c_gamma|, the phase is carried by the component
    Vec system_component;  // unit vector
};

/// Dense path: V_{N,N+1} ... V_23 UtildeV_12 (xi (x) |iota>^(x)N).
CascadeState amplify(const Vec& xi, const CascadeConfig& cfg);

/// Analytic path: the branch list (c_gamma, xi_gamma) from the spectral
/// split of xi; valid for any N without touching the dense space.
std::vector<Branch> amplify_branches(const Vec& xi, const CascadeConfig& cfg);

/// Assemble the dense state sum c_gamma xi_gamma (x) |gamma>^(x)N.
CascadeState state_from_branches(const std::vector<Branch>& branches, const CascadeConfig& cfg);

/// Per-branch amplitude and system component of a cascade-shaped state.
/// Throws std::runtime_error when more than 1e-9 of the squared norm sits
/// outside the consensus pointer patterns |gamma>^(x)N.
std::vector<Branch> branch_decompose(const CascadeState& s);

/// Exact inverse cascade; fidelity against xi (x) |iota>^(x)N is the
/// unitarity check.
Vec recover(const CascadeState& s, const CascadeConfig& cfg);

/// Partial trace of the amplified state over all pointer registers.
DensityState decohered_state(const Vec& xi, const CascadeConfig& cfg);

/// Outcome distribution of a single pointer register (register index in
/// 1..N), and the joint distribution of two registers.
std::vector<double> pointer_marginal(const CascadeState& s, int reg);
Mat pointer_joint(const CascadeState& s, int reg_a, int reg_b);  // real entries

/**
 * Heisenberg-picture chain map
 *   UtildeV_12^* V_23^* ... V_{N,N+1}^* (A (x) f_2 (x) ... (x) f_{N+1}) V_{N,N+1} ... V_23 UtildeV_12
 * for multiplication operators f (diagonal matrices on l2(Uhat)); throws
 * std::domain_error on a non-diagonal f.
 */
Mat heisenberg_chain(const Mat& a, const std::vector<Mat>& fs, const CascadeConfig& cfg);

/// Same map evaluated through the nested form
/// Ad(UtildeV^*)(A (x) Ad(V^*)(f_2 (x) ... Ad(V^*)(f_N (x) f_{N+1}) ... )).
Mat heisenberg_chain_nested(const Mat& a, const std::vector<Mat>& fs, const CascadeConfig& cfg);

}  // namespace mmd
