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

#include "mmd/group.hpp"
#include "mmd/operator.hpp"

namespace mmd {

/**
 * Kac-Takesaki operator on l2(G) (x) l2(G), stored as the permutation it
 * induces on product basis vectors:
 *
 *   W: (a, b) -> (a + b, b)        (from (W eta)(u, v) = eta(u - v, v))
 *   V: (a, b) -> (a, a + b)        (from (V eta)(g, x) = eta(g, g^{-1} x))
 */
struct KTOperator {
    enum class Kind { W, V };

    Kind kind;
    int group_size = 0;
    std::vector<int> perm;  // image of each product basis index

    Mat dense() const;
    int apply_index(int a, int b) const;  // image as a flat index
};

KTOperator kt_w(const FiniteAbelianGroup& g);

/// Kernel route. Must agree with the Fourier route kt_v_via_fourier.
KTOperator kt_v(const DualGroup& dual);

/// (F (x) F) W^* (F (x) F)^{-1}, computed densely.
Mat kt_v_via_fourier(const FiniteAbelianGroup& g);

/// Left regular representation: lambda_u delta_v = delta_{u+v}.
UnitaryRep regular_rep(const FiniteAbelianGroup& g);
UnitaryRep dual_regular_rep(const DualGroup& dual);

/// Translation unitary lambda_u as a dense matrix.
Mat translation_unitary(const FiniteAbelianGroup& g, int u);

/**
 * Coupling operator on H_sys (x) l2, in one of three forms:
 *   UW       on H (x) l2(U):    block diagonal over u with block U_u
 *   UtildeW  on H (x) l2(Uhat): (1 (x) F) U(W) (1 (x) F)^{-1}
 *   UtildeV  on H (x) l2(Uhat): adjoint of UtildeW
 */
struct CouplingOperator {
    enum class Form { UW, UtildeW, UtildeV };

    Form form;
    Mat m;
    Index sys_dim = 0;
    int pointer_dim = 0;
};

CouplingOperator coupling_uw(const UnitaryRep& rep);
CouplingOperator fourier_coupling(const CouplingOperator& uw, const FiniteAbelianGroup& g);
CouplingOperator coupling_utilde_v(const UnitaryRep& rep);

/// Spectral form sum_chi E(chi) (x) lambda_chi^* of the UtildeW coupling;
/// the independent route used to cross-check fourier_coupling.
Mat coupling_spectral_form(const SpectralMeasure& e);

// Relation residuals (Frobenius norms), computed column by column so the
// |U| = 16 triple-product spaces never materialize as dense matrices.

/// || W12 W23 - W23 W13 W12 ||_F on l2(U)^(x)3.
double pentagonal_residual_w(const FiniteAbelianGroup& g);

/// The pentagon V satisfies. V is flip-conjugate to the W-form operator of
/// the dual group, so its pentagon is the mirrored pattern
/// || V23 V12 - V12 V13 V23 ||_F on l2(Uhat)^(x)3.
double pentagonal_residual_v(const DualGroup& dual);

/// || U(W)12 W23 - W23 U(W)13 U(W)12 ||_F on H (x) l2(U)^(x)2.
double modified_pentagonal_residual(const UnitaryRep& rep);

/// max_u || U(W)(1 (x) lambda_u) - (U_u (x) lambda_u) U(W) ||_F.
double intertwining_residual(const UnitaryRep& rep);

double route_equality_v(const FiniteAbelianGroup& g);
double route_equality_coupling(const UnitaryRep& rep);

}  // namespace mmd
