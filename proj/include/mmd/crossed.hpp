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

#include "mmd/algebra.hpp"
#include "mmd/kt.hpp"
#include "mmd/operator.hpp"

namespace mmd {

/// Crossed product of a matrix algebra by a finite abelian group action,
/// realized on H (x) l2(U) in either of two pictures. Carries the data it
/// was generated from so the equivalence check can demand matching inputs.
struct CrossedProduct {
    enum class Picture { Schrodinger, Heisenberg };

    Picture picture;
    MatrixStarAlgebra algebra;
    MatrixStarAlgebra source;
    UnitaryRep action;
};

/// (M (x) 1) v { U_u (x) lambda_u }: couplings move the macroscopic states.
CrossedProduct build_schrodinger(const MatrixStarAlgebra& m, const UnitaryRep& rep);

/// Ad(U(W)^*)(M (x) 1) v (1 (x) lambda(U)): couplings sit in the observables.
CrossedProduct build_heisenberg(const MatrixStarAlgebra& m, const UnitaryRep& rep);

struct EquivalenceReport {
    double schrodinger_to_heisenberg = 0;  // residual after Ad(U(W)^{-1})
    double heisenberg_to_schrodinger = 0;  // residual after Ad(U(W))
    bool pass = false;
};

/// Verifies that Ad(U(W)) exchanges the two pictures as subspaces. Throws
/// std::runtime_error when the residual exceeds tol and enforce is set.
EquivalenceReport alpha_w_equivalence(const CrossedProduct& schrodinger, const CrossedProduct& heisenberg,
                                      const UnitaryRep& rep, double tol = 1e-9, bool enforce = true);

/// lambda^M(Fhat) = sum_u (Fhat(u) (x) 1)(U_u (x) lambda_u), counting measure.
Mat convolution_rep(const std::vector<Mat>& fhat, const UnitaryRep& rep);

/// Twisted convolution (F1 * F2)(u) = sum_v F1(v) alpha_v(F2(u - v)).
std::vector<Mat> convolve(const std::vector<Mat>& f1, const std::vector<Mat>& f2, const UnitaryRep& rep);

/// Center of the decoupled algebra M (x) A; equals 1 (x) A when M is a
/// factor and A is abelian (preconditions checked).
MatrixStarAlgebra coupled_center(const MatrixStarAlgebra& m, const MatrixStarAlgebra& a);

}  // namespace mmd
