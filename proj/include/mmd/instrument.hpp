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

#include <vector>

#include "mmd/algebra.hpp"
#include "mmd/kt.hpp"
#include "mmd/operator.hpp"

namespace mmd {

/// Positive operator-valued measure: effects summing to the identity,
/// keyed by outcome label.
struct POVM {
    std::vector<int> labels;
    std::vector<Mat> effects;

    Index dim() const { return effects.empty() ? 0 : effects.front().rows(); }
    void check(double tol = 1e-10) const;  // psd, completeness
};

/// Isometry into system (x) outcome space together with the projective
/// measure that compresses back to the POVM.
struct NaimarkDilation {
    Mat isometry;                 // (d*k) x d
    std::vector<Mat> projections;  // 1 (x) |e_i><e_i|, k of them
};

/**
 * Measurement instrument for an abelian algebra A = U'' inside a factor M.
 * Probabilities and posteriors are evaluated from the defining coupling
 * sandwich with the pointer prepared in the neutral position: the invariant
 * mean over U equals the vector state of the uniform vector, whose Fourier
 * transform is the point mass at the identity character, so the pointer
 * state is |iota> in l2(Uhat).
 */
class Instrument {
  public:
    /// System algebra defaults to the full matrix algebra on the rep space.
    explicit Instrument(const UnitaryRep& rep);
    Instrument(MatrixStarAlgebra system, const UnitaryRep& rep);

    const UnitaryRep& rep() const { return rep_; }
    const SpectralMeasure& spectral() const { return spectral_; }
    const MatrixStarAlgebra& system_algebra() const { return system_; }
    const MatrixStarAlgebra& measured_algebra() const { return measured_; }
    const Mat& coupling() const { return coupling_; }  // UtildeW, dense
    bool measured_is_masa() const { return masa_; }
    std::vector<int> support() const { return spectral_.support(); }
    Index dim() const { return rep_.dim(); }

    /// (omega (x) m_U)( UtildeW (M (x) chi_Delta) UtildeW^* ).
    cplx apply(const DensityState& omega, const std::vector<int>& delta, const Mat& observable) const;

    /// p(Delta | omega) = apply with the identity observable.
    double probability(const DensityState& omega, const std::vector<int>& delta) const;

    /// Normalized post-measurement state; throws std::runtime_error when
    /// p(Delta | omega) <= 1e-12.
    DensityState posterior(const DensityState& omega, const std::vector<int>& delta) const;

    /// Effects F_chi with p({chi}|omega) = tr(omega F_chi), one per support point.
    POVM povm_effects() const;

  private:
    void validate_delta(const std::vector<int>& delta) const;
    Mat heisenberg_image(const std::vector<int>& delta, const Mat& observable) const;
    Mat conditioned_state(const DensityState& omega, const std::vector<int>& delta) const;  // unnormalized

    MatrixStarAlgebra system_;
    MatrixStarAlgebra measured_;
    UnitaryRep rep_;
    SpectralMeasure spectral_;
    Mat coupling_;  // UtildeW
    bool masa_ = false;
};

/// Isometry V xi = sum_i (sqrt(F_i) xi) (x) e_i with projections
/// P_i = 1 (x) |e_i><e_i|; then V^* P_i V = F_i and V^* V = 1.
NaimarkDilation naimark_dilate(const POVM& povm);

}  // namespace mmd
