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

#include <cmath>
#include <cstdint>
#include <random>

#include "mmd/linalg.hpp"

namespace mmd {

// Deterministic random source. Every draw is derived from the seed alone
// (no library distributions, which are implementation-defined), so a report
// quoting its seed can be reproduced bit for bit.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        double r = std::sqrt(-2.0 * std::log(u1));
        have_spare_ = true;
        spare_ = r * std::sin(2.0 * kPi * u2);
        return r * std::cos(2.0 * kPi * u2);
    }

    cplx complex_normal() {
        double re = normal();
        double im = normal();
        return {re, im};
    }

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Mat gaussian(Index rows, Index cols) {
        Mat m(rows, cols);
        for (Index j = 0; j < cols; ++j)
            for (Index i = 0; i < rows; ++i) m(i, j) = complex_normal();
        return m;
    }

    /// Haar-ish random unitary: QR of a Gaussian with the R-diagonal phases
    /// absorbed, which makes the draw independent of the QR sign convention.
    Mat random_unitary(Index n) {
        Mat g = gaussian(n, n);
        Eigen::HouseholderQR<Mat> qr(g);
        Mat q = qr.householderQ() * Mat::Identity(n, n);
        Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Index i = 0; i < n; ++i) {
            cplx d = r(i, i);
            double a = std::abs(d);
            q.col(i) *= (a > 0) ? d / a : cplx(1, 0);
        }
        return q;
    }

    Vec random_state(Index n) {
        Vec v(n);
        for (Index i = 0; i < n; ++i) v(i) = complex_normal();
        return v / v.norm();
    }

    Mat random_density(Index n) {
        Mat a = gaussian(n, n);
        Mat rho = a * a.adjoint();
        return rho / rho.trace().real();
    }

    Mat random_hermitian(Index n) {
        Mat a = gaussian(n, n);
        return (a + a.adjoint()) / 2.0;
    }

    /// Independent stream derived from this seed and a salt (splitmix64).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace mmd
