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

#include <doctest.h>

#include "mmd/kt.hpp"
#include "mmd/operator.hpp"
#include "mmd/rng.hpp"
#include "test_util.hpp"

using namespace mmd;
using namespace mmd::test;

TEST_CASE("tensor products") {
    Operator a = Operator::identity({2});
    Operator b = Operator::identity({3});
    Operator ab = tensor(a, b);
    CHECK(ab.signature == std::vector<Index>{2, 3});
    CHECK(close(ab.m, Mat::Identity(6, 6)));

    // (a (x) b)(c (x) d) = ac (x) bd
    RandomSource rng(3);
    Mat c = rng.gaussian(2, 2), d = rng.gaussian(3, 3), e = rng.gaussian(2, 2), f = rng.gaussian(3, 3);
    CHECK(close(kron(c, d) * kron(e, f), kron(Mat(c * e), Mat(d * f)), 1e-12));

    // sigma_z (x) sigma_z fixes |11>
    Vec v11 = kron(Vec(basis_vec(2, 1)), Vec(basis_vec(2, 1)));
    CHECK(close(Vec(kron(pauli_z(), pauli_z()) * v11), v11, 1e-14));
}

TEST_CASE("partial trace") {
    RandomSource rng(11);
    DensityState r1{rng.random_density(2), {2}};
    DensityState r2{rng.random_density(3), {3}};
    DensityState prod = tensor(r1, r2);
    CHECK(close(partial_trace(prod, {0}).rho, r1.rho, 1e-12));
    CHECK(close(partial_trace(prod, {1}).rho, r2.rho, 1e-12));

    // maximally entangled pair traces to the maximally mixed state
    Vec bell = (kron(Vec(basis_vec(2, 0)), Vec(basis_vec(2, 0))) + kron(Vec(basis_vec(2, 1)), Vec(basis_vec(2, 1)))) / std::sqrt(2.0);
    DensityState bell_rho{bell * bell.adjoint(), {2, 2}};
    CHECK(close(partial_trace(bell_rho, {0}).rho, Mat(Mat::Identity(2, 2) / 2.0), 1e-12));

    // GHZ-type branch state: tracing out the copies leaves the mixture
    cplx c0(0.6, 0.0), c1(0.0, 0.8);
    Vec ghz = c0 * kron(kron(Vec(basis_vec(2, 0)), Vec(basis_vec(2, 0))), Vec(basis_vec(2, 0))) +
              c1 * kron(kron(Vec(basis_vec(2, 1)), Vec(basis_vec(2, 1))), Vec(basis_vec(2, 1)));
    DensityState ghz_rho{ghz * ghz.adjoint(), {2, 2, 2}};
    Mat expected = std::norm(c0) * basis_vec(2, 0) * basis_vec(2, 0).adjoint() +
                   std::norm(c1) * basis_vec(2, 1) * basis_vec(2, 1).adjoint();
    CHECK(close(partial_trace(ghz_rho, {0}).rho, expected, 1e-12));

    CHECK_THROWS_AS(partial_trace(ghz_rho, {0, 5}), std::invalid_argument);

    // trace and positivity are preserved
    DensityState mixed{rng.random_density(6), {2, 3}};
    DensityState reduced = partial_trace(mixed, {0});
    CHECK(close(reduced.rho.trace(), cplx(1, 0), 1e-12));
    Eigen::SelfAdjointEigenSolver<Mat> es(reduced.rho);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
}

TEST_CASE("unitary representation validation") {
    FiniteAbelianGroup z2({2});
    CHECK_NOTHROW(UnitaryRep(z2, {pauli_z()}));
    CHECK_THROWS_AS(UnitaryRep(z2, {Mat(2 * pauli_z())}), std::invalid_argument);  // not unitary

    Mat z4rot(2, 2);
    z4rot << cplx(0, 1), 0, 0, 1;
    CHECK_THROWS_AS(UnitaryRep(z2, {z4rot}), std::invalid_argument);  // wrong order

    FiniteAbelianGroup z22({2, 2});
    UnitaryRep bad(z22, {pauli_z(), pauli_x()}, UnitaryRep::unchecked);  // anticommuting pair
    CHECK_THROWS_AS(snag_decompose(bad), std::invalid_argument);
}

TEST_CASE("snag decomposition on hand-checked cases") {
    FiniteAbelianGroup z2({2});

    SpectralMeasure e = snag_decompose(UnitaryRep(z2, {pauli_z()}));
    CHECK(e.labels == std::vector<int>{0, 1});
    CHECK(close(e.at(0), Mat(basis_vec(2, 0) * basis_vec(2, 0).adjoint()), 1e-12));
    CHECK(close(e.at(1), Mat(basis_vec(2, 1) * basis_vec(2, 1).adjoint()), 1e-12));

    SpectralMeasure t = snag_decompose(UnitaryRep::trivial(z2, 3));
    CHECK(t.labels == std::vector<int>{0});
    CHECK(close(t.at(0), Mat(Mat::Identity(3, 3)), 1e-12));
    CHECK_THROWS_AS(t.at(1), std::domain_error);

    Mat block = Mat::Identity(3, 3);
    block(2, 2) = -1;  // 1 (+) sigma_z
    SpectralMeasure b = snag_decompose(UnitaryRep(z2, {block}));
    CHECK(std::llround(b.at(0).trace().real()) == 2);
    CHECK(std::llround(b.at(1).trace().real()) == 1);
}

TEST_CASE("snag reconstruction and projection laws on seeded reps") {
    RandomSource rng(2024);
    for (const auto& orders : {std::vector<int>{2}, {3}, {4}, {2, 2}, {6}}) {
        FiniteAbelianGroup g(orders);
        UnitaryRep rep = random_rep(g, 5, rng);
        SpectralMeasure e = snag_decompose(rep);

        Mat sum = Mat::Zero(5, 5);
        for (size_t i = 0; i < e.labels.size(); ++i) {
            const Mat& p = e.projections[i];
            CHECK((p * p - p).norm() <= 1e-10);
            CHECK((p - p.adjoint()).norm() <= 1e-10);
            for (size_t j = 0; j < i; ++j) CHECK((p * e.projections[j]).norm() <= 1e-10);
            sum += p;
        }
        CHECK(close(sum, Mat(Mat::Identity(5, 5)), 1e-10));

        double recon = 0;
        for (int u = 0; u < g.size(); ++u) {
            Mat rebuilt = Mat::Zero(5, 5);
            for (size_t i = 0; i < e.labels.size(); ++i)
                rebuilt += std::conj(e.dual.pair(e.labels[i], u)) * e.projections[i];
            recon = std::max(recon, (rebuilt - rep.at(u)).norm());
        }
        CHECK(recon <= 1e-9);
    }
}

TEST_CASE("multiplicities and quasi-equivalence") {
    FiniteAbelianGroup z2({2});
    UnitaryRep lambda = regular_rep(z2);

    auto m1 = rep_multiplicities(lambda);
    CHECK(m1 == std::map<int, int>{{0, 1}, {1, 1}});

    auto m2 = rep_multiplicities(tensor(lambda, lambda));
    CHECK(m2 == std::map<int, int>{{0, 2}, {1, 2}});

    auto m3 = rep_multiplicities(UnitaryRep::trivial(z2, 3));
    CHECK(m3 == std::map<int, int>{{0, 3}});

    CHECK(quasi_equivalent(lambda, tensor(lambda, lambda)));
    CHECK_FALSE(quasi_equivalent(lambda, UnitaryRep::trivial(z2, 3)));
    CHECK(quasi_equivalent(lambda, lambda));
    CHECK_THROWS_AS(quasi_equivalent(lambda, regular_rep(FiniteAbelianGroup({3}))), std::invalid_argument);
}

TEST_CASE("multiplicities match brute-force character counting") {
    RandomSource rng(99);
    for (const auto& orders : {std::vector<int>{2}, {4}, {2, 2}, {3}}) {
        FiniteAbelianGroup g(orders);
        DualGroup dual(g);
        UnitaryRep rep = random_rep(g, 6, rng);
        auto mult = rep_multiplicities(rep);
        for (int chi = 0; chi < g.size(); ++chi) {
            cplx count = 0;
            for (int u = 0; u < g.size(); ++u) count += rep.at(u).trace() * dual.pair(chi, u);
            count /= static_cast<double>(g.size());
            int expected = static_cast<int>(std::llround(count.real()));
            int got = mult.count(chi) ? mult.at(chi) : 0;
            CHECK(got == expected);
        }
    }
}
