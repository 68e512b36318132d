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

#include <algorithm>

#include "mmd/amplifier.hpp"
#include "mmd/instrument.hpp"
#include "mmd/rng.hpp"
#include "test_util.hpp"

using namespace mmd;
using namespace mmd::test;

namespace {

UnitaryRep sigma_z_rep() {
    return UnitaryRep(FiniteAbelianGroup({2}), {pauli_z()});
}

Vec neutral_state(const Vec& xi, int pointer_dim, int stages) {
    Vec iota = Vec::Zero(pointer_dim);
    iota(0) = 1;
    Vec out = xi;
    for (int k = 0; k < stages; ++k) out = kron(out, iota);
    return out;
}

}  // namespace

TEST_CASE("cascade on eigenvectors and the ghz output") {
    UnitaryRep rep = sigma_z_rep();

    // an eigenvector produces a single branch, exactly
    for (int stages : {1, 2, 4}) {
        CascadeConfig cfg(rep, stages);
        CascadeState s = amplify(basis_vec(2, 1), cfg);
        Vec gamma = basis_vec(2, 1);  // sign character
        Vec expected = basis_vec(2, 1);
        for (int k = 0; k < stages; ++k) expected = kron(expected, gamma);
        CHECK(close(s.v, expected, 1e-12));
    }

    // |+> with two registers is the two-branch consensus state
    Vec plus = (basis_vec(2, 0) + basis_vec(2, 1)) / std::sqrt(2.0);
    CascadeConfig cfg(rep, 2);
    CascadeState s = amplify(plus, cfg);
    Vec expected = (kron(kron(Vec(basis_vec(2, 0)), Vec(basis_vec(2, 0))), Vec(basis_vec(2, 0))) +
                    kron(kron(Vec(basis_vec(2, 1)), Vec(basis_vec(2, 1))), Vec(basis_vec(2, 1)))) /
                   std::sqrt(2.0);
    CHECK(close(s.v, expected, 1e-12));

    // one register reduces to the coupling alone
    CascadeConfig cfg1(rep, 1);
    CHECK(close(amplify(plus, cfg1).v, Vec(coupling_utilde_v(rep).m * neutral_state(plus, 2, 1)), 1e-12));

    CHECK_THROWS_AS(CascadeConfig(rep, 0), std::invalid_argument);
}

TEST_CASE("branch decomposition") {
    UnitaryRep rep = sigma_z_rep();
    CascadeConfig cfg(rep, 3);

    auto single = branch_decompose(amplify(basis_vec(2, 0), cfg));
    CHECK(single.size() == 1);
    CHECK(close(single[0].amplitude, 1.0));
    CHECK(single[0].gamma == 0);

    Vec plus = (basis_vec(2, 0) + basis_vec(2, 1)) / std::sqrt(2.0);
    auto two = branch_decompose(amplify(plus, cfg));
    CHECK(two.size() == 2);
    for (const auto& b : two) CHECK(close(b.amplitude, 1.0 / std::sqrt(2.0), 1e-12));

    // a flipped pointer register breaks the branch form
    Vec mismatched = kron(Vec(basis_vec(2, 0)), kron(Vec(basis_vec(2, 0)), Vec(basis_vec(2, 1))));
    CascadeState broken{mismatched, 2, 2, 2};
    CHECK_THROWS_AS(branch_decompose(broken), std::runtime_error);
}

TEST_CASE("branch theorem against the analytic path on seeded states") {
    RandomSource rng(4);
    for (const auto& orders : {std::vector<int>{2}, {3}, {4}, {2, 2}}) {
        FiniteAbelianGroup g(orders);
        UnitaryRep rep = random_rep(g, 3, rng);
        for (int stages : {1, 2, 3}) {
            CascadeConfig cfg(rep, stages);
            for (int trial = 0; trial < 5; ++trial) {
                Vec xi = rng.random_state(3);
                CascadeState dense = amplify(xi, cfg);
                CHECK(std::abs(dense.v.norm() - 1.0) <= 1e-10);
                CascadeState rebuilt = state_from_branches(amplify_branches(xi, cfg), cfg);
                CHECK((dense.v - rebuilt.v).norm() <= 1e-9);
            }
        }
    }
}

TEST_CASE("recovery undoes the cascade") {
    RandomSource rng(9);
    UnitaryRep rep = sigma_z_rep();
    CascadeConfig cfg(rep, 4);

    // single-branch state comes back to the neutral pointer configuration
    Vec eigen_recovered = recover(amplify(basis_vec(2, 1), cfg), cfg);
    CHECK(close(eigen_recovered, neutral_state(basis_vec(2, 1), 2, 4), 1e-12));
    for (int trial = 0; trial < 5; ++trial) {
        Vec xi = rng.random_state(2);
        CascadeState s = amplify(xi, cfg);
        Vec recovered = recover(s, cfg);
        Vec expected = neutral_state(xi, 2, 4);
        CHECK(std::abs(std::abs(expected.dot(recovered)) - 1.0) <= 1e-10);
        CHECK(close(recovered, expected, 1e-10));

        // amplify-recover twice is still the identity
        CascadeState s2 = amplify(xi, cfg);
        Vec r2 = recover(s2, cfg);
        CHECK(close(r2, expected, 1e-10));
    }
}

TEST_CASE("decoherence of the system after amplification") {
    UnitaryRep rep = sigma_z_rep();

    DensityState pure = decohered_state(basis_vec(2, 1), CascadeConfig(rep, 2));
    CHECK(close(pure.rho, Mat(basis_vec(2, 1) * basis_vec(2, 1).adjoint()), 1e-12));

    Vec plus = (basis_vec(2, 0) + basis_vec(2, 1)) / std::sqrt(2.0);
    for (int stages : {1, 2, 3}) {
        DensityState rho = decohered_state(plus, CascadeConfig(rep, stages));
        CHECK(close(rho.rho, Mat(Mat::Identity(2, 2) / 2.0), 1e-10));
    }

    // branch mixture for a seeded representation
    RandomSource rng(14);
    FiniteAbelianGroup z3({3});
    UnitaryRep rep3 = random_rep(z3, 3, rng);
    Vec xi = rng.random_state(3);
    DensityState rho = decohered_state(xi, CascadeConfig(rep3, 2));
    Mat expected = Mat::Zero(3, 3);
    for (const Branch& b : amplify_branches(xi, CascadeConfig(rep3, 2)))
        expected += (b.amplitude * b.amplitude) * b.system_component * b.system_component.adjoint();
    CHECK(close(rho.rho, expected, 1e-10));
}

TEST_CASE("pointer marginals agree with the instrument distribution") {
    RandomSource rng(21);
    for (const auto& orders : {std::vector<int>{2}, {4}, {2, 2}}) {
        FiniteAbelianGroup g(orders);
        UnitaryRep rep = random_rep(g, 4, rng);
        Instrument inst(rep);
        CascadeConfig cfg(rep, 3);
        Vec xi = rng.random_state(4);
        DensityState omega{xi * xi.adjoint(), {4}};
        CascadeState s = amplify(xi, cfg);
        for (int reg = 1; reg <= 3; ++reg) {
            auto marginal = pointer_marginal(s, reg);
            for (int chi = 0; chi < g.size(); ++chi) {
                double p = inst.spectral().in_support(chi) ? inst.probability(omega, {chi}) : 0.0;
                CHECK(close(marginal[static_cast<size_t>(chi)], p, 1e-10));
            }
        }
        Mat joint = pointer_joint(s, 1, 3);
        double offdiag = 0;
        for (Index a = 0; a < joint.rows(); ++a)
            for (Index b = 0; b < joint.cols(); ++b)
                if (a != b) offdiag += joint(a, b).real();
        CHECK(offdiag <= 1e-10);
    }
}

TEST_CASE("heisenberg chain map") {
    UnitaryRep rep = sigma_z_rep();

    // trivial pointer observables leave A (x) 1 for A in the measured
    // algebra (A commuting with the spectral projections; a generic A picks
    // up the coupling, which the duality checks below confirm)
    CascadeConfig cfg(rep, 3);
    Mat chain = heisenberg_chain(pauli_z(), {Mat::Identity(2, 2), Mat::Identity(2, 2), Mat::Identity(2, 2)}, cfg);
    CHECK(close(chain, kron(pauli_z(), Mat(Mat::Identity(8, 8))), 1e-10));

    // N = 1 with an indicator reads out one character and compresses A
    CascadeConfig cfg1(rep, 1);
    Mat indicator = Mat::Zero(2, 2);
    indicator(0, 0) = 1;  // the identity character
    Mat chain1 = heisenberg_chain(pauli_x(), {indicator}, cfg1);
    SpectralMeasure e = snag_decompose(rep);
    // duality against the state side fixes the compressed form
    RandomSource rng(33);
    for (int trial = 0; trial < 5; ++trial) {
        Vec xi = rng.random_state(2);
        Vec amp = amplify(xi, cfg1).v;
        cplx lhs = amp.dot(kron(pauli_x(), indicator) * amp);
        Vec neutral = neutral_state(xi, 2, 1);
        cplx rhs = neutral.dot(chain1 * neutral);
        CHECK(close(lhs, rhs, 1e-10));
        cplx compressed = xi.dot(Mat(e.at(0) * pauli_x() * e.at(0)) * xi);
        CHECK(close(lhs, compressed, 1e-10));
    }

    // A = 1: the chain spectrum consists of products of f-values
    FiniteAbelianGroup z2({2});
    Mat f2 = Mat::Zero(2, 2);
    f2(0, 0) = 2;
    f2(1, 1) = 3;
    Mat f3 = Mat::Zero(2, 2);
    f3(0, 0) = -1;
    f3(1, 1) = 5;
    CascadeConfig cfg2(rep, 2);
    Mat chain2 = heisenberg_chain(Mat::Identity(2, 2), {f2, f3}, cfg2);
    Eigen::SelfAdjointEigenSolver<Mat> es((chain2 + chain2.adjoint()) / 2.0);
    std::vector<double> expected;
    for (double a : {2.0, 3.0})
        for (double b : {-1.0, 5.0}) {
            expected.push_back(a * b);
            expected.push_back(a * b);  // system leg doubles every product
        }
    std::sort(expected.begin(), expected.end());
    Eigen::VectorXd got = es.eigenvalues();
    for (Index i = 0; i < got.size(); ++i) CHECK(close(got(i), expected[static_cast<size_t>(i)], 1e-9));

    // non-diagonal pointer operators are rejected
    CHECK_THROWS_AS(heisenberg_chain(pauli_x(), {pauli_x()}, cfg1), std::domain_error);
}

TEST_CASE("nested form of the chain map and schrodinger-heisenberg duality") {
    RandomSource rng(55);
    for (const auto& orders : {std::vector<int>{2}, {3}}) {
        FiniteAbelianGroup g(orders);
        UnitaryRep rep = random_rep(g, 2, rng);
        for (int stages : {1, 2, 3}) {
            CascadeConfig cfg(rep, stages);
            Mat a = rng.gaussian(2, 2);
            std::vector<Mat> fs;
            for (int k = 0; k < stages; ++k) {
                Mat f = Mat::Zero(g.size(), g.size());
                for (int i = 0; i < g.size(); ++i) f(i, i) = rng.complex_normal();
                fs.push_back(f);
            }
            Mat direct = heisenberg_chain(a, fs, cfg);
            Mat nested = heisenberg_chain_nested(a, fs, cfg);
            CHECK((direct - nested).norm() <= 1e-10);

            Mat observable = a;
            for (const Mat& f : fs) observable = kron(observable, f);
            for (int trial = 0; trial < 3; ++trial) {
                Vec xi = rng.random_state(2);
                Vec amp = amplify(xi, cfg).v;
                Vec neutral = neutral_state(xi, g.size(), stages);
                cplx state_side = amp.dot(observable * amp);
                cplx heisenberg_side = neutral.dot(direct * neutral);
                CHECK(close(state_side, heisenberg_side, 1e-10));
            }
        }
    }
}

TEST_CASE("dense cascade respects the dimension cap") {
    UnitaryRep rep = sigma_z_rep();
    CascadeConfig tight(rep, 3, 8);  // 2 * 2^3 = 16 > 8
    CHECK_THROWS_AS(amplify(basis_vec(2, 0), tight), std::runtime_error);
    CHECK_NOTHROW(amplify_branches(basis_vec(2, 0), tight));
}
