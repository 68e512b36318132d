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

// Acceptance gate: one hard criterion per block, one [PASS]/[FAIL] line
// each, exit 0 only if every line passes. Tolerances are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mmd/amplifier.hpp"
#include "mmd/crossed.hpp"
#include "mmd/instrument.hpp"
#include "mmd/rng.hpp"
#include "mmd/runner.hpp"
#include "mmd/ssb.hpp"

using namespace mmd;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n" << std::flush;
    if (!pass) ++g_failures;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Vec neutral_state(const Vec& xi, int pointer_dim, int stages) {
    Vec iota = Vec::Zero(pointer_dim);
    iota(0) = 1;
    Vec out = xi;
    for (int k = 0; k < stages; ++k) out = kron(out, iota);
    return out;
}

// ---------------------------------------------------------------------------
// 1. pentagonal / modified pentagonal / intertwining over all groups <= 16

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    double worst_w = 0, worst_v = 0, worst_mod = 0, worst_int = 0;
    RandomSource rng(0x1001);
    int groups = 0;
    for (const auto& orders : all_abelian_groups_up_to(16)) {
        FiniteAbelianGroup g(orders);
        DualGroup dual(g);
        worst_w = std::max(worst_w, pentagonal_residual_w(g));
        worst_v = std::max(worst_v, pentagonal_residual_v(dual));
        for (int r = 0; r < 5; ++r) {
            UnitaryRep rep = random_rep(g, 1 + rng.uniform_int(0, 3), rng);
            worst_mod = std::max(worst_mod, modified_pentagonal_residual(rep));
            worst_int = std::max(worst_int, intertwining_residual(rep));
        }
        ++groups;
    }
    double elapsed = seconds_since(t0);
    bool pass = worst_w <= 1e-10 && worst_v <= 1e-10 && worst_mod <= 1e-10 && worst_int <= 1e-10 && elapsed <= 60.0;
    std::ostringstream d;
    d << groups << " groups, W " << fmt(worst_w) << ", V " << fmt(worst_v) << ", modified " << fmt(worst_mod)
      << ", intertwining " << fmt(worst_int) << ", " << fmt(elapsed) << " s <= 60 s";
    report(1, "pentagonal, modified pentagonal, and intertwining relations", pass, d.str());
}

// ---------------------------------------------------------------------------
// 2. instrument vs Born/Lueders oracles

void criterion_2() {
    double worst_born = 0, worst_lueders = 0;
    RandomSource rng(0x1002);
    for (const auto& orders : all_abelian_groups_up_to(8)) {
        FiniteAbelianGroup g(orders);
        std::vector<UnitaryRep> reps;
        reps.push_back(regular_rep(g));                                 // the standard coupling
        reps.push_back(random_rep(g, 1 + rng.uniform_int(0, 7), rng));  // a non-standard one, dim <= 8
        for (size_t r = 0; r < reps.size(); ++r) {
            const UnitaryRep& rep = reps[r];
            Instrument inst(rep);
            SpectralMeasure e = snag_decompose(rep);
            int states = r == 0 ? 100 : 10;
            for (int trial = 0; trial < states; ++trial) {
                DensityState omega{rng.random_density(rep.dim()), {rep.dim()}};
                for (int chi : inst.support()) {
                    double p = inst.probability(omega, {chi});
                    double born = (omega.rho * e.at(chi)).trace().real();
                    worst_born = std::max(worst_born, std::abs(p - born));
                    if (p > 1e-8) {
                        Mat lueders = e.at(chi) * omega.rho * e.at(chi) / p;
                        worst_lueders = std::max(worst_lueders, (inst.posterior(omega, {chi}).rho - lueders).norm());
                    }
                }
            }
        }
    }
    bool pass = worst_born <= 1e-10 && worst_lueders <= 1e-10;
    report(2, "instrument probabilities and posteriors match the Born/Lueders oracles", pass,
           "born " + fmt(worst_born) + ", lueders " + fmt(worst_lueders));
}

// ---------------------------------------------------------------------------
// 3 + 4. cascade branch theorem, unitarity, repeatability, consensus

struct CascadeOutcome {
    double branch = 0;
    double roundtrip = 0;
    double consensus = 0;
    int states = 0;
};

CascadeOutcome cascade_block() {
    CascadeOutcome out;
    RandomSource rng(0x1003);
    std::vector<std::vector<int>> small_groups{{1}, {2}, {3}, {4}, {2, 2}};
    for (const auto& orders : small_groups) {
        FiniteAbelianGroup g(orders);
        std::vector<UnitaryRep> reps;
        if (g.size() <= 4) reps.push_back(regular_rep(g));
        reps.push_back(random_rep(g, 4, rng));
        for (const UnitaryRep& rep : reps) {
            for (int stages = 1; stages <= 6; ++stages) {
                CascadeConfig cfg(rep, stages);
                if (cfg.dense_dim() > cfg.max_dim) continue;
                for (int trial = 0; trial < 5; ++trial) {
                    Vec xi = rng.random_state(rep.dim());
                    CascadeState s = amplify(xi, cfg);
                    CascadeState rebuilt = state_from_branches(amplify_branches(xi, cfg), cfg);
                    out.branch = std::max(out.branch, (s.v - rebuilt.v).norm());
                    Vec neutral = neutral_state(xi, g.size(), stages);
                    out.roundtrip = std::max(out.roundtrip, std::abs(1.0 - std::abs(neutral.dot(recover(s, cfg)))));
                    if (stages >= 2) {
                        for (int reg : {2, stages}) {
                            Mat joint = pointer_joint(s, 1, reg);
                            double offdiag = 0;
                            for (Index a = 0; a < joint.rows(); ++a)
                                for (Index b = 0; b < joint.cols(); ++b)
                                    if (a != b) offdiag += joint(a, b).real();
                            out.consensus = std::max(out.consensus, offdiag);
                        }
                    }
                    ++out.states;
                }
            }
        }
    }
    return out;
}

void criterion_3(const CascadeOutcome& c) {
    bool pass = c.branch <= 1e-9 && c.roundtrip <= 1e-10 && c.states >= 50;
    std::ostringstream d;
    d << c.states << " seeded states, branch " << fmt(c.branch) << ", roundtrip defect " << fmt(c.roundtrip);
    report(3, "cascade branch theorem, dense/analytic agreement, and unitary recovery", pass, d.str());
}

void criterion_4(const CascadeOutcome& c) {
    double worst_repeat = 0;
    RandomSource rng(0x1004);
    for (const auto& orders : all_abelian_groups_up_to(8)) {
        FiniteAbelianGroup g(orders);
        UnitaryRep rep = regular_rep(g);
        Instrument inst(rep);
        for (int trial = 0; trial < 20; ++trial) {
            DensityState omega{rng.random_density(rep.dim()), {rep.dim()}};
            for (int chi : inst.support()) {
                double p = inst.probability(omega, {chi});
                if (p > 1e-6)
                    worst_repeat =
                        std::max(worst_repeat, std::abs(inst.probability(inst.posterior(omega, {chi}), {chi}) - 1.0));
            }
        }
    }
    bool pass = worst_repeat <= 1e-10 && c.consensus <= 1e-10;
    report(4, "repeatability and pointer consensus", pass,
           "repeatability " + fmt(worst_repeat) + ", consensus off-diagonal " + fmt(c.consensus));
}

// ---------------------------------------------------------------------------
// 5. Schroedinger-Heisenberg duality of the chain map

void criterion_5() {
    double worst = 0;
    RandomSource rng(0x1005);
    int pairs = 0;
    // five (group, system-dim) combinations x four chain lengths = 20 pairs
    std::vector<std::pair<std::vector<int>, Index>> combos{{{2}, 0}, {{3}, 0}, {{4}, 0}, {{2, 2}, 0}, {{2}, 4}};
    for (const auto& [orders, fixed_dim] : combos) {
        FiniteAbelianGroup g(orders);
        for (int stages = 1; stages <= 4; ++stages) {
            Index dim = fixed_dim > 0 ? fixed_dim : 2 + rng.uniform_int(0, 1);
            UnitaryRep rep = random_rep(g, dim, rng);
            CascadeConfig cfg(rep, stages);
            Mat a = rng.gaussian(dim, dim);
            std::vector<Mat> fs;
            for (int k = 0; k < stages; ++k) {
                Mat f = Mat::Zero(g.size(), g.size());
                for (int i = 0; i < g.size(); ++i) f(i, i) = rng.complex_normal();
                fs.push_back(f);
            }
            Mat chain = heisenberg_chain(a, fs, cfg);
            Mat observable = a;
            for (const Mat& f : fs) observable = kron(observable, f);
            for (int trial = 0; trial < 2; ++trial) {
                Vec xi = rng.random_state(dim);
                Vec amp = amplify(xi, cfg).v;
                Vec neutral = neutral_state(xi, g.size(), stages);
                cplx state_side = amp.dot(observable * amp);
                cplx heis_side = neutral.dot(chain * neutral);
                worst = std::max(worst, std::abs(state_side - heis_side));
            }
            ++pairs;
        }
    }
    bool pass = worst <= 1e-10 && pairs >= 20;
    std::ostringstream d;
    d << pairs << " seeded (A, f) pairs, max defect " << fmt(worst);
    report(5, "state-side and observable-side chain expectations agree", pass, d.str());
}

// ---------------------------------------------------------------------------
// 6. crossed products

void criterion_6() {
    double worst_eq = 0, worst_conv = 0, worst_center = 0;
    long dim_defects = 0;
    RandomSource rng(0x1006);
    std::vector<std::vector<int>> small_groups{{1}, {2}, {3}, {4}, {2, 2}};
    for (const auto& orders : small_groups) {
        FiniteAbelianGroup g(orders);
        for (Index n = 1; n <= 4; ++n) {
            UnitaryRep rep = random_rep(g, n, rng);
            MatrixStarAlgebra m = full_matrix_algebra(n);
            CrossedProduct cps = build_schrodinger(m, rep);
            CrossedProduct cph = build_heisenberg(m, rep);
            EquivalenceReport eq = alpha_w_equivalence(cps, cph, rep, 1e-9, false);
            worst_eq = std::max({worst_eq, eq.schrodinger_to_heisenberg, eq.heisenberg_to_schrodinger});
            if (cps.algebra.dim() != n * n * g.size()) ++dim_defects;
            if (cph.algebra.dim() != n * n * g.size()) ++dim_defects;
        }

        // 20 seeded convolution pairs per group, on M_2
        UnitaryRep rep2 = random_rep(g, 2, rng);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Mat> f1, f2;
            for (int u = 0; u < g.size(); ++u) {
                f1.push_back(rng.gaussian(2, 2));
                f2.push_back(rng.gaussian(2, 2));
            }
            Mat lhs = convolution_rep(convolve(f1, f2, rep2), rep2);
            Mat rhs = convolution_rep(f1, rep2) * convolution_rep(f2, rep2);
            worst_conv = std::max(worst_conv, (lhs - rhs).norm() / std::max(1.0, rhs.norm()));
        }
    }
    for (Index n = 2; n <= 4; ++n)
        for (Index k = 2; k <= 4; ++k) {
            MatrixStarAlgebra cc = coupled_center(full_matrix_algebra(n), diagonal_algebra(k));
            MatrixStarAlgebra expected = algebra_tensor(scalar_algebra(n), diagonal_algebra(k));
            worst_center = std::max(worst_center, subspace_distance(cc.basis(), expected.basis()));
        }
    bool pass = worst_eq <= 1e-9 && dim_defects == 0 && worst_conv <= 1e-10 && worst_center <= 1e-9;
    std::ostringstream d;
    d << "Ad(U(W)) residual " << fmt(worst_eq) << ", dim defects " << dim_defects << ", convolution " << fmt(worst_conv)
      << ", centre " << fmt(worst_center);
    report(6, "crossed-product pictures, dimension law, convolution, and coupled centre", pass, d.str());
}

// ---------------------------------------------------------------------------
// 7. algebra engine oracles

void criterion_7() {
    RandomSource rng(0x1007);
    bool dc_ok = true;
    for (int trial = 0; trial < 30; ++trial) {
        Index n = 2 + static_cast<Index>(trial % 7);  // ambient up to 8
        std::vector<Mat> gens;
        int count = 1 + trial % 3;
        for (int k = 0; k < count; ++k) gens.push_back(rng.gaussian(n, n));
        MatrixStarAlgebra a = MatrixStarAlgebra::generate(n, gens);
        if (!commutant(commutant(a)).same_subspace(a)) dc_ok = false;
    }

    // planted block structures: every partition with parts summing to <= 8
    long plant_defects = 0;
    int plants = 0;
    std::vector<std::vector<int>> partitions;
    {
        std::vector<int> cur;
        std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
            if (!cur.empty()) partitions.push_back(cur);
            for (int p = std::min(remaining, max_part); p >= 1; --p) {
                cur.push_back(p);
                recurse(remaining - p, p);
                cur.pop_back();
            }
        };
        recurse(8, 8);
    }
    for (const auto& parts : partitions) {
        Index n = 0;
        for (int d : parts) n += d;
        if (n < 2) continue;
        Mat q = rng.random_unitary(n);
        std::vector<Mat> gens;
        Index off = 0;
        for (int d : parts) {
            for (Index i = 0; i < d; ++i)
                for (Index j = 0; j < d; ++j) {
                    Mat e = Mat::Zero(n, n);
                    e(off + i, off + j) = 1;
                    gens.push_back(q * e * q.adjoint());
                }
            off += d;
        }
        SectorDecomposition dec = sector_decompose(MatrixStarAlgebra::generate(n, gens), 0x1007);
        std::vector<int> dims;
        for (const auto& s : dec.sectors) {
            dims.push_back(s.block_dim);
            if (s.multiplicity != 1) ++plant_defects;
        }
        std::sort(dims.begin(), dims.end());
        std::vector<int> expected = parts;
        std::sort(expected.begin(), expected.end());
        if (dims != expected) ++plant_defects;
        ++plants;
    }

    // masa catalogue
    bool masa_ok = true;
    for (Index n = 2; n <= 8; ++n)
        if (!is_masa(diagonal_algebra(n), full_matrix_algebra(n))) masa_ok = false;
    if (is_masa(scalar_algebra(2), full_matrix_algebra(2))) masa_ok = false;
    MatrixStarAlgebra m2d2 = algebra_tensor(full_matrix_algebra(2), diagonal_algebra(2));
    if (is_masa(algebra_tensor(scalar_algebra(2), diagonal_algebra(2)), m2d2)) masa_ok = false;
    if (!is_masa(algebra_tensor(diagonal_algebra(2), diagonal_algebra(2)), m2d2)) masa_ok = false;

    // disjointness: no intertwiners between inequivalent irreducible blocks
    bool disjoint_ok = true;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Mat> a, b;
        for (int k = 0; k < 3; ++k) {
            a.push_back(rng.gaussian(2, 2));
            b.push_back(rng.gaussian(3, 3));
        }
        if (intertwiner_space_dim(a, b) != 0) disjoint_ok = false;
    }
    DualGroup d4(FiniteAbelianGroup({4}));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            if (x == y) continue;
            std::vector<Mat> a, b;
            for (int u = 0; u < 4; ++u) {
                a.push_back(d4.pair(x, u) * Mat::Identity(1, 1));
                b.push_back(d4.pair(y, u) * Mat::Identity(1, 1));
            }
            if (intertwiner_space_dim(a, b) != 0) disjoint_ok = false;
        }

    bool pass = dc_ok && plant_defects == 0 && masa_ok && disjoint_ok;
    std::ostringstream d;
    d << "double commutant " << (dc_ok ? "ok" : "BAD") << ", " << plants << " planted partitions, defects "
      << plant_defects << ", masa " << (masa_ok ? "ok" : "BAD") << ", disjointness " << (disjoint_ok ? "ok" : "BAD");
    report(7, "algebra-engine oracles", pass, d.str());
}

// ---------------------------------------------------------------------------
// 8. quasi-equivalence of regular-representation powers

void criterion_8() {
    bool supports_ok = true, counts_ok = true, api_ok = true;
    for (const auto& orders : all_abelian_groups_up_to(8)) {
        FiniteAbelianGroup g(orders);
        DualGroup dual(g);
        UnitaryRep lambda = regular_rep(g);

        std::vector<UnitaryRep> powers;
        std::vector<std::map<int, int>> mult;
        for (int m = 1; m <= 3; ++m) {
            powers.push_back(tensor_power(lambda, m));
            mult.push_back(rep_multiplicities(powers.back()));
        }
        for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) {
                std::vector<int> sm, sn;
                for (auto& [chi, k] : mult[static_cast<size_t>(m)])
                    if (k > 0) sm.push_back(chi);
                for (auto& [chi, k] : mult[static_cast<size_t>(n)])
                    if (k > 0) sn.push_back(chi);
                if (sm != sn) supports_ok = false;
            }
        if (!quasi_equivalent(powers[0], powers[1])) api_ok = false;

        // brute-force character counting from traces
        for (int m = 0; m < 3; ++m)
            for (int chi = 0; chi < g.size(); ++chi) {
                cplx acc = 0;
                for (int u = 0; u < g.size(); ++u) acc += powers[static_cast<size_t>(m)].at(u).trace() * dual.pair(chi, u);
                int expected = static_cast<int>(std::llround(acc.real() / g.size()));
                auto it = mult[static_cast<size_t>(m)].find(chi);
                int got = it == mult[static_cast<size_t>(m)].end() ? 0 : it->second;
                if (got != expected) counts_ok = false;
            }
    }
    bool pass = supports_ok && counts_ok && api_ok;
    std::ostringstream d;
    d << "supports " << (supports_ok ? "equal" : "DIFFER") << ", multiplicity tables "
      << (counts_ok ? "match brute force" : "MISMATCH") << ", quasi_equivalent() " << (api_ok ? "ok" : "BAD");
    report(8, "quasi-equivalence of regular-representation tensor powers", pass, d.str());
}

// ---------------------------------------------------------------------------
// 9. SSB bookkeeping over every subgroup of every group <= 16

void criterion_9() {
    long defects = 0;
    int checked = 0;
    for (const auto& orders : all_abelian_groups_up_to(16)) {
        FiniteAbelianGroup g(orders);
        for (const auto& elements : all_subgroups(g)) {
            SubgroupSpec h = make_subgroup_from_indices(g, elements);
            if (h.subgroup_order() * h.coset_count() != g.size()) ++defects;
            auto ann = annihilator(h);
            if (static_cast<int>(ann.size()) != h.coset_count()) ++defects;
            if (static_cast<int>(ann.size()) * h.subgroup_order() != g.size()) ++defects;
            RestrictionReport r = restriction_map_report(h);
            if (!r.surjective || !r.kernel_is_annihilator) ++defects;
            if (sector_bundle(h).total() != g.size()) ++defects;
            ++checked;
        }
    }
    std::ostringstream d;
    d << checked << " subgroups across all groups of order <= 16, defects " << defects;
    report(9, "symmetry-sector bookkeeping is exact", defects == 0, d.str());
}

// ---------------------------------------------------------------------------
// 10. Naimark dilation

void criterion_10() {
    double worst_isometry = 0, worst_compression = 0;
    RandomSource rng(0x100a);

    auto exercise = [&](const POVM& p) {
        NaimarkDilation nd = naimark_dilate(p);
        worst_isometry = std::max(worst_isometry, unitarity_defect(nd.isometry));
        for (size_t i = 0; i < p.effects.size(); ++i)
            worst_compression = std::max(
                worst_compression, (Mat(nd.isometry.adjoint() * nd.projections[i] * nd.isometry) - p.effects[i]).norm());
    };

    // projective
    Mat e0 = Mat::Zero(2, 2), e1 = Mat::Zero(2, 2);
    e0(0, 0) = 1;
    e1(1, 1) = 1;
    exercise(POVM{{0, 1}, {e0, e1}});
    // symmetric split
    exercise(POVM{{0, 1}, {Mat::Identity(2, 2) / 2.0, Mat::Identity(2, 2) / 2.0}});
    // trine
    POVM trine;
    for (int k = 0; k < 3; ++k) {
        double theta = 2.0 * kPi * k / 3.0;
        Vec phi(2);
        phi << std::cos(theta / 2.0), std::sin(theta / 2.0);
        trine.labels.push_back(k);
        trine.effects.push_back((2.0 / 3.0) * phi * phi.adjoint());
    }
    exercise(trine);
    // 20 seeded random POVMs on dims <= 4
    for (int trial = 0; trial < 20; ++trial) {
        Index dim = 2 + trial % 3;
        int outcomes = 2 + trial % 4;
        std::vector<Mat> raw;
        Mat total = Mat::Zero(dim, dim);
        for (int k = 0; k < outcomes; ++k) {
            Mat a = rng.gaussian(dim, dim);
            raw.push_back(a * a.adjoint());
            total += raw.back();
        }
        Mat scale = matrix_sqrt_psd(total).inverse();
        POVM p;
        for (int k = 0; k < outcomes; ++k) {
            p.labels.push_back(k);
            p.effects.push_back(scale * raw[static_cast<size_t>(k)] * scale.adjoint());
        }
        exercise(p);
    }
    bool pass = worst_isometry <= 1e-10 && worst_compression <= 1e-10;
    report(10, "Naimark dilations compress back to their POVMs", pass,
           "isometry defect " + fmt(worst_isometry) + ", compression " + fmt(worst_compression));
}

// ---------------------------------------------------------------------------
// 11. determinism of the suite command

void criterion_11() {
    RunOptions opt;
    opt.has_seed = true;
    opt.seed = 2026;
    RunResult a = run_command("suite", nlohmann::json::object(), opt);
    RunResult b = run_command("suite", nlohmann::json::object(), opt);
    std::string da = a.report.dump(2);
    std::string db = b.report.dump(2);
    bool pass = da == db && a.exit_code == 0 && b.exit_code == 0;
    std::ostringstream d;
    d << da.size() << "-byte reports, " << (da == db ? "bit-identical" : "DIFFER") << ", suite exit " << a.exit_code;
    report(11, "suite reports are bit-identical for a fixed seed", pass, d.str());
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    CascadeOutcome cascade = cascade_block();
    criterion_3(cascade);
    criterion_4(cascade);
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " (" << g_failures << " failures, "
              << fmt(seconds_since(t0)) << " s total)\n";
    return g_failures == 0 ? 0 : 1;
}
