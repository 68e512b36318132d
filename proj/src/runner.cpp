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

#include "mmd/runner.hpp"

#include <cmath>
#include <sstream>

#include "mmd/amplifier.hpp"
#include "mmd/crossed.hpp"
#include "mmd/instrument.hpp"
#include "mmd/rng.hpp"
#include "mmd/scenario.hpp"
#include "mmd/ssb.hpp"

namespace mmd {

namespace {

using nlohmann::json;

struct CheckList {
    json items = json::array();
    bool all_pass = true;

    void add(const std::string& name, double value, double tolerance) {
        bool pass = std::isfinite(value) && value <= tolerance;
        items.push_back({{"name", name}, {"value", value}, {"tolerance", tolerance}, {"pass", pass}});
        all_pass = all_pass && pass;
    }
    void add_exact(const std::string& name, long defect) {
        add(name, static_cast<double>(defect), 0.0);
    }
    void add_bool(const std::string& name, bool ok) {
        add_exact(name, ok ? 0 : 1);
    }
    void merge(const CheckList& other) {
        for (const auto& item : other.items) items.push_back(item);
        all_pass = all_pass && other.all_pass;
    }
};

json make_report(const std::string& command, const json& scenario, std::uint64_t seed, const CheckList& checks,
                 json result) {
    return json{{"schema_version", 1}, {"command", command}, {"seed", seed},      {"scenario", scenario},
                {"checks", checks.items}, {"pass", checks.all_pass}, {"result", std::move(result)}};
}

std::uint64_t effective_seed(const json& scenario, const RunOptions& opt) {
    return opt.has_seed ? opt.seed : parse_seed(scenario);
}

std::string set_label(const FiniteAbelianGroup& g, const std::vector<int>& set) {
    std::ostringstream os;
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) os << "|";
        os << tuple_label(g, set[i]);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// verify

CheckList relation_checks(const UnitaryRep& rep) {
    const auto& g = rep.group();
    DualGroup dual(g);
    CheckList checks;
    checks.add("pentagonal_w", pentagonal_residual_w(g), 1e-10);
    checks.add("pentagonal_v", pentagonal_residual_v(dual), 1e-10);
    checks.add("unitarity_w", unitarity_defect(kt_w(g).dense()), 1e-10);
    checks.add("unitarity_v", unitarity_defect(kt_v(dual).dense()), 1e-10);
    checks.add("modified_pentagonal", modified_pentagonal_residual(rep), 1e-10);
    checks.add("intertwining", intertwining_residual(rep), 1e-10);
    checks.add("route_v_kernel_vs_fourier", route_equality_v(g), 1e-10);
    checks.add("route_coupling_vs_spectral", route_equality_coupling(rep), 1e-10);
    CouplingOperator uw = coupling_uw(rep);
    checks.add("unitarity_uw", unitarity_defect(uw.m), 1e-10);
    checks.add("unitarity_utilde_w", unitarity_defect(fourier_coupling(uw, g).m), 1e-10);
    return checks;
}

RunResult cmd_verify(const json& scenario, const RunOptions& opt) {
    FiniteAbelianGroup g = parse_group(scenario);
    UnitaryRep rep = parse_rep(scenario, g);
    CheckList checks = relation_checks(rep);
    json relations = json::array();
    for (const auto& item : checks.items)
        relations.push_back({{"relation", item.at("name")}, {"residual", item.at("value")}, {"pass", item.at("pass")}});
    json result{{"group_orders", g.orders()}, {"system_dim", rep.dim()}, {"relations", relations}};
    RunResult out;
    out.report = make_report("verify", scenario, effective_seed(scenario, opt), checks, result);
    out.exit_code = checks.all_pass ? 0 : 1;
    return out;
}

// ---------------------------------------------------------------------------
// measure

RunResult cmd_measure(const json& scenario, const RunOptions& opt) {
    FiniteAbelianGroup g = parse_group(scenario);
    UnitaryRep rep = parse_rep(scenario, g);
    Instrument inst(rep);
    DensityState omega = parse_state_density(scenario, "state", rep.dim());

    std::vector<std::vector<int>> sets = parse_outcome_sets(scenario, g);
    for (const auto& set : sets)
        for (int chi : set)
            if (!inst.spectral().in_support(chi))
                throw ScenarioError("outcome character outside the spectral support", "/outcome_sets");
    if (sets.empty())
        for (int chi : inst.support()) sets.push_back({chi});

    CheckList checks;
    const auto& e = inst.spectral();

    POVM povm = inst.povm_effects();
    Mat s = Mat::Zero(rep.dim(), rep.dim());
    for (const Mat& f : povm.effects) s += f;
    checks.add("povm_completeness", (s - Mat::Identity(rep.dim(), rep.dim())).norm(), 1e-10);
    checks.add("total_probability", std::abs(inst.probability(omega, inst.support()) - 1.0), 1e-10);

    json probabilities = json::object();
    json posteriors = json::array();
    std::ostringstream csv;
    csv << "label,probability\n";
    double born_diff = 0;
    double lueders_diff = 0;
    for (const auto& set : sets) {
        double p = inst.probability(omega, set);
        std::string label = set_label(g, set);
        probabilities[label] = p;
        csv << label << "," << p << "\n";

        double born = 0;
        Mat lueders = Mat::Zero(rep.dim(), rep.dim());
        for (int chi : set) {
            born += (omega.rho * e.at(chi)).trace().real();
            lueders += e.at(chi) * omega.rho * e.at(chi);
        }
        born_diff = std::max(born_diff, std::abs(p - born));

        json entry{{"outcomes", set_label(g, set)}, {"probability", p}};
        if (p > 1e-12) {
            DensityState post = inst.posterior(omega, set);
            lueders_diff = std::max(lueders_diff, (post.rho - lueders / born).norm());
            entry["state"] = json{{"matrix", json_matrix(post.rho)}, {"signature", post.signature}};
        } else {
            entry["state"] = nullptr;
        }
        posteriors.push_back(entry);
    }
    checks.add("born_oracle", born_diff, 1e-10);
    checks.add("lueders_oracle", lueders_diff, 1e-10);

    json result{{"probabilities", probabilities},
                {"posteriors", posteriors},
                {"measured_is_masa", inst.measured_is_masa()},
                {"support", [&] {
                     json sup = json::array();
                     for (int chi : inst.support()) sup.push_back(tuple_label(g, chi));
                     return sup;
                 }()}};
    RunResult out;
    out.report = make_report("measure", scenario, effective_seed(scenario, opt), checks, result);
    out.exit_code = checks.all_pass ? 0 : 1;
    if (opt.format == "csv") out.csv = csv.str();
    return out;
}

// ---------------------------------------------------------------------------
// amplify

json branch_json(const FiniteAbelianGroup& g, const std::vector<Branch>& branches) {
    json out = json::array();
    for (const Branch& b : branches)
        out.push_back({{"gamma", tuple_label(g, b.gamma)},
                       {"amplitude", json_complex(cplx(b.amplitude, 0))},
                       {"system_component", json_vector(b.system_component)}});
    return out;
}

RunResult cmd_amplify(const json& scenario, const RunOptions& opt) {
    FiniteAbelianGroup g = parse_group(scenario);
    UnitaryRep rep = parse_rep(scenario, g);
    Vec xi = parse_state_vector(scenario, "initial_state", rep.dim());

    if (!scenario.contains("N") || !scenario.at("N").is_number_integer() || scenario.at("N").get<int>() < 1)
        throw ScenarioError("N must be a positive integer", "/N");
    int stages = scenario.at("N").get<int>();
    std::string path = scenario.value("path", std::string("dense"));
    if (path != "dense" && path != "analytic") throw ScenarioError("path must be \"dense\" or \"analytic\"", "/path");

    CascadeConfig cfg(rep, stages, opt.max_dim);
    if (path == "dense" && cfg.dense_dim() > cfg.max_dim)
        throw ScenarioError("dense cascade dimension exceeds the cap; use path=\"analytic\" or raise --max-dim", "/N");

    std::vector<Branch> analytic = amplify_branches(xi, cfg);
    CheckList checks;
    json result;
    std::ostringstream csv;
    csv << "label,probability\n";

    if (path == "dense") {
        CascadeState s = amplify(xi, cfg);
        checks.add("norm_preservation", std::abs(s.v.norm() - 1.0), 1e-10);

        CascadeState reconstructed = state_from_branches(analytic, cfg);
        checks.add("branch_residual_dense_vs_analytic", (s.v - reconstructed.v).norm(), 1e-9);

        Vec recovered = recover(s, cfg);
        Vec neutral = xi;
        Vec iota = Vec::Zero(g.size());
        iota(0) = 1;
        for (int k = 0; k < stages; ++k) neutral = kron(neutral, iota);
        double fidelity = std::abs(neutral.dot(recovered));
        checks.add("roundtrip_fidelity_defect", std::abs(1.0 - fidelity), 1e-10);

        std::vector<Branch> branches = branch_decompose(s);
        auto marginal = pointer_marginal(s, 1);
        json distribution = json::object();
        for (int gamma = 0; gamma < g.size(); ++gamma) {
            std::string label = tuple_label(g, gamma);
            distribution[label] = marginal[static_cast<size_t>(gamma)];
            csv << label << "," << marginal[static_cast<size_t>(gamma)] << "\n";
        }
        if (stages >= 2) {
            Mat joint = pointer_joint(s, 1, 2);
            double offdiag = 0;
            for (Index a = 0; a < joint.rows(); ++a)
                for (Index b = 0; b < joint.cols(); ++b)
                    if (a != b) offdiag += joint(a, b).real();
            checks.add("pointer_consensus_offdiagonal", offdiag, 1e-10);
        }
        result = json{{"branches", branch_json(g, branches)},
                      {"fidelity_roundtrip", fidelity},
                      {"single_register_distribution", distribution}};
    } else {
        double total = 0;
        json distribution = json::object();
        for (const Branch& b : analytic) {
            total += b.amplitude * b.amplitude;
            std::string label = tuple_label(g, b.gamma);
            distribution[label] = b.amplitude * b.amplitude;
            csv << label << "," << b.amplitude * b.amplitude << "\n";
        }
        checks.add("branch_normalization", std::abs(total - 1.0), 1e-10);
        result = json{{"branches", branch_json(g, analytic)},
                      {"fidelity_roundtrip", nullptr},
                      {"single_register_distribution", distribution}};
    }

    RunResult out;
    out.report = make_report("amplify", scenario, effective_seed(scenario, opt), checks, result);
    out.exit_code = checks.all_pass ? 0 : 1;
    if (opt.format == "csv") out.csv = csv.str();
    return out;
}

// ---------------------------------------------------------------------------
// sectors

json sectors_result(const MatrixStarAlgebra& alg, const SectorDecomposition& dec) {
    json sectors = json::array();
    for (const auto& s : dec.sectors) sectors.push_back({{"dim", s.block_dim}, {"multiplicity", s.multiplicity}});
    return json{{"sectors", sectors}, {"center_dim", center(alg).dim()}, {"is_factor", is_factor(alg)}};
}

CheckList sector_checks(const MatrixStarAlgebra& alg, const SectorDecomposition& dec) {
    CheckList checks;
    const Index n = alg.ambient_dim();
    Mat sum = Mat::Zero(n, n);
    double ortho = 0;
    long rank_sum = 0;
    for (size_t i = 0; i < dec.sectors.size(); ++i) {
        sum += dec.sectors[i].central_projection;
        rank_sum += static_cast<long>(dec.sectors[i].block_dim) * dec.sectors[i].multiplicity;
        for (size_t j = 0; j < i; ++j)
            ortho = std::max(ortho, (dec.sectors[i].central_projection * dec.sectors[j].central_projection).norm());
    }
    checks.add("central_projections_sum", (sum - Mat::Identity(n, n)).norm(), 1e-9);
    checks.add("central_projections_orthogonal", ortho, 1e-9);
    checks.add_exact("block_rank_sum", rank_sum - n);
    checks.add("closure_residual", alg.closure_residual(), 1e-9);
    return checks;
}

RunResult cmd_sectors(const json& scenario, const RunOptions& opt) {
    std::vector<Mat> gens = parse_algebra_generators(scenario);
    std::uint64_t seed = effective_seed(scenario, opt);
    MatrixStarAlgebra alg = MatrixStarAlgebra::generate(gens.front().rows(), gens);
    SectorDecomposition dec = sector_decompose(alg, seed);
    CheckList checks = sector_checks(alg, dec);
    RunResult out;
    out.report = make_report("sectors", scenario, seed, checks, sectors_result(alg, dec));
    out.exit_code = checks.all_pass ? 0 : 1;
    return out;
}

// ---------------------------------------------------------------------------
// crossed

struct CrossedBlock {
    CheckList checks;
    json result;
};

CrossedBlock crossed_block(const MatrixStarAlgebra& m, const UnitaryRep& rep, bool m_is_full, std::uint64_t seed) {
    const auto& g = rep.group();
    const int n = g.size();
    CrossedBlock block;

    CrossedProduct cps = build_schrodinger(m, rep);
    CrossedProduct cph = build_heisenberg(m, rep);
    EquivalenceReport eq = alpha_w_equivalence(cps, cph, rep, 1e-9, /*enforce=*/false);
    block.checks.add("equivalence_schrodinger_to_heisenberg", eq.schrodinger_to_heisenberg, 1e-9);
    block.checks.add("equivalence_heisenberg_to_schrodinger", eq.heisenberg_to_schrodinger, 1e-9);
    block.checks.add_exact("picture_dims_equal", cps.algebra.dim() - cph.algebra.dim());
    if (m_is_full) {
        long expected = static_cast<long>(m.ambient_dim()) * m.ambient_dim() * n;
        block.checks.add_exact("crossed_dim_formula", static_cast<long>(cps.algebra.dim()) - expected);
    }

    // convolution algebra: the homomorphism law on seeded random pairs
    RandomSource rng(RandomSource::derive(seed, 0xc0de));
    double conv = 0;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Mat> f1, f2;
        for (int u = 0; u < n; ++u) {
            f1.push_back(rng.gaussian(rep.dim(), rep.dim()));
            f2.push_back(rng.gaussian(rep.dim(), rep.dim()));
        }
        Mat lhs = convolution_rep(convolve(f1, f2, rep), rep);
        Mat rhs = convolution_rep(f1, rep) * convolution_rep(f2, rep);
        conv = std::max(conv, (lhs - rhs).norm() / std::max(1.0, rhs.norm()));
    }
    block.checks.add("convolution_homomorphism", conv, 1e-10);

    // centre of the decoupled algebra M (x) A
    MatrixStarAlgebra a = diagonal_algebra(n);
    MatrixStarAlgebra cc = coupled_center(m, a);
    MatrixStarAlgebra expected_center = algebra_tensor(scalar_algebra(m.ambient_dim()), a);
    block.checks.add("coupled_center_is_one_tensor_a", subspace_distance(cc.basis(), expected_center.basis()), 1e-9);

    MatrixStarAlgebra tensor_alg = algebra_tensor(m, a);
    block.result = json{{"dims",
                         {{"schrodinger", cps.algebra.dim()},
                          {"heisenberg", cph.algebra.dim()},
                          {"tensor", tensor_alg.dim()}}},
                        {"equivalence_residual", std::max(eq.schrodinger_to_heisenberg, eq.heisenberg_to_schrodinger)},
                        {"center_dims",
                         {{"schrodinger", center(cps.algebra).dim()},
                          {"heisenberg", center(cph.algebra).dim()},
                          {"tensor", cc.dim()}}}};
    return block;
}

RunResult cmd_crossed(const json& scenario, const RunOptions& opt) {
    FiniteAbelianGroup g = parse_group(scenario);
    UnitaryRep rep = parse_rep(scenario, g);
    std::uint64_t seed = effective_seed(scenario, opt);

    bool m_is_full = !scenario.contains("algebra_generators");
    MatrixStarAlgebra m = m_is_full ? full_matrix_algebra(rep.dim()) : [&] {
        std::vector<Mat> gens = parse_algebra_generators(scenario);
        if (gens.front().rows() != rep.dim())
            throw ScenarioError("algebra generators must act on the representation space", "/algebra_generators");
        return MatrixStarAlgebra::generate(rep.dim(), gens);
    }();

    CrossedBlock block = crossed_block(m, rep, m_is_full, seed);
    RunResult out;
    out.report = make_report("crossed", scenario, seed, block.checks, block.result);
    out.exit_code = block.checks.all_pass ? 0 : 1;
    return out;
}

// ---------------------------------------------------------------------------
// ssb

struct SsbBlock {
    CheckList checks;
    json result;
};

SsbBlock ssb_block(const SubgroupSpec& h) {
    const auto& g = h.group;
    SsbBlock block;

    auto cosets = quotient(h);
    auto ann = annihilator(h);
    auto bundle = sector_bundle(h);
    auto restriction = restriction_map_report(h);

    block.checks.add_exact("lagrange", static_cast<long>(g.size()) - static_cast<long>(h.subgroup_order()) * h.coset_count());
    block.checks.add_exact("annihilator_order", static_cast<long>(ann.size()) - h.coset_count());
    block.checks.add_bool("restriction_surjective", restriction.surjective);
    block.checks.add_bool("restriction_kernel_is_annihilator", restriction.kernel_is_annihilator);
    block.checks.add_exact("bundle_total", static_cast<long>(bundle.total()) - g.size());

    // induced pairing of H-perp with G/H: the quotient character table has
    // orthogonal rows
    DualGroup dual(g);
    const Index k = static_cast<Index>(ann.size());
    Mat table(k, k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
            table(i, j) = dual.pair(ann[static_cast<size_t>(i)], h.coset_reps[static_cast<size_t>(j)]);
    block.checks.add("quotient_character_orthogonality",
                     (table * table.adjoint() / static_cast<double>(k) - Mat::Identity(k, k)).norm(), 1e-12);

    json cosets_json = json::array();
    for (const auto& c : cosets) {
        json one = json::array();
        for (int e : c) one.push_back(tuple_label(g, e));
        cosets_json.push_back(one);
    }
    json ann_json = json::array();
    for (int chi : ann) ann_json.push_back(tuple_label(g, chi));
    block.result = json{{"cosets", cosets_json},
                        {"annihilator", ann_json},
                        {"bundle", {{"base", bundle.base_size()}, {"fiber", bundle.fiber_size()}, {"total", bundle.total()}}}};
    return block;
}

RunResult cmd_ssb(const json& scenario, const RunOptions& opt) {
    FiniteAbelianGroup g = parse_group(scenario);
    SubgroupSpec h = [&] {
        try {
            return make_subgroup(g, parse_subgroup_generators(scenario, g));
        } catch (const std::invalid_argument& e) {
            throw ScenarioError(e.what(), "/subgroup_generators");
        }
    }();
    SsbBlock block = ssb_block(h);
    RunResult out;
    out.report = make_report("ssb", scenario, effective_seed(scenario, opt), block.checks, block.result);
    out.exit_code = block.checks.all_pass ? 0 : 1;
    return out;
}

// ---------------------------------------------------------------------------
// suite

json suite_group_section(const std::vector<int>& orders, std::uint64_t seed, Index max_dim, CheckList& total) {
    FiniteAbelianGroup g(orders);
    UnitaryRep standard = regular_rep(g);
    json section{{"group_orders", orders}};

    CheckList relations = relation_checks(standard);
    section["relations"] = relations.items;
    total.all_pass = total.all_pass && relations.all_pass;

    // instrument oracle block on the standard coupling
    {
        CheckList checks;
        Instrument inst(standard);
        RandomSource rng(RandomSource::derive(seed, 0x0b5e));
        const auto& e = inst.spectral();
        double born = 0, lueders = 0, repeat = 0;
        for (int trial = 0; trial < 10; ++trial) {
            DensityState omega{rng.random_density(standard.dim()), {standard.dim()}};
            for (int chi : inst.support()) {
                double p = inst.probability(omega, {chi});
                born = std::max(born, std::abs(p - (omega.rho * e.at(chi)).trace().real()));
                if (p > 1e-6) {
                    DensityState post = inst.posterior(omega, {chi});
                    Mat l = e.at(chi) * omega.rho * e.at(chi) / p;
                    lueders = std::max(lueders, (post.rho - l).norm());
                    repeat = std::max(repeat, std::abs(inst.probability(post, {chi}) - 1.0));
                }
            }
        }
        checks.add("born_oracle", born, 1e-10);
        checks.add("lueders_oracle", lueders, 1e-10);
        checks.add("repeatability", repeat, 1e-10);
        section["instrument"] = checks.items;
        total.all_pass = total.all_pass && checks.all_pass;
    }

    // cascade block
    {
        CheckList checks;
        int stages = 3;
        CascadeConfig cfg(standard, stages, max_dim);
        RandomSource rng(RandomSource::derive(seed, 0xca5c));
        double branch = 0, roundtrip = 0, consensus = 0;
        for (int trial = 0; trial < 3; ++trial) {
            Vec xi = rng.random_state(standard.dim());
            CascadeState s = amplify(xi, cfg);
            branch = std::max(branch, (s.v - state_from_branches(amplify_branches(xi, cfg), cfg).v).norm());
            Vec neutral = xi;
            Vec iota = Vec::Zero(g.size());
            iota(0) = 1;
            for (int k = 0; k < stages; ++k) neutral = kron(neutral, iota);
            roundtrip = std::max(roundtrip, std::abs(1.0 - std::abs(neutral.dot(recover(s, cfg)))));
            Mat joint = pointer_joint(s, 1, 2);
            for (Index a = 0; a < joint.rows(); ++a)
                for (Index b = 0; b < joint.cols(); ++b)
                    if (a != b) consensus += joint(a, b).real();
        }
        checks.add("branch_residual", branch, 1e-9);
        checks.add("roundtrip_fidelity_defect", roundtrip, 1e-10);
        checks.add("pointer_consensus_offdiagonal", consensus, 1e-10);
        section["cascade"] = checks.items;
        total.all_pass = total.all_pass && checks.all_pass;
    }

    // crossed-product block on M_2 with a seeded representation
    {
        RandomSource rng(RandomSource::derive(seed, 0xc805));
        UnitaryRep rep = random_rep(g, 2, rng);
        CrossedBlock block = crossed_block(full_matrix_algebra(2), rep, true, seed);
        section["crossed"] = block.checks.items;
        total.all_pass = total.all_pass && block.checks.all_pass;
    }

    // ssb block over every subgroup
    {
        CheckList checks;
        long violations = 0;
        int count = 0;
        for (const auto& elements : all_subgroups(g)) {
            std::vector<int> gens = elements;  // the elements generate the subgroup
            SubgroupSpec h = make_subgroup_from_indices(g, gens);
            SsbBlock block = ssb_block(h);
            if (!block.checks.all_pass) ++violations;
            ++count;
        }
        checks.add_exact("subgroup_violations", violations);
        section["ssb"] = checks.items;
        section["subgroup_count"] = count;
        total.all_pass = total.all_pass && checks.all_pass;
    }

    // sector recovery block: a planted two-block algebra
    {
        CheckList checks;
        RandomSource rng(RandomSource::derive(seed, 0x5ec0));
        Mat q = rng.random_unitary(5);
        std::vector<Mat> gens;
        Mat g1 = Mat::Zero(5, 5);
        g1.block(0, 0, 2, 2) = rng.gaussian(2, 2);
        Mat g2 = Mat::Zero(5, 5);
        g2.block(2, 2, 3, 3) = rng.gaussian(3, 3);
        Mat p1 = Mat::Zero(5, 5);
        p1.block(0, 0, 2, 2) = Mat::Identity(2, 2);
        gens.push_back(q * g1 * q.adjoint());
        gens.push_back(q * g2 * q.adjoint());
        gens.push_back(q * p1 * q.adjoint());
        MatrixStarAlgebra alg = MatrixStarAlgebra::generate(5, gens);
        SectorDecomposition dec = sector_decompose(alg, seed);
        std::vector<int> dims;
        for (const auto& s : dec.sectors) dims.push_back(s.block_dim);
        std::sort(dims.begin(), dims.end());
        checks.add_bool("planted_blocks_recovered", dims == std::vector<int>{2, 3});
        section["sectors"] = checks.items;
        total.all_pass = total.all_pass && checks.all_pass;
    }

    return section;
}

RunResult cmd_suite(const json& scenario, const RunOptions& opt) {
    std::uint64_t seed = effective_seed(scenario, opt);
    CheckList total;
    json sections = json::array();
    auto groups = all_abelian_groups_up_to(8);
    for (size_t i = 0; i < groups.size(); ++i)
        sections.push_back(suite_group_section(groups[i], RandomSource::derive(seed, i), opt.max_dim, total));
    total.add_bool("suite_all_sections", total.all_pass);
    json result{{"groups", sections}};
    RunResult out;
    out.report = make_report("suite", scenario, seed, total, result);
    out.exit_code = total.all_pass ? 0 : 1;
    return out;
}

}  // namespace

RunResult run_command(const std::string& command, const json& scenario, const RunOptions& options) {
    validate_schema_version(scenario);
    if (command == "verify") return cmd_verify(scenario, options);
    if (command == "measure") return cmd_measure(scenario, options);
    if (command == "amplify") return cmd_amplify(scenario, options);
    if (command == "sectors") return cmd_sectors(scenario, options);
    if (command == "crossed") return cmd_crossed(scenario, options);
    if (command == "ssb") return cmd_ssb(scenario, options);
    if (command == "suite") return cmd_suite(scenario, options);
    throw ScenarioError("unknown command \"" + command + "\"", "/command");
}

}  // namespace mmd
