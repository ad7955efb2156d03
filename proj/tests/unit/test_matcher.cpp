// Copyright 2026 The catgadget Authors
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


#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "catgadget/catstates.hpp"
#include "catgadget/matcher.hpp"

namespace catgadget {
namespace {

Circuit seq(std::initializer_list<Gate> gates) {
    Circuit c(2);
    for (const Gate &g : gates) c.append(g);
    return c;
}

bool contains(const std::vector<Variant> &vs, const Circuit &c) {
    for (const auto &v : vs)
        if (v.gates == c) return true;
    return false;
}

double phase_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    const std::complex<double> ph = (b.adjoint() * a).trace() / static_cast<double>(a.rows());
    return (a - (ph / std::abs(ph)) * b).norm();
}

TEST(Variants, ContainsDocumentedSequences) {
    const auto vs = enumerate_v2_variants();
    const Gate cx = Gate::make(GateKind::CX, 1, 0);
    EXPECT_TRUE(contains(vs, seq({cx, Gate::make(GateKind::TDG, 0), cx, Gate::make(GateKind::T, 0),
                                  Gate::make(GateKind::T, 1)})));
    EXPECT_TRUE(contains(vs, seq({Gate::make(GateKind::T, 1), cx, Gate::make(GateKind::TDG, 0), cx,
                                  Gate::make(GateKind::T, 0)})));
    const Gate cx_swapped = Gate::make(GateKind::CX, 0, 1);
    EXPECT_TRUE(contains(vs, seq({cx_swapped, Gate::make(GateKind::TDG, 1), cx_swapped, Gate::make(GateKind::T, 1),
                                  Gate::make(GateKind::T, 0)})));
    EXPECT_TRUE(contains(vs, seq({cx, Gate::make(GateKind::T, 0), cx, Gate::make(GateKind::T, 0),
                                  Gate::make(GateKind::T, 1)})));
    EXPECT_TRUE(contains(vs, seq({cx, Gate::make(GateKind::T, 1), Gate::make(GateKind::TDG, 0), cx,
                                  Gate::make(GateKind::T, 0)})));
}

TEST(Variants, DistinctIdsAndSequences) {
    const auto vs = enumerate_v2_variants();
    std::set<std::string> seen;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        EXPECT_EQ(vs[i].id, static_cast<int>(i));
        EXPECT_TRUE(seen.insert(serialize_circuit(vs[i].gates)).second);
        EXPECT_EQ(vs[i].gates.num_qubits(), 2);
    }
    // The closure size is reported next to the closed-form 96, not forced to it.
    RecordProperty("variant_count", static_cast<int>(vs.size()));
    RecordProperty("formula_count", static_cast<int>(gadget_stats(2).variant_count_formula));
    EXPECT_EQ(vs.size(), 40U);
}

TEST(Variants, UnitariesMatchTargets) {
    const Eigen::MatrixXcd v2 = circuit_unitary(build_Vm(2));
    const Eigen::MatrixXcd v2_in = circuit_unitary(build_Vm_t_inside(2));
    for (const auto &v : enumerate_v2_variants()) {
        const Eigen::MatrixXcd u = circuit_unitary(v.gates);
        const auto &target = v.t_inside ? v2_in : v2;
        EXPECT_LT(phase_distance(u, target), 1e-10) << serialize_circuit(v.gates);
    }
}

TEST(Matcher, HostEqualToVariant) {
    const auto vs = enumerate_v2_variants();
    for (const auto &v : vs) {
        const auto m = match_patterns(v.gates, vs);
        ASSERT_EQ(m.size(), 1U);
        EXPECT_EQ(m[0].positions, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
    }
}

TEST(Matcher, DisjointInterleavingAllowedOverlappingNot) {
    const auto vs = enumerate_v2_variants();
    Circuit host(4);
    host.append(GateKind::CX, 1, 0);
    host.append(GateKind::H, 2);           // disjoint: allowed
    host.append(GateKind::TDG, 0);
    host.append(GateKind::CX, 2, 3);       // disjoint: allowed
    host.append(GateKind::CX, 1, 0);
    host.append(GateKind::T, 0);
    host.append(GateKind::T, 1);
    auto m = match_patterns(host, vs);
    ASSERT_EQ(m.size(), 1U);
    EXPECT_EQ(m[0].positions, (std::vector<std::size_t>{0, 2, 4, 5, 6}));
    EXPECT_EQ(m[0].qubit_map, (std::array<int, 2>{0, 1}));

    Circuit blocked(3);
    blocked.append(GateKind::CX, 1, 0);
    blocked.append(GateKind::TDG, 0);
    blocked.append(GateKind::CX, 2, 1);  // touches qubit 1 of the pair
    blocked.append(GateKind::CX, 1, 0);
    blocked.append(GateKind::T, 0);
    blocked.append(GateKind::T, 1);
    EXPECT_TRUE(match_patterns(blocked, vs).empty());
}

TEST(Matcher, GreedyFirstFitOnOverlap) {
    // Two variants sharing their final T: only the earlier one is kept.
    const auto vs = enumerate_v2_variants();
    Circuit host(2);
    host.append(GateKind::CX, 1, 0);
    host.append(GateKind::TDG, 0);
    host.append(GateKind::CX, 1, 0);
    host.append(GateKind::T, 0);
    host.append(GateKind::T, 1);
    host.append(GateKind::CX, 1, 0);
    host.append(GateKind::TDG, 0);
    host.append(GateKind::CX, 1, 0);
    host.append(GateKind::T, 0);
    const auto m = match_patterns(host, vs);
    ASSERT_GE(m.size(), 1U);
    EXPECT_EQ(m[0].positions.front(), 0U);
    std::set<std::size_t> used;
    for (const auto &x : m)
        for (auto p : x.positions) EXPECT_TRUE(used.insert(p).second);
}

TEST(Matcher, CliffordHostsHaveNoMatches) {
    const auto vs = enumerate_v2_variants();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::mt19937_64 rng(seed);
        const auto ph = plant_variants(6, 300, 0, vs, rng);
        EXPECT_TRUE(match_patterns(ph.host, vs).empty());
    }
}

TEST(Matcher, PlantedRecallAndSoundness) {
    const auto vs = enumerate_v2_variants();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 2 + static_cast<int>(seed % 9);
        const auto ph = plant_variants(n, 200, 5, vs, rng);
        const auto m = match_patterns(ph.host, vs);
        ASSERT_EQ(m.size(), ph.planted.size()) << "seed " << seed;
        for (std::size_t i = 0; i < m.size(); ++i) {
            EXPECT_EQ(m[i].positions, ph.planted[i].positions) << "seed " << seed;
            Circuit extracted(2);
            for (auto p : m[i].positions) {
                const Gate &g = ph.host.gates()[p];
                auto local = [&](int q) { return q == m[i].qubit_map[0] ? 0 : 1; };
                extracted.append(g.arity() == 2 ? Gate::make(g.kind, local(g.qubits[0]), local(g.qubits[1]))
                                                : Gate::make(g.kind, local(g.qubits[0])));
            }
            EXPECT_LT(phase_distance(circuit_unitary(extracted), circuit_unitary(vs[m[i].variant_id].gates)), 1e-10);
        }
    }
}

TEST(Matcher, PlantingIsReproducibleAndValidated) {
    const auto vs = enumerate_v2_variants();
    std::mt19937_64 a(4), b(4);
    const auto pa = plant_variants(5, 50, 3, vs, a);
    const auto pb = plant_variants(5, 50, 3, vs, b);
    EXPECT_EQ(pa.host, pb.host);
    EXPECT_EQ(pa.host.size(), 50U + 3U * 9U);
    std::mt19937_64 rng(1);
    EXPECT_THROW(plant_variants(1, 10, 1, vs, rng), std::invalid_argument);
    EXPECT_THROW(plant_variants(3, 1, 3, vs, rng), std::invalid_argument);
}

TEST(MatchCost, FormulaValues) {
    const auto vs = enumerate_v2_variants();
    const auto e = estimate_match_cost(Circuit(3), vs[0].gates);
    EXPECT_EQ(e.g_p, 5U);
    EXPECT_EQ(e.n_p, 2U);
    EXPECT_DOUBLE_EQ(e.pattern_factor, 1953125.0);
    EXPECT_DOUBLE_EQ(e.value, 0.0);

    Circuit host(24);
    for (int i = 0; i < 10; ++i) host.append(GateKind::H, i);
    const auto f = estimate_match_cost(host, vs[0].gates);
    EXPECT_DOUBLE_EQ(f.value, std::pow(10.0, 8) * 1953125.0 * 24.0);
}

}  // namespace
}  // namespace catgadget
