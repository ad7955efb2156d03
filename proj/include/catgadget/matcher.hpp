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


#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "catgadget/circuit.hpp"

namespace catgadget {

/// One gate sequence on two qubits implementing V_2 or its T-inside variant.
struct Variant {
    int id = 0;
    Circuit gates{2};
    /// True when the cascade holds T rather than TDG.
    bool t_inside = false;
};

/// Closure of [CX 1 0, TDG 0, CX 1 0, T 0, T 1] under: moving each final T
/// in front of the parity cascade, sliding the T on the control-only qubit
/// into the cascade, swapping TDG for T inside the cascade, reordering
/// adjacent T gates on different qubits, and exchanging the two qubits.
/// Sequences are deduplicated; ids follow the order of discovery. Each
/// sequence is checked against the dense unitary of its target and a
/// std::logic_error is thrown on a mismatch.
std::vector<Variant> enumerate_v2_variants();

struct Match {
    int variant_id = 0;
    /// Host gate indices, strictly increasing, one per pattern gate.
    std::vector<std::size_t> positions;
    /// Host qubits of pattern qubits 0 and 1.
    std::array<int, 2> qubit_map = {0, 1};
};

/// Greedy left-to-right non-overlapping matches. Inside a match, every host
/// gate that is not part of it must act on qubits disjoint from the mapped
/// pair. Each match is re-verified by comparing the 2-qubit unitary of the
/// extracted gates with the variant's.
std::vector<Match> match_patterns(const Circuit &host, const std::vector<Variant> &variants);

struct PlantedHost {
    Circuit host{1};
    /// Ground truth: where each planted variant ended up.
    std::vector<Match> planted;
};

/// Random Clifford host of `host_gates` gates over {H, S, SDG, X, Z, CX, CZ}
/// with `count` variants (chosen uniformly) inserted as contiguous blocks on
/// random ordered qubit pairs. Each block is fenced by H on both of its
/// qubits directly before and after it, so host gates cannot complete a
/// different occurrence that overlaps the planted one. At least one host
/// gate separates consecutive blocks. The host therefore has
/// host_gates + count * (g + 4) gates for g-gate variants. Requires n >= 2.
PlantedHost plant_variants(int n, int host_gates, int count, const std::vector<Variant> &variants,
                           std::mt19937_64 &rng);

struct MatchCostEstimate {
    std::uint64_t g_c = 0;  // host gates
    std::uint64_t g_p = 0;  // pattern gates
    std::uint64_t n_c = 0;  // host qubits
    std::uint64_t n_p = 0;  // pattern qubits
    /// g_p^(g_p + 4), the host-independent factor.
    double pattern_factor = 0.0;
    /// g_c^(g_p + 3) * g_p^(g_p + 4) * n_c^(n_p - 1)
    double value = 0.0;
};

MatchCostEstimate estimate_match_cost(const Circuit &host, const Circuit &pattern);

}  // namespace catgadget
