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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "catgadget/circuit.hpp"
#include "catgadget/pauli.hpp"

namespace catgadget {

enum class GateSet {
    NonentanglingClifford,  // {H, S}
    Clifford,               // {H, S, CX}
    CliffordT,              // {H, S, CX, T}
};

std::string_view to_string(GateSet set);
std::optional<GateSet> parse_gate_set(std::string_view name);
std::vector<GateKind> gate_kinds(GateSet set);

/// Uniform integer in [0, bound) by rejection sampling on raw 64-bit draws,
/// so sequences do not depend on the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound);

/// `layers` layers of n draws each. Draw k of a layer picks a kind uniformly
/// from the set; a one-qubit kind acts on qubit k, a CX on a uniformly random
/// ordered pair of distinct qubits. Throws std::invalid_argument for n < 2
/// when the set contains CX, or for negative layers.
Circuit random_block(int n, GateSet set, int layers, std::mt19937_64 &rng);

/// F = <b|a> with |a> = U^dag W0 U V |0> and |b> = V U^dag W0 U |0>, where U
/// is `prefix`. Throws std::invalid_argument when v and w0 do not commute
/// or their size differs from the circuit.
cplx otoc(const Circuit &prefix, const PauliString &v, const PauliString &w0);

struct Injection {
    /// V_m is inserted right before this block (1-based).
    int block = 1;
    /// Target qubits in order; qubit j of V_m maps to qubits[j].
    std::vector<int> qubits;

    int m() const { return static_cast<int>(qubits.size()); }
};

struct DopeSchedule {
    std::vector<Injection> injections;
};

/// `count` injections at uniformly random blocks in [1, last_block], each on
/// a random ordered set of m distinct qubits with m uniform in [m_min, m_max].
DopeSchedule random_schedule(int n, int count, int last_block, int m_min, int m_max, std::mt19937_64 &rng);

enum class InjectionMode {
    /// Insert the V_m circuit itself.
    Unitary,
    /// Insert what one run of the gadget with skipped non-local corrections
    /// applies: V_m for an even-parity record, the T-inside variant for an
    /// odd one. Records are uniform whatever the data state.
    GadgetSampling,
};

struct OtocPoint {
    int tau = 0;
    double re = 0.0;
    double im = 0.0;
};

struct OtocSeries {
    int n = 0;
    GateSet gate_set = GateSet::CliffordT;
    std::uint64_t seed = 0;
    int layers_per_block = 0;
    InjectionMode mode = InjectionMode::Unitary;
    DopeSchedule schedule;
    /// tau = 0 (empty circuit) first, then one point per block.
    std::vector<OtocPoint> points;
    PauliString v_op;
    PauliString w_op;
};

/// V = X on the last qubit, W0 = Z on qubit 0. Blocks are drawn from one
/// generator seeded with `seed`; the injections of block b are applied
/// before block b. Throws std::invalid_argument for schedules that name
/// blocks outside [1, num_blocks] or bad qubits.
OtocSeries otoc_experiment(int n, GateSet set, int num_blocks, int layers_per_block, const DopeSchedule &schedule,
                           std::uint64_t seed, InjectionMode mode = InjectionMode::Unitary);

std::string to_json(const OtocSeries &series);
/// Header `tau,re,im` followed by one row per point.
std::string to_csv(const OtocSeries &series);

}  // namespace catgadget
