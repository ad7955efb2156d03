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
#include <random>
#include <string>
#include <vector>

#include "catgadget/circuit.hpp"
#include "catgadget/state.hpp"

namespace catgadget {

/// |cat_m> = (|T>^m + |T_perp>^m)/sqrt(2) with |T_perp> = (|0> - e^{i pi/4}|1>)/sqrt(2).
/// Nonzero exactly on even-weight strings. Throws std::invalid_argument for m < 1.
PureState cat_state(int m);

/// |cat*_m>: amplitude i^{floor(|s|/2)} / 2^{m/2} on every m-bit string s. m >= 2.
PureState star_cat(int m);

/// Y-measures the last qubit of |cat_{m+1}> with the given outcome (+1 or -1)
/// and applies Z on every remaining qubit after a -1.
PureState star_cat_via_measurement(int m, int outcome);

enum class FamilyBasis { X, Z };

/// m-qubit state left after measuring the last qubit of |cat_{m+1}> in the
/// X or Z basis with outcome +1. m >= 2.
PureState measured_family(int m, FamilyBasis basis);

/// Parity cascade with a single TDG: W_2 = CX(1,0) TDG(0) CX(1,0) and
/// W_m = CX(m-1,m-2) W_{m-1} CX(m-1,m-2). m >= 2.
Circuit build_Wm(int m);

/// W_m followed by T on every qubit; diagonal with entries i^{floor(|x|/2)}.
Circuit build_Vm(int m);

/// build_Vm with the TDG inside the cascade replaced by T.
Circuit build_Vm_t_inside(int m);

/// Ancilla measurement record of one gadget run. sigma[i] belongs to the
/// ancilla paired with data qubit i.
struct Outcomes {
    int m = 0;
    std::vector<int> sigma;

    /// sigma_i is bit (m-1-i) of `index`, so index 0b10 means sigma = (1, 0).
    static Outcomes from_index(int m, std::uint32_t index);

    int parity() const;
    std::uint32_t index() const;
    std::string str() const;
};

enum class Convention { AsWritten, ConjugateTranspose };

std::string to_string(Convention convention);

/// Clifford fix-up for one outcome record. With sigma parity 0 this is
/// S on every qubit with sigma_i = 1. With parity 1 it is SDG on every qubit
/// with sigma_i = 0 followed by CZ on every pair. ConjugateTranspose returns
/// the inverse circuit. With `skip_nonlocal` only the S^{sigma_i} layer is
/// applied, whatever the parity.
Circuit corrections(const Outcomes &outcomes, Convention convention, bool skip_nonlocal = false);

/// Register layout of the gadget: data qubits 0..m-1, ancillas m..2m-1
/// prepared in |cat*_m>, entangled by CX(i, m+i).
struct GadgetSpec {
    int m = 0;
    std::vector<Gate> entangling;
    PureState ancilla;
};

GadgetSpec make_gadget_spec(int m);

/// Probability of the ancilla record before post-selection.
double branch_probability(const PureState &data, const Outcomes &outcomes);

/// Runs the gadget on `data` (m qubits), post-selects the ancillas on
/// `outcomes` and applies the corrections. Throws std::domain_error for a
/// branch with probability below 1e-12 and std::invalid_argument on size
/// mismatches.
PureState run_gadget(const PureState &data, const Outcomes &outcomes, Convention convention,
                     bool skip_nonlocal = false);

/// What the corrected gadget output should equal: build_Vm, or the T-inside
/// variant when non-local corrections are skipped on an odd-parity record.
Circuit gadget_target(const Outcomes &outcomes, bool skip_nonlocal = false);

struct GadgetSample {
    Outcomes outcomes;
    PureState output;
};

/// Draws the ancilla record from its Born distribution.
GadgetSample sample_gadget(const PureState &data, Convention convention, bool skip_nonlocal, std::mt19937_64 &rng);

/// Exact non-negative fraction, always in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    friend bool operator==(const Rational &, const Rational &) = default;
};

struct GadgetStats {
    int m = 0;
    int t_count = 0;      // of build_Vm(m)
    int direct_cnot = 0;  // CX gates in build_Vm(m), 2(m-1)
    int gadget_cnot = 0;  // entangling layer, m
    /// Average CZ count of corrections() over all 2^m records.
    Rational mean_correction_cz;
    /// gadget_cnot + mean_correction_cz = m(m+3)/4
    Rational effective_two_qubit;
    /// 3 * 2^{2m+1} * (3m - 5), reported only.
    std::uint64_t variant_count_formula = 0;
};

/// Counts taken from the constructed circuits. m in [2, 16].
GadgetStats gadget_stats(int m);

/// Tries both conventions at m = 2 on every outcome and a fixed set of data
/// states and returns the one whose corrected output matches V_2. Throws
/// std::logic_error unless exactly one passes.
Convention resolve_convention();

/// resolve_convention(), computed once.
Convention default_convention();

}  // namespace catgadget
