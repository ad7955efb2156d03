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

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "catgadget/simplex.hpp"
#include "catgadget/stabilizer.hpp"
#include "catgadget/state.hpp"

namespace catgadget {

/// Enumerated stabilizer states for one register size together with their
/// Pauli expectation vectors (the LP columns).
struct StabilizerBasis {
    int num_qubits = 0;
    std::vector<StabilizerStateForm> states;
    /// states.size() rows of 4^n entries in {-1, 0, 1}.
    std::vector<std::vector<std::int8_t>> expectations;
};

/// Built once per n and shared; thread-safe. n in [1, 4].
const StabilizerBasis &shared_stabilizer_basis(int num_qubits);

struct RomResult {
    double value = 0.0;
    /// Stabilizer-state index (into shared_stabilizer_basis(basis_n).states) -> x_i.
    std::map<std::size_t, double> coefficients;
    int basis_n = 0;
    long iterations = 0;
};

inline constexpr double kRomReconstructionTolerance = 1e-6;

/// Robustness of magic: min sum |x_i| over sum_i x_i |phi_i><phi_i| = rho.
/// Throws std::invalid_argument when rho is not a valid density matrix or
/// n is outside [1, 4], and std::runtime_error if the LP fails or the
/// optimal mixture does not reproduce rho.
RomResult rom(const DensityMatrix &rho, const lp::Options &options = {});
RomResult rom(const PureState &state, const lp::Options &options = {});

/// Tr(P rho) for every phase-free Pauli, ordered as PauliString::from_index.
std::vector<double> pauli_vector(const DensityMatrix &rho);

struct RankResult {
    int rank = 0;
    /// (c_i, stabilizer-state index into shared_stabilizer_basis(n).states)
    std::vector<std::pair<std::complex<double>, std::size_t>> decomposition;
    bool found = false;
};

inline constexpr double kRankResidualTolerance = 1e-8;

/// Smallest r <= r_max such that some r stabilizer states span the input.
/// Exhaustive; n in [1, 2] and r_max in [1, 4], else std::invalid_argument.
RankResult brute_rank(const PureState &state, int r_max = 4);

}  // namespace catgadget
