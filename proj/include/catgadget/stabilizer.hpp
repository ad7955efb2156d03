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

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "catgadget/pauli.hpp"
#include "catgadget/state.hpp"

namespace catgadget {

/// Pure stabilizer state in affine/phase form. Its support is
/// { offset ^ sum_j y_j basis[j] : y in F_2^k } and the amplitude at y is
/// 2^{-k/2} * i^{l.y} * (-1)^{q(y)}, where l is `linear` (bit j = l_j) and
/// q(y) = sum_{i<=j} Q_ij y_i y_j with row i of Q stored in quadratic[i]
/// (bit j set means Q_ij = 1; only j >= i is used).
struct StabilizerStateForm {
    int num_qubits = 1;
    std::vector<std::uint32_t> basis;
    std::uint32_t offset = 0;
    std::uint32_t linear = 0;
    std::vector<std::uint32_t> quadratic;

    int dimension() const { return static_cast<int>(basis.size()); }

    /// Exponent of i (mod 4) for the support point labelled by y.
    int phase_exponent(std::uint32_t y) const;

    /// (amplitude index, exponent of i) for every support point.
    std::vector<std::pair<std::uint32_t, int>> phase_table() const;

    /// Normalized amplitudes, globally rephased so the lowest-index nonzero
    /// amplitude is real and positive.
    PureState to_statevector() const;

    friend bool operator==(const StabilizerStateForm &, const StabilizerStateForm &) = default;
};

/// All n-qubit pure stabilizer states, n in [1, 4], without duplicates.
/// Throws std::invalid_argument outside that range.
std::vector<StabilizerStateForm> enumerate_stabilizer_states(int num_qubits);

/// 2^n * prod_{k=1..n} (2^k + 1)
std::uint64_t stabilizer_state_count(int num_qubits);

/// Exact <phi|P|phi> for Hermitian P. Throws std::invalid_argument on a
/// dimension mismatch or a non-Hermitian P.
int pauli_expectation(const StabilizerStateForm &state, const PauliString &pauli);

/// Expectations of all 4^n phase-free Paulis, indexed as in PauliString::from_index.
std::vector<std::int8_t> pauli_expectations(const StabilizerStateForm &state);

/// Enumeration with an on-disk cache. When `cache_dir` is empty the
/// CATGADGET_CACHE_DIR environment variable is consulted; with neither set
/// this is a plain enumeration. Stale or foreign cache files are ignored.
std::vector<StabilizerStateForm> load_or_enumerate_stabilizer_states(int num_qubits,
                                                                     std::filesystem::path cache_dir = {});

inline constexpr int kStabilizerCacheVersion = 1;

void write_stabilizer_cache(const std::filesystem::path &file, int num_qubits,
                            const std::vector<StabilizerStateForm> &states);

/// nullopt when the file is missing, has the wrong version or the wrong n.
std::optional<std::vector<StabilizerStateForm>> read_stabilizer_cache(const std::filesystem::path &file,
                                                                      int num_qubits);

// Clifford hierarchy -------------------------------------------------------

inline constexpr double kHierarchyTolerance = 1e-8;

/// The Pauli (phase restricted to {1, i, -1, -i}) equal to `u` entrywise
/// within tol, or nullopt. Throws std::invalid_argument for a non-square or
/// non-power-of-two matrix.
std::optional<PauliString> is_pauli(const Eigen::MatrixXcd &u, double tol = kHierarchyTolerance);

/// True iff u P u^dagger lies in level k-1 for every generator P in
/// {X_q, Z_q}; level 1 is the Pauli group. k in [1, 3]; dimension at most 2^6.
bool hierarchy_level_at_most(const Eigen::MatrixXcd &u, int k, double tol = kHierarchyTolerance);

}  // namespace catgadget
