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
#include <string>
#include <string_view>

#include "catgadget/state.hpp"

namespace catgadget {

/// n-qubit Pauli operator i^phase * (sigma_0 (x) ... (x) sigma_{n-1}) with
/// sigma_q in {I, X, Y, Z} selected by (x_q, z_q) = (0,0), (1,0), (1,1), (0,1).
/// Bit masks follow the amplitude-index convention: qubit q is bit n-1-q.
class PauliString {
public:
    PauliString() = default;
    PauliString(int num_qubits, std::uint32_t x_bits, std::uint32_t z_bits, int phase = 0);

    static PauliString identity(int num_qubits) { return PauliString(num_qubits, 0, 0, 0); }

    /// Single-letter Pauli on one qubit, e.g. single(3, 'X', 0) = X (x) I (x) I.
    static PauliString single(int num_qubits, char letter, int qubit);

    /// Parses an optional sign prefix (+, -, i, -i, +i) followed by n letters from IXYZ.
    static PauliString parse(std::string_view text);

    /// The k-th of the 4^n phase-free Paulis; index bits (x_bits << n) | z_bits.
    static PauliString from_index(int num_qubits, std::uint32_t index);

    int num_qubits() const { return n_; }
    std::uint32_t x_bits() const { return x_; }
    std::uint32_t z_bits() const { return z_; }
    /// Exponent k of the prefactor i^k, in [0, 4).
    int phase() const { return phase_; }

    bool is_hermitian() const { return (phase_ & 1) == 0; }
    bool x_bit(int qubit) const { return ((x_ >> (n_ - 1 - qubit)) & 1U) != 0; }
    bool z_bit(int qubit) const { return ((z_ >> (n_ - 1 - qubit)) & 1U) != 0; }
    char letter(int qubit) const;

    /// P|x> = coefficient(x) |x ^ x_bits()>; returned as an exponent of i.
    int action_exponent(std::uint32_t basis_index) const;

    bool commutes_with(const PauliString &other) const;

    PauliString operator*(const PauliString &rhs) const;

    Eigen::MatrixXcd matrix() const;

    /// In-place P|psi>.
    void apply_to(PureState &state) const;

    std::string str() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

private:
    int n_ = 0;
    std::uint32_t x_ = 0;
    std::uint32_t z_ = 0;
    int phase_ = 0;
};

}  // namespace catgadget
