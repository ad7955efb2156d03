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


#include "catgadget/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace catgadget {

namespace {

std::uint32_t qubit_bit(int n, int qubit) {
    return std::uint32_t{1} << (n - 1 - qubit);
}

}  // namespace

PauliString::PauliString(int num_qubits, std::uint32_t x_bits, std::uint32_t z_bits, int phase)
    : n_(num_qubits), x_(x_bits), z_(z_bits), phase_(((phase % 4) + 4) % 4) {
    if (num_qubits < 1 || num_qubits > 30) {
        throw std::invalid_argument("Pauli qubit count must be in [1, 30]");
    }
    const std::uint32_t mask = (num_qubits == 32) ? ~0U : ((std::uint32_t{1} << num_qubits) - 1);
    if ((x_bits & ~mask) != 0 || (z_bits & ~mask) != 0) {
        throw std::invalid_argument("Pauli bit mask wider than the qubit count");
    }
}

PauliString PauliString::single(int num_qubits, char letter, int qubit) {
    if (qubit < 0 || qubit >= num_qubits) {
        throw std::out_of_range("Pauli qubit out of range");
    }
    const std::uint32_t b = qubit_bit(num_qubits, qubit);
    switch (letter) {
        case 'I': return PauliString(num_qubits, 0, 0);
        case 'X': return PauliString(num_qubits, b, 0);
        case 'Y': return PauliString(num_qubits, b, b);
        case 'Z': return PauliString(num_qubits, 0, b);
        default: throw std::invalid_argument(std::string("unknown Pauli letter ") + letter);
    }
}

PauliString PauliString::parse(std::string_view text) {
    int phase = 0;
    if (text.starts_with("-i")) {
        phase = 3;
        text.remove_prefix(2);
    } else if (text.starts_with("+i")) {
        phase = 1;
        text.remove_prefix(2);
    } else if (text.starts_with("i")) {
        phase = 1;
        text.remove_prefix(1);
    } else if (text.starts_with("-")) {
        phase = 2;
        text.remove_prefix(1);
    } else if (text.starts_with("+")) {
        text.remove_prefix(1);
    }
    const int n = static_cast<int>(text.size());
    if (n == 0) {
        throw std::invalid_argument("empty Pauli string");
    }
    std::uint32_t x = 0;
    std::uint32_t z = 0;
    for (int q = 0; q < n; ++q) {
        const PauliString p = single(n, text[static_cast<std::size_t>(q)], q);
        x |= p.x_;
        z |= p.z_;
    }
    return PauliString(n, x, z, phase);
}

PauliString PauliString::from_index(int num_qubits, std::uint32_t index) {
    const std::uint32_t mask = (std::uint32_t{1} << num_qubits) - 1;
    return PauliString(num_qubits, (index >> num_qubits) & mask, index & mask, 0);
}

char PauliString::letter(int qubit) const {
    const bool x = x_bit(qubit);
    const bool z = z_bit(qubit);
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

int PauliString::action_exponent(std::uint32_t basis_index) const {
    // Y = i X Z, so each Y contributes a factor i; Z contributes (-1)^bit.
    const int num_y = std::popcount(x_ & z_);
    const int sign = std::popcount(z_ & basis_index) & 1;
    return (phase_ + num_y + 2 * sign) & 3;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("Pauli dimension mismatch");
    }
    return ((std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_)) & 1) == 0;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    if (rhs.n_ != n_) {
        throw std::invalid_argument("Pauli dimension mismatch");
    }
    // Track the product through the action on |0>: rhs then this.
    // (P Q)|x> = i^{a_Q(x)} i^{a_P(x ^ xQ)} |x ^ xQ ^ xP>, so the phase at x = 0 fixes i^k.
    const std::uint32_t xr = x_ ^ rhs.x_;
    const std::uint32_t zr = z_ ^ rhs.z_;
    const int total = rhs.action_exponent(0) + action_exponent(rhs.x_);
    const PauliString bare(n_, xr, zr, 0);
    return PauliString(n_, xr, zr, total - bare.action_exponent(0));
}

Eigen::MatrixXcd PauliString::matrix() const {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    static const cplx powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (Eigen::Index col = 0; col < dim; ++col) {
        const auto x = static_cast<std::uint32_t>(col);
        m(static_cast<Eigen::Index>(x ^ x_), col) = powers[action_exponent(x)];
    }
    return m;
}

void PauliString::apply_to(PureState &state) const {
    if (state.num_qubits() != n_) {
        throw std::invalid_argument("Pauli/state dimension mismatch");
    }
    for (int q = 0; q < n_; ++q) {
        switch (letter(q)) {
            case 'X': state.apply(Gate::make(GateKind::X, q)); break;
            case 'Y': state.apply(Gate::make(GateKind::Y, q)); break;
            case 'Z': state.apply(Gate::make(GateKind::Z, q)); break;
            default: break;
        }
    }
    if (phase_ != 0) {
        static const cplx powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        // A global factor applied through a phase on both branches of qubit 0.
        state.apply_matrix(0, {powers[phase_], 0, 0, powers[phase_]});
    }
}

std::string PauliString::str() const {
    static const char *prefixes[4] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[phase_];
    for (int q = 0; q < n_; ++q) {
        out += letter(q);
    }
    return out;
}

}  // namespace catgadget
