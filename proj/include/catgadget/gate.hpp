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
#include <optional>
#include <string>
#include <string_view>

namespace catgadget {

enum class GateKind : std::uint8_t { H, S, SDG, T, TDG, X, Y, Z, CX, CZ };

inline constexpr std::array<GateKind, 10> kAllGateKinds = {
    GateKind::H, GateKind::S, GateKind::SDG, GateKind::T, GateKind::TDG,
    GateKind::X, GateKind::Y, GateKind::Z, GateKind::CX, GateKind::CZ};

constexpr int arity(GateKind kind) {
    return (kind == GateKind::CX || kind == GateKind::CZ) ? 2 : 1;
}

/// Upper-case mnemonic, e.g. "SDG".
std::string_view mnemonic(GateKind kind);

/// Case-insensitive lookup; nullopt for unknown names.
std::optional<GateKind> parse_gate_kind(std::string_view name);

GateKind inverse_kind(GateKind kind);

/// One gate of the fixed alphabet. For CX, qubits[0] is the control.
/// CZ is symmetric and always stored with qubits[0] < qubits[1].
struct Gate {
    GateKind kind = GateKind::H;
    std::array<int, 2> qubits = {0, -1};

    /// Throws std::invalid_argument on arity mismatch, negative or repeated indices.
    static Gate make(GateKind kind, int q0, int q1 = -1);

    int arity() const { return catgadget::arity(kind); }
    bool acts_on(int q) const { return qubits[0] == q || (arity() == 2 && qubits[1] == q); }
    int max_qubit() const { return arity() == 2 && qubits[1] > qubits[0] ? qubits[1] : qubits[0]; }

    friend bool operator==(const Gate &, const Gate &) = default;
};

std::string to_string(const Gate &gate);

}  // namespace catgadget
