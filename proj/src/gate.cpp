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


#include "catgadget/gate.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace catgadget {

std::string_view mnemonic(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::SDG: return "SDG";
        case GateKind::T: return "T";
        case GateKind::TDG: return "TDG";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::CX: return "CX";
        case GateKind::CZ: return "CZ";
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (GateKind k : kAllGateKinds) {
        if (mnemonic(k) == upper) {
            return k;
        }
    }
    return std::nullopt;
}

GateKind inverse_kind(GateKind kind) {
    switch (kind) {
        case GateKind::S: return GateKind::SDG;
        case GateKind::SDG: return GateKind::S;
        case GateKind::T: return GateKind::TDG;
        case GateKind::TDG: return GateKind::T;
        default: return kind;
    }
}

Gate Gate::make(GateKind kind, int q0, int q1) {
    if (q0 < 0) {
        throw std::invalid_argument("negative qubit index");
    }
    if (catgadget::arity(kind) == 1) {
        if (q1 != -1) {
            throw std::invalid_argument(std::string(mnemonic(kind)) + " takes one qubit");
        }
        return Gate{kind, {q0, -1}};
    }
    if (q1 < 0) {
        throw std::invalid_argument(std::string(mnemonic(kind)) + " takes two qubits");
    }
    if (q0 == q1) {
        throw std::invalid_argument(std::string(mnemonic(kind)) + " needs two distinct qubits");
    }
    if (kind == GateKind::CZ && q1 < q0) {
        std::swap(q0, q1);
    }
    return Gate{kind, {q0, q1}};
}

std::string to_string(const Gate &gate) {
    std::string out(mnemonic(gate.kind));
    out += ' ';
    out += std::to_string(gate.qubits[0]);
    if (gate.arity() == 2) {
        out += ' ';
        out += std::to_string(gate.qubits[1]);
    }
    return out;
}

}  // namespace catgadget
