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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catgadget/gate.hpp"
#include "catgadget/state.hpp"

namespace catgadget {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class Circuit {
public:
    explicit Circuit(int num_qubits);
    Circuit(int num_qubits, std::vector<Gate> gates);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Throws std::out_of_range when the gate touches a qubit >= num_qubits().
    void append(const Gate &gate);
    void append(GateKind kind, int q0, int q1 = -1) { append(Gate::make(kind, q0, q1)); }

    /// Appends `other` with its qubit i relabelled to qubit_map[i].
    void append_mapped(const Circuit &other, std::span<const int> qubit_map);

    friend bool operator==(const Circuit &, const Circuit &) = default;

private:
    int num_qubits_;
    std::vector<Gate> gates_;
};

struct GateCounts {
    int t_count = 0;     // T + TDG
    int cnot_count = 0;  // CX
    int cz_count = 0;
    int clifford_1q = 0;  // H, S, SDG, X, Y, Z
    int total = 0;
};

/// Native text format: first non-comment line `qubits N`, then one gate per
/// line (mnemonic then qubit indices). `#` starts a comment; mnemonics are
/// case-insensitive.
Circuit parse_circuit(std::string_view text);

/// Single-qreg OpenQASM 2 subset: h s sdg t tdg x y z cx cz. The OPENQASM
/// header, include lines and // comments are skipped; anything else is a ParseError.
Circuit parse_qasm(std::string_view text);

/// Chooses the QASM importer for a `.qasm` extension, the native parser otherwise.
Circuit load_circuit(const std::filesystem::path &path);

std::string serialize_circuit(const Circuit &circuit);

/// Reversed gate order with S<->SDG and T<->TDG.
Circuit invert_circuit(const Circuit &circuit);

PureState simulate(const Circuit &circuit, PureState input);

GateCounts count_gates(const Circuit &circuit);

/// Dense 2^n x 2^n unitary; column j is the image of basis state j.
Eigen::MatrixXcd circuit_unitary(const Circuit &circuit);

}  // namespace catgadget
