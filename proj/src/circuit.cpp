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


#include "catgadget/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace catgadget {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

int parse_index(std::string_view token, int line) {
    int value = -1;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
        throw ParseError(line, "bad qubit index '" + std::string(token) + "'");
    }
    return value;
}

Gate checked_gate(GateKind kind, const std::vector<int> &qubits, int num_qubits, int line) {
    if (static_cast<int>(qubits.size()) != arity(kind)) {
        throw ParseError(line, std::string(mnemonic(kind)) + " expects " + std::to_string(arity(kind)) +
                                   " qubit(s), got " + std::to_string(qubits.size()));
    }
    for (int q : qubits) {
        if (q >= num_qubits) {
            throw ParseError(line, "qubit " + std::to_string(q) + " >= declared count " + std::to_string(num_qubits));
        }
    }
    try {
        return Gate::make(kind, qubits[0], qubits.size() > 1 ? qubits[1] : -1);
    } catch (const std::invalid_argument &e) {
        throw ParseError(line, e.what());
    }
}

}  // namespace

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

Circuit::Circuit(int num_qubits, std::vector<Gate> gates) : Circuit(num_qubits) {
    gates_.reserve(gates.size());
    for (const Gate &g : gates) {
        append(g);
    }
}

void Circuit::append(const Gate &gate) {
    if (gate.max_qubit() >= num_qubits_) {
        throw std::out_of_range("gate " + to_string(gate) + " exceeds circuit width " + std::to_string(num_qubits_));
    }
    gates_.push_back(gate);
}

void Circuit::append_mapped(const Circuit &other, std::span<const int> qubit_map) {
    if (static_cast<int>(qubit_map.size()) < other.num_qubits()) {
        throw std::invalid_argument("qubit map shorter than the appended circuit");
    }
    for (const Gate &g : other.gates()) {
        const int a = qubit_map[static_cast<std::size_t>(g.qubits[0])];
        const int b = g.arity() == 2 ? qubit_map[static_cast<std::size_t>(g.qubits[1])] : -1;
        append(Gate::make(g.kind, a, b));
    }
}

Circuit parse_circuit(std::string_view text) {
    int num_qubits = -1;
    std::vector<Gate> gates;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto tokens = split_ws(line);
        if (num_qubits < 0) {
            if (tokens.size() != 2 || !iequals(tokens[0], "qubits")) {
                throw ParseError(line_no, "missing 'qubits N' header");
            }
            num_qubits = parse_index(tokens[1], line_no);
            if (num_qubits < 1) {
                throw ParseError(line_no, "qubit count must be positive");
            }
            continue;
        }
        const auto kind = parse_gate_kind(tokens[0]);
        if (!kind) {
            throw ParseError(line_no, "unknown mnemonic '" + std::string(tokens[0]) + "'");
        }
        std::vector<int> qubits;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            qubits.push_back(parse_index(tokens[i], line_no));
        }
        gates.push_back(checked_gate(*kind, qubits, num_qubits, line_no));
    }
    if (num_qubits < 0) {
        throw ParseError(line_no, "missing 'qubits N' header");
    }
    return Circuit(num_qubits, std::move(gates));
}

Circuit parse_qasm(std::string_view text) {
    // Strip // comments while remembering which line each character came from.
    std::string clean;
    std::vector<int> line_of;
    int line_no = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') {
                ++i;
            }
            if (i == text.size()) {
                break;
            }
        }
        clean.push_back(text[i]);
        line_of.push_back(line_no);
        if (text[i] == '\n') {
            ++line_no;
        }
    }

    std::string reg;
    int num_qubits = -1;
    std::vector<Gate> gates;
    std::size_t start = 0;
    while (start < clean.size()) {
        std::size_t semi = clean.find(';', start);
        const bool terminated = semi != std::string::npos;
        if (!terminated) {
            semi = clean.size();
        }
        std::string_view stmt = trim(std::string_view(clean).substr(start, semi - start));
        std::size_t first = start;
        while (first < semi && std::isspace(static_cast<unsigned char>(clean[first]))) {
            ++first;
        }
        const int line = first < line_of.size() ? line_of[first] : line_no;
        start = semi + 1;
        if (stmt.empty()) {
            continue;
        }
        if (!terminated) {
            throw ParseError(line, "missing ';'");
        }
        const auto space = stmt.find_first_of(" \t\r\n");
        const std::string_view head = stmt.substr(0, space);
        const std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(stmt.substr(space));
        if (head == "OPENQASM" || head == "include") {
            continue;
        }
        if (head == "qreg") {
            if (num_qubits >= 0) {
                throw ParseError(line, "only a single qreg is supported");
            }
            const auto lb = rest.find('[');
            const auto rb = rest.find(']');
            if (lb == std::string_view::npos || rb == std::string_view::npos || rb < lb) {
                throw ParseError(line, "malformed qreg");
            }
            reg = std::string(trim(rest.substr(0, lb)));
            num_qubits = parse_index(trim(rest.substr(lb + 1, rb - lb - 1)), line);
            if (num_qubits < 1) {
                throw ParseError(line, "qreg size must be positive");
            }
            continue;
        }
        bool lower = !head.empty();
        for (char c : head) {
            lower = lower && !std::isupper(static_cast<unsigned char>(c));
        }
        const auto kind = lower ? parse_gate_kind(head) : std::nullopt;
        if (!kind) {
            throw ParseError(line, "unsupported statement '" + std::string(head) + "'");
        }
        if (num_qubits < 0) {
            throw ParseError(line, "gate before qreg declaration");
        }
        std::vector<int> qubits;
        std::string_view args = rest;
        while (!args.empty()) {
            const auto comma = args.find(',');
            std::string_view arg = trim(args.substr(0, comma));
            args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
            const auto lb = arg.find('[');
            const auto rb = arg.find(']');
            if (lb == std::string_view::npos || rb != arg.size() - 1 || trim(arg.substr(0, lb)) != reg) {
                throw ParseError(line, "bad operand '" + std::string(arg) + "'");
            }
            qubits.push_back(parse_index(trim(arg.substr(lb + 1, rb - lb - 1)), line));
        }
        gates.push_back(checked_gate(*kind, qubits, num_qubits, line));
    }
    if (num_qubits < 0) {
        throw ParseError(line_no, "no qreg declaration");
    }
    return Circuit(num_qubits, std::move(gates));
}

Circuit load_circuit(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (path.extension() == ".qasm") {
        return parse_qasm(buf.str());
    }
    return parse_circuit(buf.str());
}

std::string serialize_circuit(const Circuit &circuit) {
    std::string out = "qubits " + std::to_string(circuit.num_qubits()) + "\n";
    for (const Gate &g : circuit.gates()) {
        out += to_string(g);
        out += '\n';
    }
    return out;
}

Circuit invert_circuit(const Circuit &circuit) {
    std::vector<Gate> gates;
    gates.reserve(circuit.size());
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        Gate g = *it;
        g.kind = inverse_kind(g.kind);
        gates.push_back(g);
    }
    return Circuit(circuit.num_qubits(), std::move(gates));
}

PureState simulate(const Circuit &circuit, PureState input) {
    if (input.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("simulate: state has " + std::to_string(input.num_qubits()) +
                                    " qubits, circuit has " + std::to_string(circuit.num_qubits()));
    }
    for (const Gate &g : circuit.gates()) {
        input.apply(g);
    }
    return input;
}

GateCounts count_gates(const Circuit &circuit) {
    GateCounts counts;
    for (const Gate &g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::T:
            case GateKind::TDG: ++counts.t_count; break;
            case GateKind::CX: ++counts.cnot_count; break;
            case GateKind::CZ: ++counts.cz_count; break;
            default: ++counts.clifford_1q; break;
        }
        ++counts.total;
    }
    return counts;
}

Eigen::MatrixXcd circuit_unitary(const Circuit &circuit) {
    const int n = circuit.num_qubits();
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        const PureState col = simulate(circuit, PureState::basis(n, static_cast<std::size_t>(j)));
        for (Eigen::Index i = 0; i < dim; ++i) {
            u(i, j) = col[static_cast<std::size_t>(i)];
        }
    }
    return u;
}

}  // namespace catgadget
