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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "catgadget/circuit.hpp"
#include "catgadget/gate.hpp"
#include "catgadget/state.hpp"
#include "test_util.hpp"

namespace catgadget {
namespace {

const double kR = 1.0 / std::numbers::sqrt2;

TEST(Gate, MakeValidatesArityAndQubits) {
    EXPECT_THROW(Gate::make(GateKind::CX, 0), std::invalid_argument);
    EXPECT_THROW(Gate::make(GateKind::H, 0, 1), std::invalid_argument);
    EXPECT_THROW(Gate::make(GateKind::CX, 1, 1), std::invalid_argument);
    EXPECT_THROW(Gate::make(GateKind::T, -1), std::invalid_argument);
    const Gate cz = Gate::make(GateKind::CZ, 3, 1);
    EXPECT_EQ(cz.qubits[0], 1);
    EXPECT_EQ(cz.qubits[1], 3);
}

TEST(Gate, MnemonicsRoundTrip) {
    for (GateKind k : kAllGateKinds) {
        EXPECT_EQ(parse_gate_kind(mnemonic(k)), k);
        EXPECT_EQ(inverse_kind(inverse_kind(k)), k);
    }
    EXPECT_EQ(parse_gate_kind("tdg"), GateKind::TDG);
    EXPECT_FALSE(parse_gate_kind("ccx").has_value());
}

TEST(PureState, ConstructorsAndValidation) {
    PureState zero(3);
    EXPECT_EQ(zero.dim(), 8U);
    EXPECT_EQ(zero[0], cplx(1.0));
    EXPECT_THROW(PureState::from_amplitudes({1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(PureState::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(PureState::normalized({0.0, 0.0}), std::invalid_argument);
    const PureState plus = PureState::plus(2);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(plus[i].real(), 0.5, 1e-15);
}

TEST(PureState, QubitZeroIsMostSignificant) {
    PureState s(3);
    s.apply(Gate::make(GateKind::X, 0));
    EXPECT_NEAR(std::abs(s[4]), 1.0, 1e-15);
    s.apply(Gate::make(GateKind::CX, 0, 2));
    EXPECT_NEAR(std::abs(s[5]), 1.0, 1e-15);
}

TEST(PureState, GateMatchesDefinitions) {
    PureState s = PureState::plus(1);
    s.apply(Gate::make(GateKind::T, 0));
    EXPECT_NEAR(std::abs(s[1] - std::polar(kR, std::numbers::pi / 4)), 0.0, 1e-15);
    s.apply(Gate::make(GateKind::TDG, 0));
    s.apply(Gate::make(GateKind::S, 0));
    EXPECT_NEAR(std::abs(s[1] - cplx(0, kR)), 0.0, 1e-15);
    s.apply(Gate::make(GateKind::SDG, 0));
    s.apply(Gate::make(GateKind::H, 0));
    EXPECT_NEAR(std::abs(s[0]), 1.0, 1e-15);
    PureState y(1);
    y.apply(Gate::make(GateKind::Y, 0));
    EXPECT_NEAR(std::abs(y[1] - cplx(0, 1)), 0.0, 1e-15);
}

TEST(PureState, CzIsSymmetric) {
    const PureState in = testing::seeded_state(3, 5);
    PureState a = in, b = in;
    a.apply(Gate::make(GateKind::CZ, 0, 2));
    b.apply(Gate::make(GateKind::CZ, 2, 0));
    testing::expect_amplitudes_near(a, b, 1e-15);
}

TEST(PureState, OutOfRangeQubitThrows) {
    PureState s(2);
    EXPECT_THROW(s.apply(Gate::make(GateKind::H, 2)), std::out_of_range);
}

TEST(PureState, RandomStateIsReproducibleAndNormalised) {
    const PureState a = testing::seeded_state(4, 99);
    const PureState b = testing::seeded_state(4, 99);
    const PureState c = testing::seeded_state(4, 100);
    testing::expect_amplitudes_near(a, b, 0.0);
    EXPECT_NEAR(a.norm(), 1.0, 1e-12);
    EXPECT_LT(fidelity_up_to_phase(a, c), 0.999);
}

TEST(Measurement, BellStateCollapses) {
    PureState bell(2);
    bell.apply(Gate::make(GateKind::H, 0));
    bell.apply(Gate::make(GateKind::CX, 0, 1));
    EXPECT_NEAR(outcome_probability(bell, 0, PauliBasis::Z, 1), 0.5, 1e-15);
    const auto r = measure_qubit(bell, 0, PauliBasis::Z, -1);
    EXPECT_NEAR(r.probability, 0.5, 1e-15);
    EXPECT_EQ(r.post_state.num_qubits(), 1);
    EXPECT_NEAR(std::abs(r.post_state[1]), 1.0, 1e-15);
    const auto x = measure_qubit(bell, 1, PauliBasis::X, 1);
    EXPECT_NEAR(x.probability, 0.5, 1e-15);
    EXPECT_NEAR(fidelity_up_to_phase(x.post_state, PureState::plus(1)), 1.0, 1e-12);
}

TEST(Measurement, ImpossibleOutcomeThrows) {
    PureState s(2);
    EXPECT_THROW(measure_qubit(s, 0, PauliBasis::Z, -1), std::domain_error);
    EXPECT_THROW(measure_qubit(PureState(1), 0, PauliBasis::Z, 1), std::invalid_argument);
}

TEST(Measurement, YEigenvectors) {
    PureState plus_i = PureState::from_amplitudes({kR, cplx(0, kR)});
    EXPECT_NEAR(outcome_probability(plus_i, 0, PauliBasis::Y, 1), 1.0, 1e-15);
    EXPECT_NEAR(outcome_probability(plus_i, 0, PauliBasis::Y, -1), 0.0, 1e-15);
}

TEST(DensityMatrix, PartialTraceOfProductIsPure) {
    const PureState a = testing::seeded_state(1, 1), b = testing::seeded_state(2, 2);
    const PureState ab = tensor(a, b);
    EXPECT_EQ(ab.num_qubits(), 3);
    const DensityMatrix r0 = partial_trace_single(ab, 0);
    EXPECT_NEAR(r0.purity(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(r0.at(0, 1) - a[0] * std::conj(a[1])), 0.0, 1e-12);
    EXPECT_TRUE(r0.is_valid());
    EXPECT_NEAR(r0.trace().real(), 1.0, 1e-12);
}

TEST(DensityMatrix, BellMarginalIsMaximallyMixed) {
    PureState bell(2);
    bell.apply(Gate::make(GateKind::H, 0));
    bell.apply(Gate::make(GateKind::CX, 0, 1));
    EXPECT_NEAR(partial_trace_single(bell, 1).purity(), 0.5, 1e-12);
}

TEST(DensityMatrix, InvalidInputsAreRejectedByValidity) {
    DensityMatrix bad(1, {0.5, 0.0, 0.0, 0.6});
    EXPECT_FALSE(bad.is_valid());
    DensityMatrix negative(1, {1.2, 0.0, 0.0, -0.2});
    EXPECT_FALSE(negative.is_valid());
}

TEST(Inner, DimensionMismatchThrows) {
    EXPECT_THROW(inner(PureState(1), PureState(2)), std::invalid_argument);
    EXPECT_NEAR(fidelity_up_to_phase(PureState(2), PureState::basis(2, 0)), 1.0, 1e-15);
}

// ---------------------------------------------------------------------------

TEST(Circuit, ParseSerializeRoundTrip) {
    const char *text =
        "# example\n"
        "qubits 3\n"
        "h 0\n"
        "CX 0 1   # entangle\n"
        "tdg 2\n"
        "cz 2 1\n";
    const Circuit c = parse_circuit(text);
    EXPECT_EQ(c.num_qubits(), 3);
    ASSERT_EQ(c.size(), 4U);
    EXPECT_EQ(c.gates()[3], Gate::make(GateKind::CZ, 1, 2));
    EXPECT_EQ(parse_circuit(serialize_circuit(c)), c);
}

TEST(Circuit, ParseErrorsCarryLineNumbers) {
    try {
        parse_circuit("qubits 2\nh 0\nfoo 1\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3);
    }
    EXPECT_THROW(parse_circuit("h 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\ncx 0 2\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\ncx 0\n"), ParseError);
    EXPECT_THROW(parse_circuit(""), ParseError);
}

TEST(Circuit, QasmSubset) {
    const char *qasm =
        "OPENQASM 2.0;\n"
        "include \"qelib1.inc\";\n"
        "qreg q[3];\n"
        "// comment\n"
        "h q[0];\n"
        "cx q[0],q[2];\n"
        "tdg q[1];\n";
    const Circuit c = parse_qasm(qasm);
    EXPECT_EQ(c.num_qubits(), 3);
    ASSERT_EQ(c.size(), 3U);
    EXPECT_EQ(c.gates()[1], Gate::make(GateKind::CX, 0, 2));
    EXPECT_THROW(parse_qasm("qreg q[2];\nccx q[0],q[1],q[0];\n"), ParseError);
    EXPECT_THROW(parse_qasm("h q[0];\n"), ParseError);
}

TEST(Circuit, AppendChecksWidth) {
    Circuit c(2);
    EXPECT_THROW(c.append(GateKind::CX, 0, 2), std::out_of_range);
    Circuit inner(2);
    inner.append(GateKind::CX, 0, 1);
    Circuit outer(4);
    const int map[] = {3, 1};
    outer.append_mapped(inner, map);
    EXPECT_EQ(outer.gates()[0], Gate::make(GateKind::CX, 3, 1));
}

TEST(Circuit, InverseUndoesCircuit) {
    Circuit c(3);
    c.append(GateKind::H, 0);
    c.append(GateKind::T, 1);
    c.append(GateKind::CX, 0, 2);
    c.append(GateKind::S, 2);
    c.append(GateKind::CZ, 1, 2);
    const PureState in = testing::seeded_state(3, 7);
    const PureState out = simulate(invert_circuit(c), simulate(c, in));
    testing::expect_amplitudes_near(out, in, 1e-13);
}

TEST(Circuit, CountsAndUnitary) {
    Circuit c(2);
    c.append(GateKind::T, 0);
    c.append(GateKind::TDG, 1);
    c.append(GateKind::CX, 0, 1);
    c.append(GateKind::CZ, 0, 1);
    c.append(GateKind::H, 1);
    const GateCounts g = count_gates(c);
    EXPECT_EQ(g.t_count, 2);
    EXPECT_EQ(g.cnot_count, 1);
    EXPECT_EQ(g.cz_count, 1);
    EXPECT_EQ(g.clifford_1q, 1);
    EXPECT_EQ(g.total, 5);

    const Eigen::MatrixXcd u = circuit_unitary(c);
    EXPECT_NEAR((u.adjoint() * u - Eigen::MatrixXcd::Identity(4, 4)).norm(), 0.0, 1e-13);
    const PureState in = testing::seeded_state(2, 3);
    Eigen::VectorXcd v(4);
    for (int i = 0; i < 4; ++i) v(i) = in[static_cast<std::size_t>(i)];
    const Eigen::VectorXcd w = u * v;
    const PureState out = simulate(c, in);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(w(i) - out[static_cast<std::size_t>(i)]), 0.0, 1e-13);
}

}  // namespace
}  // namespace catgadget
