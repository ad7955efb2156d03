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


#include "catgadget/state.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace catgadget {

namespace {

constexpr double kMinOutcomeProbability = 1e-12;

std::size_t stride_of(int num_qubits, int qubit) {
    return std::size_t{1} << (num_qubits - 1 - qubit);
}

void check_qubit(int num_qubits, int qubit) {
    if (qubit < 0 || qubit >= num_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
}

int qubits_for_dim(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2, got " + std::to_string(dim));
    }
    return std::countr_zero(dim);
}

// Eigenvector of the chosen Pauli with eigenvalue `outcome`.
std::pair<cplx, cplx> eigenvector(PauliBasis basis, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("measurement outcome must be +1 or -1");
    }
    const double r = std::numbers::sqrt2 / 2.0;
    const double s = static_cast<double>(outcome);
    switch (basis) {
        case PauliBasis::Z:
            return outcome == 1 ? std::pair{cplx{1, 0}, cplx{0, 0}} : std::pair{cplx{0, 0}, cplx{1, 0}};
        case PauliBasis::X:
            return {cplx{r, 0}, cplx{s * r, 0}};
        case PauliBasis::Y:
            return {cplx{r, 0}, cplx{0, s * r}};
    }
    throw std::invalid_argument("unknown basis");
}

// Unnormalized amplitudes of <e|_qubit |psi>.
std::vector<cplx> project(const PureState &state, int qubit, PauliBasis basis, int outcome) {
    const int n = state.num_qubits();
    check_qubit(n, qubit);
    const auto [e0, e1] = eigenvector(basis, outcome);
    const int p = n - 1 - qubit;
    const std::size_t low_mask = (std::size_t{1} << p) - 1;
    const std::size_t reduced_dim = state.dim() / 2;
    std::vector<cplx> out(reduced_dim);
    for (std::size_t r = 0; r < reduced_dim; ++r) {
        const std::size_t full0 = ((r & ~low_mask) << 1) | (r & low_mask);
        const std::size_t full1 = full0 | (std::size_t{1} << p);
        out[r] = std::conj(e0) * state[full0] + std::conj(e1) * state[full1];
    }
    return out;
}

double squared_norm(std::span<const cplx> v) {
    double acc = 0.0;
    for (const cplx &a : v) {
        acc += std::norm(a);
    }
    return acc;
}

}  // namespace

PureState::PureState(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 30) {
        throw std::invalid_argument("qubit count must be in [1, 30], got " + std::to_string(num_qubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

PureState PureState::from_amplitudes(std::vector<cplx> amplitudes) {
    const int n = qubits_for_dim(amplitudes.size());
    const double norm = std::sqrt(squared_norm(amplitudes));
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state is not normalized (norm " + std::to_string(norm) + ")");
    }
    return PureState(n, std::move(amplitudes));
}

PureState PureState::normalized(std::vector<cplx> amplitudes) {
    const int n = qubits_for_dim(amplitudes.size());
    const double norm = std::sqrt(squared_norm(amplitudes));
    if (norm < 1e-300) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    for (cplx &a : amplitudes) {
        a /= norm;
    }
    return PureState(n, std::move(amplitudes));
}

PureState PureState::basis(int num_qubits, std::size_t index) {
    PureState s(num_qubits);
    if (index >= s.dim()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

PureState PureState::plus(int num_qubits) {
    PureState s(num_qubits);
    const double a = 1.0 / std::sqrt(static_cast<double>(s.dim()));
    for (cplx &x : s.amps_) {
        x = a;
    }
    return s;
}

double PureState::norm() const {
    return std::sqrt(squared_norm(amps_));
}

kernels::Mat2 gate_matrix(GateKind kind) {
    const double r = std::numbers::sqrt2 / 2.0;
    const cplx omega{r, r};
    switch (kind) {
        case GateKind::H: return {r, r, r, -r};
        case GateKind::X: return {0, 1, 1, 0};
        case GateKind::Y: return {0, cplx{0, -1}, cplx{0, 1}, 0};
        case GateKind::Z: return {1, 0, 0, -1};
        case GateKind::S: return {1, 0, 0, cplx{0, 1}};
        case GateKind::SDG: return {1, 0, 0, cplx{0, -1}};
        case GateKind::T: return {1, 0, 0, omega};
        case GateKind::TDG: return {1, 0, 0, std::conj(omega)};
        case GateKind::CX:
        case GateKind::CZ: break;
    }
    throw std::invalid_argument("gate_matrix: not a single-qubit gate");
}

void PureState::apply(const Gate &gate) {
    const int n = num_qubits_;
    check_qubit(n, gate.qubits[0]);
    if (gate.arity() == 2) {
        check_qubit(n, gate.qubits[1]);
    }
    const std::size_t dim = amps_.size();
    const std::size_t s0 = stride_of(n, gate.qubits[0]);
    switch (gate.kind) {
        case GateKind::H:
        case GateKind::Y:
            kernels::apply_mat2(mutable_amps(), s0, gate_matrix(gate.kind));
            return;
        case GateKind::X:
            for (std::size_t base = 0; base < dim; base += 2 * s0) {
                std::swap_ranges(amps_.begin() + static_cast<std::ptrdiff_t>(base),
                                 amps_.begin() + static_cast<std::ptrdiff_t>(base + s0),
                                 amps_.begin() + static_cast<std::ptrdiff_t>(base + s0));
            }
            return;
        case GateKind::Z:
        case GateKind::S:
        case GateKind::SDG:
        case GateKind::T:
        case GateKind::TDG:
            kernels::apply_phase(mutable_amps(), s0, gate_matrix(gate.kind).m11);
            return;
        case GateKind::CX: {
            const std::size_t st = stride_of(n, gate.qubits[1]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & s0) != 0 && (i & st) == 0) {
                    std::swap(amps_[i], amps_[i | st]);
                }
            }
            return;
        }
        case GateKind::CZ: {
            const std::size_t both = s0 | stride_of(n, gate.qubits[1]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & both) == both) {
                    amps_[i] = -amps_[i];
                }
            }
            return;
        }
    }
}

void PureState::apply_matrix(int qubit, const kernels::Mat2 &u) {
    check_qubit(num_qubits_, qubit);
    kernels::apply_mat2(mutable_amps(), stride_of(num_qubits_, qubit), u);
}

DensityMatrix::DensityMatrix(int num_qubits, std::vector<cplx> entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
    if (num_qubits < 1 || num_qubits > 14) {
        throw std::invalid_argument("density matrix qubit count must be in [1, 14]");
    }
    if (entries_.size() != dim() * dim()) {
        throw std::invalid_argument("density matrix entry count does not match 4^n");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &state) {
    const std::size_t d = state.dim();
    std::vector<cplx> rho(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            rho[r * d + c] = state[r] * std::conj(state[c]);
        }
    }
    return DensityMatrix(state.num_qubits(), std::move(rho));
}

cplx DensityMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
        t += at(i, i);
    }
    return t;
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum_ij rho_ij rho_ji = sum_ij |rho_ij|^2 for Hermitian rho.
    double acc = 0.0;
    for (const cplx &e : entries_) {
        acc += std::norm(e);
    }
    return acc;
}

bool DensityMatrix::is_valid(double tol) const {
    const std::size_t d = dim();
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) {
                return false;
            }
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = at(r, c);
        }
    }
    if (std::abs(trace() - 1.0) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tol;
}

PureState apply_gate(PureState state, const Gate &gate) {
    state.apply(gate);
    return state;
}

cplx inner(const PureState &a, const PureState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity_up_to_phase(const PureState &a, const PureState &b) {
    return std::min(1.0, std::abs(inner(a, b)));
}

double outcome_probability(const PureState &state, int qubit, PauliBasis basis, int outcome) {
    return squared_norm(project(state, qubit, basis, outcome));
}

MeasureResult measure_qubit(const PureState &state, int qubit, PauliBasis basis, int outcome) {
    if (state.num_qubits() < 2) {
        throw std::invalid_argument("measure_qubit needs at least two qubits (the measured one is removed)");
    }
    std::vector<cplx> post = project(state, qubit, basis, outcome);
    const double p = squared_norm(post);
    if (p < kMinOutcomeProbability) {
        throw std::domain_error("requested measurement outcome has zero probability");
    }
    return {p, PureState::normalized(std::move(post))};
}

DensityMatrix partial_trace_single(const PureState &state, int keep_qubit) {
    const int n = state.num_qubits();
    check_qubit(n, keep_qubit);
    const std::size_t s = stride_of(n, keep_qubit);
    double p0 = 0.0;
    double p1 = 0.0;
    cplx c01 = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if ((i & s) != 0) {
            continue;
        }
        const cplx a0 = state[i];
        const cplx a1 = state[i | s];
        p0 += std::norm(a0);
        p1 += std::norm(a1);
        c01 += a0 * std::conj(a1);
    }
    return DensityMatrix(1, {cplx{p0, 0.0}, c01, std::conj(c01), cplx{p1, 0.0}});
}

PureState tensor(const PureState &a, const PureState &b) {
    std::vector<cplx> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return PureState::normalized(std::move(out));
}

PureState random_state(int num_qubits, std::mt19937_64 &rng) {
    if (num_qubits < 1) throw std::invalid_argument("random_state needs at least one qubit");
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<cplx> amps(std::size_t{1} << num_qubits);
    for (cplx &a : amps) {
        const double u1 = 1.0 - unit();  // (0, 1], keeps the log finite
        const double u2 = unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        a = std::polar(r, 2.0 * std::numbers::pi * u2);
    }
    return PureState::normalized(std::move(amps));
}

}  // namespace catgadget
