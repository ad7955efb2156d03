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
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "catgadget/gate.hpp"
#include "catgadget/kernels.hpp"

namespace catgadget {

using cplx = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kFidelityTolerance = 1e-10;

/// Dense pure state of n qubits. Qubit 0 is the most significant bit of the
/// amplitude index, so |q0 q1 ... q_{n-1}> sits at index sum_q bit_q << (n-1-q).
class PureState {
public:
    /// |0...0> on `num_qubits` qubits.
    explicit PureState(int num_qubits);

    /// Throws std::invalid_argument unless the length is a power of two >= 2
    /// and the norm is within kNormTolerance of 1.
    static PureState from_amplitudes(std::vector<cplx> amplitudes);

    /// Like from_amplitudes but rescales to unit norm first; rejects the zero vector.
    static PureState normalized(std::vector<cplx> amplitudes);

    static PureState basis(int num_qubits, std::size_t index);

    /// |+>^n
    static PureState plus(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;

    /// In-place gate application. Throws std::out_of_range for bad indices.
    void apply(const Gate &gate);

    /// In-place arbitrary single-qubit unitary.
    void apply_matrix(int qubit, const kernels::Mat2 &u);

private:
    PureState(int num_qubits, std::vector<cplx> amps) : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    std::span<cplx> mutable_amps() { return amps_; }

    int num_qubits_;
    std::vector<cplx> amps_;
};

/// Row-major 2^n x 2^n density matrix.
class DensityMatrix {
public:
    DensityMatrix(int num_qubits, std::vector<cplx> entries);

    static DensityMatrix from_pure(const PureState &state);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return std::size_t{1} << num_qubits_; }
    cplx at(std::size_t row, std::size_t col) const { return entries_[row * dim() + col]; }
    std::span<const cplx> entries() const { return entries_; }

    cplx trace() const;
    double purity() const;

    /// Hermitian within tol, unit trace within tol, no eigenvalue below -tol.
    bool is_valid(double tol = kNormTolerance) const;

private:
    int num_qubits_;
    std::vector<cplx> entries_;
};

enum class PauliBasis { X, Y, Z };

struct MeasureResult {
    double probability;
    PureState post_state;
};

/// Returns U|psi>. Norm is preserved to rounding.
PureState apply_gate(PureState state, const Gate &gate);

/// <a|b>; throws std::invalid_argument on dimension mismatch.
cplx inner(const PureState &a, const PureState &b);

/// |<a|b>|, i.e. state equality modulo global phase when it is 1.
double fidelity_up_to_phase(const PureState &a, const PureState &b);

/// Projects `qubit` onto the `outcome` (+1 or -1) eigenvector of the chosen
/// Pauli, renormalizes, and removes the qubit from the register. The Y
/// eigenvectors are |+-i> = (|0> +- i|1>)/sqrt(2). Throws std::domain_error
/// when the outcome probability is below 1e-12, std::out_of_range for a bad
/// qubit, and std::invalid_argument when the register has one qubit only.
MeasureResult measure_qubit(const PureState &state, int qubit, PauliBasis basis, int outcome);

/// Probability of `outcome` without building the post-measurement state.
double outcome_probability(const PureState &state, int qubit, PauliBasis basis, int outcome);

/// Reduced 2x2 state of `keep_qubit`.
DensityMatrix partial_trace_single(const PureState &state, int keep_qubit);

/// |a> (x) |b>, with a's qubits first.
PureState tensor(const PureState &a, const PureState &b);

/// Haar-random pure state: independent complex Gaussian amplitudes, normalised.
/// The Gaussians come from Box-Muller on raw 53-bit draws, so a seed gives
/// the same state on every platform.
PureState random_state(int num_qubits, std::mt19937_64 &rng);

/// Single-qubit matrix for a one-qubit gate kind.
kernels::Mat2 gate_matrix(GateKind kind);

}  // namespace catgadget
