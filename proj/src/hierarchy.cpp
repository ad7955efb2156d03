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


#include <bit>
#include <cmath>
#include <stdexcept>

#include "catgadget/stabilizer.hpp"

namespace catgadget {

namespace {

int checked_qubits(const Eigen::MatrixXcd &u) {
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("matrix is not square");
    }
    const auto dim = static_cast<std::size_t>(u.rows());
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("matrix dimension is not a power of two >= 2");
    }
    return std::countr_zero(dim);
}

}  // namespace

std::optional<PauliString> is_pauli(const Eigen::MatrixXcd &u, double tol) {
    const int n = checked_qubits(u);
    const Eigen::Index dim = u.rows();
    Eigen::Index a = -1;
    for (Eigen::Index r = 0; r < dim; ++r) {
        if (std::abs(u(r, 0)) > 0.5) {
            a = r;
            break;
        }
    }
    if (a < 0) {
        return std::nullopt;
    }
    std::uint32_t z = 0;
    for (int q = 0; q < n; ++q) {
        const auto b = static_cast<Eigen::Index>(std::size_t{1} << (n - 1 - q));
        const cplx ratio = u(a ^ b, b) / u(a, 0);
        if (std::abs(ratio + 1.0) < 0.5) {
            z |= static_cast<std::uint32_t>(b);
        }
    }
    const PauliString bare(n, static_cast<std::uint32_t>(a), z, 0);
    static const cplx powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx scale = u(a, 0) / powers[bare.action_exponent(0)];
    int phase = -1;
    for (int k = 0; k < 4; ++k) {
        if (std::abs(scale - powers[k]) <= tol) {
            phase = k;
        }
    }
    if (phase < 0) {
        return std::nullopt;
    }
    PauliString candidate(n, static_cast<std::uint32_t>(a), z, phase);
    if ((u - candidate.matrix()).cwiseAbs().maxCoeff() > tol) {
        return std::nullopt;
    }
    return candidate;
}

bool hierarchy_level_at_most(const Eigen::MatrixXcd &u, int k, double tol) {
    const int n = checked_qubits(u);
    if (n > 6) {
        throw std::invalid_argument("hierarchy test supports at most 6 qubits");
    }
    if (k < 1 || k > 3) {
        throw std::invalid_argument("hierarchy level must be in [1, 3]");
    }
    if (k == 1) {
        return is_pauli(u, tol).has_value();
    }
    const Eigen::MatrixXcd u_dag = u.adjoint();
    for (int q = 0; q < n; ++q) {
        for (char letter : {'X', 'Z'}) {
            const Eigen::MatrixXcd conjugated = u * PauliString::single(n, letter, q).matrix() * u_dag;
            if (!hierarchy_level_at_most(conjugated, k - 1, tol)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace catgadget
