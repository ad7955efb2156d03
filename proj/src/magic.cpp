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


#include "catgadget/magic.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "catgadget/pauli.hpp"

namespace catgadget {

const StabilizerBasis &shared_stabilizer_basis(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 4) {
        throw std::invalid_argument("stabilizer basis supports 1 to 4 qubits");
    }
    static std::mutex mutex;
    static std::array<std::unique_ptr<StabilizerBasis>, 5> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = cache[static_cast<std::size_t>(num_qubits)];
    if (!slot) {
        auto basis = std::make_unique<StabilizerBasis>();
        basis->num_qubits = num_qubits;
        basis->states = load_or_enumerate_stabilizer_states(num_qubits);
        basis->expectations.reserve(basis->states.size());
        for (const auto &s : basis->states) {
            basis->expectations.push_back(pauli_expectations(s));
        }
        slot = std::move(basis);
    }
    return *slot;
}

std::vector<double> pauli_vector(const DensityMatrix &rho) {
    const int n = rho.num_qubits();
    const std::uint32_t dim = static_cast<std::uint32_t>(rho.dim());
    const std::size_t count = std::size_t{1} << (2 * n);
    static constexpr std::array<cplx, 4> kIPow = {cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}};
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        const PauliString p = PauliString::from_index(n, static_cast<std::uint32_t>(k));
        // Tr(P rho) = sum_y <y ^ x| P |y> rho[y][y ^ x]
        cplx acc = 0.0;
        for (std::uint32_t y = 0; y < dim; ++y) {
            acc += kIPow[static_cast<std::size_t>(p.action_exponent(y))] * rho.at(y, y ^ p.x_bits());
        }
        out[k] = acc.real();
    }
    return out;
}

namespace {

// Cost of the per-row slack columns that keep every restricted master
// feasible. It only has to exceed the largest dual price of the full problem.
constexpr double kElasticCost = 1e3;

double expectation_dot(std::span<const double> y, const std::vector<std::int8_t> &e) {
    double acc = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) {
        acc += y[k] * e[k];
    }
    return acc;
}

}  // namespace

RomResult rom(const DensityMatrix &rho, const lp::Options &options) {
    const int n = rho.num_qubits();
    if (n < 1 || n > 4) {
        throw std::invalid_argument("rom supports 1 to 4 qubits, got " + std::to_string(n));
    }
    if (!rho.is_valid(1e-8)) {
        throw std::invalid_argument("rom: input is not a valid density matrix");
    }
    const StabilizerBasis &basis = shared_stabilizer_basis(n);
    const std::vector<double> b = pauli_vector(rho);
    const std::size_t rows = b.size();
    const std::size_t count = basis.states.size();

    // Column generation. The restricted master starts from the states with
    // the largest and smallest overlap with rho; each round adds the states
    // whose +/- columns price out negatively against the master's duals.
    std::vector<std::size_t> active;
    std::vector<char> in_active(count, 0);
    {
        std::vector<double> overlap(count);
        for (std::size_t i = 0; i < count; ++i) {
            overlap[i] = expectation_dot(b, basis.expectations[i]);
        }
        std::vector<std::size_t> order(count);
        for (std::size_t i = 0; i < count; ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return overlap[l] > overlap[r]; });
        const std::size_t half = std::min(count, 16 * rows) / 2;
        for (std::size_t k = 0; k < half; ++k) {
            for (std::size_t idx : {order[k], order[count - 1 - k]}) {
                if (!in_active[idx]) {
                    in_active[idx] = 1;
                    active.push_back(idx);
                }
            }
        }
    }

    const std::size_t batch = std::max<std::size_t>(32, 2 * rows);
    std::vector<int> col_rows;
    std::vector<double> plus;
    std::vector<double> minus;
    lp::Solution sol;
    long iterations = 0;
    // Column layout: 2 elastic columns per row, then a +/- pair per active
    // state. Appending states keeps earlier indices valid for warm starts.
    const std::size_t first_state_column = 2 * rows;
    while (true) {
        lp::LinearProgram problem(b);
        for (std::size_t r = 0; r < rows; ++r) {
            const int row = static_cast<int>(r);
            const double one = 1.0;
            const double neg = -1.0;
            problem.add_column(kElasticCost, std::span<const int>(&row, 1), std::span<const double>(&one, 1));
            problem.add_column(kElasticCost, std::span<const int>(&row, 1), std::span<const double>(&neg, 1));
        }
        for (std::size_t idx : active) {
            const auto &e = basis.expectations[idx];
            col_rows.clear();
            plus.clear();
            minus.clear();
            for (std::size_t r = 0; r < e.size(); ++r) {
                if (e[r] != 0) {
                    col_rows.push_back(static_cast<int>(r));
                    plus.push_back(e[r]);
                    minus.push_back(-e[r]);
                }
            }
            problem.add_column(1.0, col_rows, plus);
            problem.add_column(1.0, col_rows, minus);
        }

        sol = lp::solve(problem, options, sol.basis);
        iterations += sol.iterations;
        if (sol.status != lp::Status::Optimal) {
            throw std::runtime_error("rom: LP ended with status " + std::string(lp::to_string(sol.status)));
        }

        std::vector<std::pair<double, std::size_t>> violated;
        for (std::size_t i = 0; i < count; ++i) {
            if (in_active[i]) {
                continue;
            }
            const double excess = std::abs(expectation_dot(sol.duals, basis.expectations[i])) - 1.0;
            if (excess > options.optimality_tol) {
                violated.emplace_back(excess, i);
            }
        }
        if (violated.empty()) {
            break;
        }
        const std::size_t take = std::min(batch, violated.size());
        std::partial_sort(violated.begin(), violated.begin() + static_cast<std::ptrdiff_t>(take), violated.end(),
                          [](const auto &l, const auto &r) { return l.first > r.first; });
        for (std::size_t k = 0; k < take; ++k) {
            in_active[violated[k].second] = 1;
            active.push_back(violated[k].second);
        }
    }

    for (std::size_t j = 0; j < first_state_column; ++j) {
        if (sol.x[j] > 1e-9) {
            throw std::runtime_error("rom: no stabilizer mixture reproduces rho");
        }
    }

    RomResult result;
    result.basis_n = n;
    result.iterations = iterations;
    for (std::size_t k = 0; k < active.size(); ++k) {
        const double x = sol.x[first_state_column + 2 * k] - sol.x[first_state_column + 2 * k + 1];
        if (std::abs(x) > 1e-12) {
            result.coefficients.emplace(active[k], x);
            result.value += std::abs(x);
        }
    }

    const std::size_t dim = rho.dim();
    Eigen::MatrixXcd recon = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &[idx, x] : result.coefficients) {
        const PureState phi = basis.states[idx].to_statevector();
        Eigen::Map<const Eigen::VectorXcd> v(phi.amplitudes().data(), static_cast<Eigen::Index>(dim));
        recon += x * (v * v.adjoint());
    }
    double err = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            err = std::max(err, std::abs(recon(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) - rho.at(r, c)));
        }
    }
    if (err > kRomReconstructionTolerance) {
        throw std::runtime_error("rom: optimal mixture misses rho by " + std::to_string(err));
    }
    return result;
}

RomResult rom(const PureState &state, const lp::Options &options) {
    return rom(DensityMatrix::from_pure(state), options);
}

RankResult brute_rank(const PureState &state, int r_max) {
    const int n = state.num_qubits();
    if (n < 1 || n > 2) {
        throw std::invalid_argument("brute_rank supports 1 or 2 qubits");
    }
    if (r_max < 1 || r_max > 4) {
        throw std::invalid_argument("brute_rank: r_max must be in [1, 4]");
    }
    const StabilizerBasis &basis = shared_stabilizer_basis(n);
    const auto dim = static_cast<Eigen::Index>(state.dim());
    const auto count = static_cast<int>(basis.states.size());

    Eigen::MatrixXcd columns(dim, count);
    for (int i = 0; i < count; ++i) {
        const PureState phi = basis.states[static_cast<std::size_t>(i)].to_statevector();
        for (Eigen::Index k = 0; k < dim; ++k) {
            columns(k, i) = phi[static_cast<std::size_t>(k)];
        }
    }
    Eigen::VectorXcd target(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        target(k) = state[static_cast<std::size_t>(k)];
    }

    RankResult result;
    for (int r = 1; r <= r_max; ++r) {
        if (r > count) {
            break;
        }
        std::vector<int> pick(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) {
            pick[static_cast<std::size_t>(i)] = i;
        }
        Eigen::MatrixXcd a(dim, r);
        while (true) {
            for (int i = 0; i < r; ++i) {
                a.col(i) = columns.col(pick[static_cast<std::size_t>(i)]);
            }
            const Eigen::VectorXcd c = a.colPivHouseholderQr().solve(target);
            if ((a * c - target).norm() < kRankResidualTolerance) {
                result.rank = r;
                result.found = true;
                for (int i = 0; i < r; ++i) {
                    result.decomposition.emplace_back(c(i), static_cast<std::size_t>(pick[static_cast<std::size_t>(i)]));
                }
                return result;
            }
            // Next r-subset in lexicographic order.
            int pos = r - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == count - r + pos) {
                --pos;
            }
            if (pos < 0) {
                break;
            }
            ++pick[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < r; ++i) {
                pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
            }
        }
    }
    return result;
}

}  // namespace catgadget
