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


#include "catgadget/stabilizer.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace catgadget {

namespace {

constexpr cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::uint32_t span_point(const StabilizerStateForm &s, std::uint32_t y) {
    std::uint32_t x = s.offset;
    for (int j = 0; j < s.dimension(); ++j) {
        if ((y >> j) & 1U) {
            x ^= s.basis[static_cast<std::size_t>(j)];
        }
    }
    return x;
}

// Calls emit(basis) for every k-dimensional subspace of F_2^n, each given by
// its reduced echelon basis (distinct leading bits, pivots cleared elsewhere).
template <typename Emit>
void for_each_subspace(int n, int k, Emit &&emit) {
    for (std::uint32_t pivots = 0; pivots < (std::uint32_t{1} << n); ++pivots) {
        if (std::popcount(pivots) != k) {
            continue;
        }
        std::vector<int> pivot_bits;
        for (int b = n - 1; b >= 0; --b) {
            if ((pivots >> b) & 1U) {
                pivot_bits.push_back(b);
            }
        }
        // Free positions of each row: non-pivot bits below its leading bit.
        std::vector<std::vector<int>> free_bits(static_cast<std::size_t>(k));
        int total_free = 0;
        for (int r = 0; r < k; ++r) {
            for (int b = pivot_bits[static_cast<std::size_t>(r)] - 1; b >= 0; --b) {
                if (((pivots >> b) & 1U) == 0) {
                    free_bits[static_cast<std::size_t>(r)].push_back(b);
                    ++total_free;
                }
            }
        }
        std::vector<std::uint32_t> basis(static_cast<std::size_t>(k));
        for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << total_free); ++assignment) {
            int cursor = 0;
            for (int r = 0; r < k; ++r) {
                std::uint32_t v = std::uint32_t{1} << pivot_bits[static_cast<std::size_t>(r)];
                for (int b : free_bits[static_cast<std::size_t>(r)]) {
                    if ((assignment >> cursor) & 1U) {
                        v |= std::uint32_t{1} << b;
                    }
                    ++cursor;
                }
                basis[static_cast<std::size_t>(r)] = v;
            }
            emit(basis, pivots);
        }
    }
}

}  // namespace

int StabilizerStateForm::phase_exponent(std::uint32_t y) const {
    int e = std::popcount(linear & y);
    int q = 0;
    for (int i = 0; i < dimension(); ++i) {
        if ((y >> i) & 1U) {
            const std::uint32_t upper = quadratic[static_cast<std::size_t>(i)] & ~((std::uint32_t{1} << i) - 1);
            q += std::popcount(upper & y);
        }
    }
    e += 2 * (q & 1);
    return e & 3;
}

std::vector<std::pair<std::uint32_t, int>> StabilizerStateForm::phase_table() const {
    const std::uint32_t count = std::uint32_t{1} << dimension();
    std::vector<std::pair<std::uint32_t, int>> table;
    table.reserve(count);
    for (std::uint32_t y = 0; y < count; ++y) {
        table.emplace_back(span_point(*this, y), phase_exponent(y));
    }
    return table;
}

PureState StabilizerStateForm::to_statevector() const {
    const std::size_t dim = std::size_t{1} << num_qubits;
    const auto table = phase_table();
    std::uint32_t lowest = table.front().first;
    int lowest_exp = table.front().second;
    for (const auto &[x, e] : table) {
        if (x < lowest) {
            lowest = x;
            lowest_exp = e;
        }
    }
    const double a = std::pow(2.0, -0.5 * dimension());
    std::vector<cplx> amps(dim, cplx{0.0, 0.0});
    for (const auto &[x, e] : table) {
        amps[x] = a * kIPowers[(e - lowest_exp + 4) & 3];
    }
    return PureState::normalized(std::move(amps));
}

std::uint64_t stabilizer_state_count(int num_qubits) {
    std::uint64_t count = std::uint64_t{1} << num_qubits;
    for (int k = 1; k <= num_qubits; ++k) {
        count *= (std::uint64_t{1} << k) + 1;
    }
    return count;
}

std::vector<StabilizerStateForm> enumerate_stabilizer_states(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 4) {
        throw std::invalid_argument("stabilizer enumeration supports 1 <= n <= 4, got " + std::to_string(num_qubits));
    }
    const int n = num_qubits;
    std::vector<StabilizerStateForm> out;
    out.reserve(stabilizer_state_count(n));
    for (int k = 0; k <= n; ++k) {
        const int quad_bits = k * (k + 1) / 2;
        for_each_subspace(n, k, [&](const std::vector<std::uint32_t> &basis, std::uint32_t pivots) {
            for (std::uint32_t offset = 0; offset < (std::uint32_t{1} << n); ++offset) {
                if ((offset & pivots) != 0) {
                    continue;
                }
                for (std::uint32_t lin = 0; lin < (std::uint32_t{1} << k); ++lin) {
                    for (std::uint32_t qbits = 0; qbits < (std::uint32_t{1} << quad_bits); ++qbits) {
                        StabilizerStateForm s;
                        s.num_qubits = n;
                        s.basis = basis;
                        s.offset = offset;
                        s.linear = lin;
                        s.quadratic.assign(static_cast<std::size_t>(k), 0);
                        int cursor = 0;
                        for (int i = 0; i < k; ++i) {
                            for (int j = i; j < k; ++j) {
                                if ((qbits >> cursor) & 1U) {
                                    s.quadratic[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
                                }
                                ++cursor;
                            }
                        }
                        out.push_back(std::move(s));
                    }
                }
            }
        });
    }
    return out;
}

namespace {

// exponent[x] is the phase exponent of support point x, or -1 off the support.
std::vector<int> exponent_table(const StabilizerStateForm &state) {
    std::vector<int> exponent(std::size_t{1} << state.num_qubits, -1);
    for (const auto &[x, e] : state.phase_table()) {
        exponent[x] = e;
    }
    return exponent;
}

// <phi|P|phi> = 2^{-k} sum_x conj(i^{e(x^a)}) i^{a_P(x)} i^{e(x)}
int expectation_from_table(const std::vector<int> &exponent, int dimension, const PauliString &pauli) {
    int counts[4] = {0, 0, 0, 0};
    const auto dim = static_cast<std::uint32_t>(exponent.size());
    for (std::uint32_t x = 0; x < dim; ++x) {
        const int ex = exponent[x];
        const int ey = exponent[x ^ pauli.x_bits()];
        if (ex < 0 || ey < 0) {
            continue;
        }
        ++counts[(ex - ey + pauli.action_exponent(x) + 8) & 3];
    }
    const int re = counts[0] - counts[2];
    const int support = 1 << dimension;
    if (counts[1] != counts[3] || re % support != 0) {
        throw std::logic_error("pauli_expectation: non-stabilizer phase pattern");
    }
    return re / support;
}

}  // namespace

int pauli_expectation(const StabilizerStateForm &state, const PauliString &pauli) {
    if (pauli.num_qubits() != state.num_qubits) {
        throw std::invalid_argument("pauli_expectation: dimension mismatch");
    }
    if (!pauli.is_hermitian()) {
        throw std::invalid_argument("pauli_expectation: Pauli must be Hermitian");
    }
    return expectation_from_table(exponent_table(state), state.dimension(), pauli);
}

std::vector<std::int8_t> pauli_expectations(const StabilizerStateForm &state) {
    const int n = state.num_qubits;
    const std::uint32_t total = std::uint32_t{1} << (2 * n);
    const std::vector<int> exponent = exponent_table(state);
    std::vector<std::int8_t> out(total);
    for (std::uint32_t idx = 0; idx < total; ++idx) {
        out[idx] = static_cast<std::int8_t>(
            expectation_from_table(exponent, state.dimension(), PauliString::from_index(n, idx)));
    }
    return out;
}

void write_stabilizer_cache(const std::filesystem::path &file, int num_qubits,
                            const std::vector<StabilizerStateForm> &states) {
    std::ofstream out(file);
    if (!out) {
        throw std::runtime_error("cannot write stabilizer cache " + file.string());
    }
    out << "catgadget-stabilizer-cache " << kStabilizerCacheVersion << '\n';
    out << "n " << num_qubits << " count " << states.size() << '\n';
    for (const auto &s : states) {
        out << s.dimension() << ' ' << s.offset << ' ' << s.linear;
        for (auto b : s.basis) {
            out << ' ' << b;
        }
        for (auto q : s.quadratic) {
            out << ' ' << q;
        }
        out << '\n';
    }
}

std::optional<std::vector<StabilizerStateForm>> read_stabilizer_cache(const std::filesystem::path &file,
                                                                      int num_qubits) {
    std::ifstream in(file);
    if (!in) {
        return std::nullopt;
    }
    std::string magic;
    int version = 0;
    std::string n_tag;
    std::string count_tag;
    int n = 0;
    std::size_t count = 0;
    if (!(in >> magic >> version >> n_tag >> n >> count_tag >> count) || magic != "catgadget-stabilizer-cache" ||
        version != kStabilizerCacheVersion || n_tag != "n" || count_tag != "count" || n != num_qubits ||
        count != stabilizer_state_count(num_qubits)) {
        return std::nullopt;
    }
    std::vector<StabilizerStateForm> states(count);
    for (auto &s : states) {
        int k = 0;
        s.num_qubits = n;
        if (!(in >> k >> s.offset >> s.linear) || k < 0 || k > n) {
            return std::nullopt;
        }
        s.basis.resize(static_cast<std::size_t>(k));
        s.quadratic.resize(static_cast<std::size_t>(k));
        for (auto &b : s.basis) {
            in >> b;
        }
        for (auto &q : s.quadratic) {
            in >> q;
        }
        if (!in) {
            return std::nullopt;
        }
    }
    return states;
}

std::vector<StabilizerStateForm> load_or_enumerate_stabilizer_states(int num_qubits,
                                                                     std::filesystem::path cache_dir) {
    if (cache_dir.empty()) {
        if (const char *env = std::getenv("CATGADGET_CACHE_DIR"); env != nullptr && env[0] != '\0') {
            cache_dir = env;
        }
    }
    if (cache_dir.empty()) {
        return enumerate_stabilizer_states(num_qubits);
    }
    const auto file = cache_dir / ("stabilizers_n" + std::to_string(num_qubits) + ".v" +
                                   std::to_string(kStabilizerCacheVersion) + ".txt");
    if (auto cached = read_stabilizer_cache(file, num_qubits)) {
        return std::move(*cached);
    }
    auto states = enumerate_stabilizer_states(num_qubits);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    if (!ec) {
        write_stabilizer_cache(file, num_qubits, states);
    }
    return states;
}

}  // namespace catgadget
