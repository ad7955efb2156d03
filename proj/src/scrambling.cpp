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


#include "catgadget/scrambling.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "catgadget/catstates.hpp"

namespace catgadget {

std::string_view to_string(GateSet set) {
    switch (set) {
        case GateSet::NonentanglingClifford: return "nonentangling_clifford";
        case GateSet::Clifford: return "clifford";
        case GateSet::CliffordT: return "clifford_t";
    }
    return "unknown";
}

std::optional<GateSet> parse_gate_set(std::string_view name) {
    for (GateSet s : {GateSet::NonentanglingClifford, GateSet::Clifford, GateSet::CliffordT}) {
        if (name == to_string(s)) {
            return s;
        }
    }
    return std::nullopt;
}

std::vector<GateKind> gate_kinds(GateSet set) {
    switch (set) {
        case GateSet::NonentanglingClifford: return {GateKind::H, GateKind::S};
        case GateSet::Clifford: return {GateKind::H, GateKind::S, GateKind::CX};
        case GateSet::CliffordT: return {GateKind::H, GateKind::S, GateKind::CX, GateKind::T};
    }
    return {};
}

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: empty range");
    }
    // Largest multiple of bound that fits, so that the modulo is unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    while (true) {
        const std::uint64_t x = rng();
        if (x < limit) {
            return x % bound;
        }
    }
}

Circuit random_block(int n, GateSet set, int layers, std::mt19937_64 &rng) {
    const std::vector<GateKind> kinds = gate_kinds(set);
    const bool has_cx = std::find(kinds.begin(), kinds.end(), GateKind::CX) != kinds.end();
    if (n < 1 || (has_cx && n < 2)) {
        throw std::invalid_argument("random_block: too few qubits for the gate set");
    }
    if (layers < 0) {
        throw std::invalid_argument("random_block: negative layer count");
    }
    Circuit c(n);
    for (int layer = 0; layer < layers; ++layer) {
        for (int k = 0; k < n; ++k) {
            const GateKind kind = kinds[uniform_below(rng, kinds.size())];
            if (arity(kind) == 1) {
                c.append(kind, k);
            } else {
                const int control = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
                int target = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
                if (target >= control) {
                    ++target;
                }
                c.append(kind, control, target);
            }
        }
    }
    return c;
}

namespace {

void apply_forward(const Circuit &c, PureState &s) {
    for (const Gate &g : c.gates()) {
        s.apply(g);
    }
}

void apply_backward(const Circuit &c, PureState &s) {
    const auto &gates = c.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        s.apply(Gate::make(inverse_kind(it->kind), it->qubits[0], it->qubits[1]));
    }
}

}  // namespace

cplx otoc(const Circuit &prefix, const PauliString &v, const PauliString &w0) {
    const int n = prefix.num_qubits();
    if (v.num_qubits() != n || w0.num_qubits() != n) {
        throw std::invalid_argument("otoc: operator size does not match the circuit");
    }
    if (!v.commutes_with(w0)) {
        throw std::invalid_argument("otoc: V and W(0) must commute");
    }
    PureState a(n);
    v.apply_to(a);
    apply_forward(prefix, a);
    w0.apply_to(a);
    apply_backward(prefix, a);

    PureState b(n);
    apply_forward(prefix, b);
    w0.apply_to(b);
    apply_backward(prefix, b);
    v.apply_to(b);
    return inner(b, a);
}

DopeSchedule random_schedule(int n, int count, int last_block, int m_min, int m_max, std::mt19937_64 &rng) {
    if (m_min < 2 || m_max < m_min || m_max > n || last_block < 1 || count < 0) {
        throw std::invalid_argument("random_schedule: inconsistent parameters");
    }
    DopeSchedule sched;
    for (int k = 0; k < count; ++k) {
        Injection inj;
        inj.block = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(last_block)));
        const int m = m_min + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(m_max - m_min + 1)));
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            pool[static_cast<std::size_t>(q)] = q;
        }
        // Partial Fisher-Yates for an ordered sample without replacement.
        for (int j = 0; j < m; ++j) {
            const auto pick = static_cast<std::size_t>(j) + uniform_below(rng, static_cast<std::uint64_t>(n - j));
            std::swap(pool[static_cast<std::size_t>(j)], pool[pick]);
            inj.qubits.push_back(pool[static_cast<std::size_t>(j)]);
        }
        sched.injections.push_back(std::move(inj));
    }
    std::stable_sort(sched.injections.begin(), sched.injections.end(),
                     [](const Injection &l, const Injection &r) { return l.block < r.block; });
    return sched;
}

OtocSeries otoc_experiment(int n, GateSet set, int num_blocks, int layers_per_block, const DopeSchedule &schedule,
                           std::uint64_t seed, InjectionMode mode) {
    if (n < 2 || num_blocks < 0 || layers_per_block < 0) {
        throw std::invalid_argument("otoc_experiment: bad size parameters");
    }
    for (const Injection &inj : schedule.injections) {
        if (inj.block < 1 || inj.block > num_blocks) {
            throw std::invalid_argument("otoc_experiment: injection block " + std::to_string(inj.block) +
                                        " outside [1, " + std::to_string(num_blocks) + "]");
        }
        if (inj.m() < 2 || inj.m() > n) {
            throw std::invalid_argument("otoc_experiment: injection size must be in [2, n]");
        }
        std::vector<int> sorted = inj.qubits;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.front() < 0 || sorted.back() >= n || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("otoc_experiment: injection qubits must be distinct and in range");
        }
    }

    OtocSeries series;
    series.n = n;
    series.gate_set = set;
    series.seed = seed;
    series.layers_per_block = layers_per_block;
    series.mode = mode;
    series.schedule = schedule;
    series.v_op = PauliString::single(n, 'X', n - 1);
    series.w_op = PauliString::single(n, 'Z', 0);

    std::mt19937_64 rng(seed);
    Circuit prefix(n);
    auto record = [&](int tau) {
        const cplx f = otoc(prefix, series.v_op, series.w_op);
        series.points.push_back({tau, f.real(), f.imag()});
    };
    record(0);
    for (int block = 1; block <= num_blocks; ++block) {
        for (const Injection &inj : schedule.injections) {
            if (inj.block != block) {
                continue;
            }
            Circuit unit = build_Vm(inj.m());
            if (mode == InjectionMode::GadgetSampling) {
                const auto idx = static_cast<std::uint32_t>(uniform_below(rng, std::uint64_t{1} << inj.m()));
                unit = gadget_target(Outcomes::from_index(inj.m(), idx), true);
            }
            prefix.append_mapped(unit, inj.qubits);
        }
        const Circuit blk = random_block(n, set, layers_per_block, rng);
        for (const Gate &g : blk.gates()) {
            prefix.append(g);
        }
        record(block);
    }
    return series;
}

std::string to_json(const OtocSeries &series) {
    nlohmann::ordered_json j;
    j["n"] = series.n;
    j["gate_set"] = std::string(to_string(series.gate_set));
    j["seed"] = series.seed;
    j["layers_per_block"] = series.layers_per_block;
    j["injection_mode"] = series.mode == InjectionMode::Unitary ? "unitary" : "gadget_sampling";
    j["v_op"] = series.v_op.str();
    j["w_op"] = series.w_op.str();
    nlohmann::ordered_json sched = nlohmann::ordered_json::array();
    for (const Injection &inj : series.schedule.injections) {
        sched.push_back({{"block", inj.block}, {"qubits", inj.qubits}});
    }
    j["schedule"] = sched;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const OtocPoint &p : series.points) {
        pts.push_back({{"tau", p.tau}, {"re", p.re}, {"im", p.im}});
    }
    j["points"] = pts;
    return j.dump(2);
}

std::string to_csv(const OtocSeries &series) {
    std::ostringstream out;
    out << "tau,re,im\n" << std::setprecision(17);
    for (const OtocPoint &p : series.points) {
        out << p.tau << ',' << p.re << ',' << p.im << '\n';
    }
    return out.str();
}

}  // namespace catgadget
