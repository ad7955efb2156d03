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


#include "catgadget/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>

#include "catgadget/scrambling.hpp"

namespace catgadget {
namespace {

constexpr double kUnitaryTolerance = 1e-9;

// Slots for a T gate relative to the cascade CX, inner, CX.
enum class Slot { Pre, AfterFirstCx, AfterInner, Post };

Circuit base_sequence(bool t_inside) {
    Circuit c(2);
    c.append(GateKind::CX, 1, 0);
    c.append(t_inside ? GateKind::T : GateKind::TDG, 0);
    c.append(GateKind::CX, 1, 0);
    c.append(GateKind::T, 0);
    c.append(GateKind::T, 1);
    return c;
}

// `target_slot` places T on the target qubit, `control_slot` the one on the
// control-only qubit; `control_first` orders them when the slots coincide.
Circuit build_sequence(bool t_inside, Slot target_slot, Slot control_slot, bool control_first) {
    Circuit c(2);
    auto place = [&](Slot here) {
        const bool t0 = target_slot == here;
        const bool t1 = control_slot == here;
        if (t0 && t1) {
            if (control_first) {
                c.append(GateKind::T, 1);
                c.append(GateKind::T, 0);
            } else {
                c.append(GateKind::T, 0);
                c.append(GateKind::T, 1);
            }
        } else if (t0) {
            c.append(GateKind::T, 0);
        } else if (t1) {
            c.append(GateKind::T, 1);
        }
    };
    place(Slot::Pre);
    c.append(GateKind::CX, 1, 0);
    place(Slot::AfterFirstCx);
    c.append(t_inside ? GateKind::T : GateKind::TDG, 0);
    place(Slot::AfterInner);
    c.append(GateKind::CX, 1, 0);
    place(Slot::Post);
    return c;
}

Circuit swap_qubits(const Circuit &c) {
    Circuit out(2);
    const int map[2] = {1, 0};
    out.append_mapped(c, map);
    return out;
}

bool equal_up_to_phase(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    Eigen::Index r = 0, col = 0;
    b.cwiseAbs().maxCoeff(&r, &col);
    if (std::abs(b(r, col)) < 1e-12) return a.norm() < kUnitaryTolerance;
    const std::complex<double> phase = a(r, col) / b(r, col);
    if (std::abs(std::abs(phase) - 1.0) > kUnitaryTolerance) return false;
    return (a - phase * b).cwiseAbs().maxCoeff() < kUnitaryTolerance;
}

Gate remap(const Gate &g, const std::array<int, 2> &map) {
    return g.arity() == 2 ? Gate::make(g.kind, map[g.qubits[0]], map[g.qubits[1]])
                          : Gate::make(g.kind, map[g.qubits[0]]);
}

// Pattern qubit of host qubit q under `map`, or -1.
int pattern_qubit(int q, const std::array<int, 2> &map) {
    return q == map[0] ? 0 : (q == map[1] ? 1 : -1);
}

}  // namespace

std::vector<Variant> enumerate_v2_variants() {
    const Eigen::MatrixXcd targets[2] = {circuit_unitary(base_sequence(false)),
                                         circuit_unitary(base_sequence(true))};
    constexpr Slot target_slots[] = {Slot::Post, Slot::Pre};
    constexpr Slot control_slots[] = {Slot::Post, Slot::Pre, Slot::AfterFirstCx, Slot::AfterInner};

    std::vector<Variant> out;
    std::set<std::string> seen;
    auto add = [&](Circuit c, bool t_inside) {
        if (!equal_up_to_phase(circuit_unitary(c), targets[t_inside ? 1 : 0]))
            throw std::logic_error("V_2 variant does not reproduce its target unitary");
        if (!seen.insert(serialize_circuit(c)).second) return;
        Variant v;
        v.id = static_cast<int>(out.size());
        v.gates = std::move(c);
        v.t_inside = t_inside;
        out.push_back(std::move(v));
    };

    for (bool swapped : {false, true}) {
        for (bool t_inside : {false, true}) {
            for (Slot ts : target_slots) {
                for (Slot cs : control_slots) {
                    for (bool control_first : {false, true}) {
                        if (control_first && ts != cs) continue;
                        Circuit c = build_sequence(t_inside, ts, cs, control_first);
                        add(swapped ? swap_qubits(c) : std::move(c), t_inside);
                    }
                }
            }
        }
    }
    return out;
}

std::vector<Match> match_patterns(const Circuit &host, const std::vector<Variant> &variants) {
    const auto &gates = host.gates();
    const int n = host.num_qubits();

    // Candidates keyed by their gate positions; the smallest variant id wins
    // when two variants describe the same gates (e.g. a relabelled pair).
    std::map<std::vector<std::size_t>, Match> candidates;

    std::vector<std::size_t> projection;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const std::array<int, 2> map = {a, b};
            projection.clear();
            for (std::size_t i = 0; i < gates.size(); ++i)
                if (gates[i].acts_on(a) || gates[i].acts_on(b)) projection.push_back(i);

            for (std::size_t start = 0; start < projection.size(); ++start) {
                for (const Variant &v : variants) {
                    const auto &pg = v.gates.gates();
                    if (start + pg.size() > projection.size()) continue;
                    bool ok = true;
                    for (std::size_t k = 0; k < pg.size() && ok; ++k)
                        ok = gates[projection[start + k]] == remap(pg[k], map);
                    if (!ok) continue;
                    std::vector<std::size_t> pos(projection.begin() + start,
                                                 projection.begin() + start + pg.size());
                    auto it = candidates.find(pos);
                    if (it == candidates.end() || it->second.variant_id > v.id)
                        candidates[pos] = Match{v.id, pos, map};
                }
            }
        }
    }

    std::vector<Match> ordered;
    ordered.reserve(candidates.size());
    for (auto &[pos, m] : candidates) ordered.push_back(std::move(m));
    std::stable_sort(ordered.begin(), ordered.end(), [](const Match &x, const Match &y) {
        if (x.positions.front() != y.positions.front())
            return x.positions.front() < y.positions.front();
        return x.variant_id < y.variant_id;
    });

    std::vector<Match> accepted;
    std::vector<char> used(gates.size(), 0);
    for (Match &m : ordered) {
        if (std::any_of(m.positions.begin(), m.positions.end(),
                        [&](std::size_t p) { return used[p] != 0; }))
            continue;

        // Soundness check on the extracted 2-qubit subsequence.
        Circuit extracted(2);
        for (std::size_t p : m.positions) {
            const Gate &g = gates[p];
            extracted.append(g.arity() == 2
                                 ? Gate::make(g.kind, pattern_qubit(g.qubits[0], m.qubit_map),
                                              pattern_qubit(g.qubits[1], m.qubit_map))
                                 : Gate::make(g.kind, pattern_qubit(g.qubits[0], m.qubit_map)));
        }
        const Variant &v = variants.at(static_cast<std::size_t>(m.variant_id));
        if (!equal_up_to_phase(circuit_unitary(extracted), circuit_unitary(v.gates))) continue;

        for (std::size_t p : m.positions) used[p] = 1;
        accepted.push_back(std::move(m));
    }
    return accepted;
}

PlantedHost plant_variants(int n, int host_gates, int count, const std::vector<Variant> &variants,
                           std::mt19937_64 &rng) {
    if (n < 2) throw std::invalid_argument("plant_variants needs at least two qubits");
    if (host_gates < 0 || count < 0) throw std::invalid_argument("negative gate or variant count");
    if (count > 0 && variants.empty()) throw std::invalid_argument("no variants to plant");
    if (count > host_gates + 1)
        throw std::invalid_argument("not enough host gates to separate the planted variants");

    static constexpr GateKind kHostKinds[] = {GateKind::H, GateKind::S,  GateKind::SDG, GateKind::X,
                                              GateKind::Z, GateKind::CX, GateKind::CZ};
    const auto un = static_cast<std::uint64_t>(n);

    auto random_pair = [&]() {
        const int a = static_cast<int>(uniform_below(rng, un));
        int b = static_cast<int>(uniform_below(rng, un - 1));
        if (b >= a) ++b;
        return std::array<int, 2>{a, b};
    };

    std::vector<Gate> filler;
    filler.reserve(static_cast<std::size_t>(host_gates));
    for (int i = 0; i < host_gates; ++i) {
        const GateKind kind = kHostKinds[uniform_below(rng, std::size(kHostKinds))];
        if (arity(kind) == 2) {
            const auto p = random_pair();
            filler.push_back(Gate::make(kind, p[0], p[1]));
        } else {
            filler.push_back(Gate::make(kind, static_cast<int>(uniform_below(rng, un))));
        }
    }

    // Distinct insertion slots in [0, host_gates]; slot s sits before filler gate s.
    std::vector<int> slots(static_cast<std::size_t>(host_gates) + 1);
    for (int s = 0; s <= host_gates; ++s) slots[static_cast<std::size_t>(s)] = s;
    for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
        const auto j = i + uniform_below(rng, slots.size() - i);
        std::swap(slots[i], slots[j]);
    }
    std::vector<int> chosen(slots.begin(), slots.begin() + count);
    std::sort(chosen.begin(), chosen.end());

    PlantedHost out;
    out.host = Circuit(n);
    std::size_t next = 0;
    for (int s = 0; s <= host_gates; ++s) {
        if (next < chosen.size() && chosen[next] == s) {
            const Variant &v = variants[uniform_below(rng, variants.size())];
            Match truth;
            truth.variant_id = v.id;
            truth.qubit_map = random_pair();
            for (int q : truth.qubit_map) out.host.append(GateKind::H, q);
            for (const Gate &g : v.gates.gates()) {
                truth.positions.push_back(out.host.size());
                out.host.append(remap(g, truth.qubit_map));
            }
            for (int q : truth.qubit_map) out.host.append(GateKind::H, q);
            out.planted.push_back(std::move(truth));
            ++next;
        }
        if (s < host_gates) out.host.append(filler[static_cast<std::size_t>(s)]);
    }
    return out;
}

MatchCostEstimate estimate_match_cost(const Circuit &host, const Circuit &pattern) {
    MatchCostEstimate e;
    e.g_c = host.size();
    e.g_p = pattern.size();
    e.n_c = static_cast<std::uint64_t>(host.num_qubits());
    e.n_p = static_cast<std::uint64_t>(pattern.num_qubits());
    const auto gc = static_cast<double>(e.g_c);
    const auto gp = static_cast<double>(e.g_p);
    e.pattern_factor = std::pow(gp, gp + 4.0);
    e.value = std::pow(gc, gp + 3.0) * e.pattern_factor *
              std::pow(static_cast<double>(e.n_c), static_cast<double>(e.n_p) - 1.0);
    return e;
}

}  // namespace catgadget
