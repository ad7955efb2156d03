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


// Acceptance checks. Prints one line per criterion:
//   criterion N: PASS|FAIL (seconds) detail
// Exit status is 0 when every criterion passes, except those listed with
// --expect-fail, which must fail. An expected failure that passes is an error.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "catgadget/catstates.hpp"
#include "catgadget/circuit.hpp"
#include "catgadget/entanglement.hpp"
#include "catgadget/magic.hpp"
#include "catgadget/matcher.hpp"
#include "catgadget/named_states.hpp"
#include "catgadget/scrambling.hpp"
#include "catgadget/stabilizer.hpp"

namespace {

using namespace catgadget;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1 ----------------------------------------------------------------------

void criterion_rom_table(Outcome &out, bool slow) {
    struct Row {
        const char *name;
        PureState state;
        double expect;
        double tol;
    };
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Row> rows = {
        {"T", t_state(1), std::sqrt(2.0), 1e-4},
        {"T2", t_state(2), 1.7476, 1e-3},
        {"CS", cs_state(), 2.2, 1e-4},
        {"STARCAT2", star_cat(2), 2.2, 1e-4},
        {"CAT3", cat_state(3), 2.2, 1e-4},
        {"T3", t_state(3), 2.2190, 1e-3},
        {"STARCAT3", star_cat(3), 2.55556, 1e-4},
        {"CCZ", ccz_state(), 2.555, 1e-3},
        {"HOGGAR", hoggar_state(), 3.8, 1e-4},
    };
    for (const Row &r : rows) {
        const double v = rom(r.state).value;
        out.detail << ' ' << r.name << '=' << v;
        out.check(std::abs(v - r.expect) <= r.tol, r.name);
    }
    const double small_secs = seconds_since(t0);
    out.detail << " (n<=3 in " << small_secs << " s)";
    out.check(small_secs < 60.0, "n<=3 runtime under 60 s");

    std::vector<Row> big = {
        {"CAT4", cat_state(4), 2.55556, 1e-4},
        {"T4", t_state(4), 2.8627, 1e-3},
    };
    if (slow) big.push_back({"STARCAT4", star_cat(4), 3.65625, 1e-4});
    for (const Row &r : big) {
        const double v = rom(r.state).value;
        out.detail << ' ' << r.name << '=' << v;
        out.check(std::abs(v - r.expect) <= r.tol, r.name);
    }
    if (!slow) out.detail << " STARCAT4 skipped (pass --slow)";
}

// 2 ----------------------------------------------------------------------

void criterion_meyer_wallach(Outcome &out) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_star = 0.0, worst_cat = 0.0;
    for (int m = 2; m <= 10; ++m) {
        const MwReport s = meyer_wallach(star_cat(m));
        worst_star = std::max(worst_star, std::abs(s.value - 0.5));
        for (double p : s.purities) worst_star = std::max(worst_star, std::abs(p - 0.75));
        worst_cat = std::max(worst_cat, std::abs(meyer_wallach(cat_state(m)).value - 1.0));
    }
    const double secs = seconds_since(t0);
    out.detail << " max|E(cat*)-0.5|,|purity-0.75| = " << worst_star << ", max|E(cat)-1| = " << worst_cat;
    out.check(worst_star <= 1e-10, "cat* entanglement and purities");
    out.check(worst_cat <= 1e-10, "cat entanglement");
    out.check(secs < 5.0, "runtime under 5 s");
}

// 3 ----------------------------------------------------------------------

void criterion_gadget(Outcome &out) {
    const auto t0 = std::chrono::steady_clock::now();
    const Convention conv = default_convention();
    double worst = 1.0;
    long runs = 0;
    for (int m = 2; m <= 6; ++m) {
        std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(m));
        std::vector<PureState> data;
        for (int i = 0; i < 20; ++i) data.push_back(random_state(m, rng));
        for (std::uint32_t idx = 0; idx < (1U << m); ++idx) {
            const Outcomes o = Outcomes::from_index(m, idx);
            for (bool skip : {false, true}) {
                const Circuit target = gadget_target(o, skip);
                for (const PureState &in : data) {
                    const double f = fidelity_up_to_phase(run_gadget(in, o, conv, skip), simulate(target, in));
                    worst = std::min(worst, f);
                    ++runs;
                }
            }
        }
    }
    const double secs = seconds_since(t0);
    out.detail << " convention=" << to_string(conv) << " runs=" << runs << " min fidelity=" << worst;
    out.check(worst >= 1.0 - 1e-9, "fidelity >= 1 - 1e-9");
    out.check(secs < 30.0, "runtime under 30 s");
}

// 4 ----------------------------------------------------------------------

void criterion_generation(Outcome &out) {
    double worst = 1.0;
    for (int m = 2; m <= 8; ++m)
        worst = std::min(worst, fidelity_up_to_phase(simulate(build_Vm(m), PureState::plus(m)), star_cat(m)));
    const PureState v2 = simulate(build_Vm(2), PureState::plus(2));
    const std::complex<double> expect[] = {0.5, 0.5, 0.5, {0.0, 0.5}};
    double dev = 0.0;
    for (std::size_t i = 0; i < 4; ++i) dev = std::max(dev, std::abs(v2[i] - expect[i]));
    out.detail << " min fidelity=" << worst << " max|V2|++>-(1,1,1,i)/2|=" << dev;
    out.check(worst >= 1.0 - 1e-10, "V_m|+>^m equals |cat*_m>");
    out.check(dev <= 1e-10, "V_2|++> componentwise");
}

// 5 ----------------------------------------------------------------------

void criterion_counts(Outcome &out) {
    for (int m = 2; m <= 8; ++m) {
        const GadgetStats s = gadget_stats(m);
        const std::string tag = "m=" + std::to_string(m);
        out.check(s.t_count == m + 1, tag + " T-count");
        out.check(s.direct_cnot == 2 * (m - 1), tag + " CNOT count");
        out.check(s.gadget_cnot == m, tag + " gadget CNOT count");
        out.check(s.mean_correction_cz == Rational::make(m * (m - 1), 4), tag + " mean correction CZ");
        out.detail << ' ' << tag << ":T=" << s.t_count << ",CX=" << s.direct_cnot << ",gCX=" << s.gadget_cnot
                   << ",CZ=" << s.mean_correction_cz.str();
    }
}

// 6 ----------------------------------------------------------------------

void criterion_hierarchy(Outcome &out) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int m = 2; m <= 5; ++m) {
        const Eigen::MatrixXcd u = circuit_unitary(build_Vm(m));
        const bool l3 = hierarchy_level_at_most(u, 3);
        const bool l2 = hierarchy_level_at_most(u, 2);
        out.detail << " m=" << m << ":L3=" << l3 << ",L2=" << l2;
        out.check(l3 && !l2, "level of V_" + std::to_string(m));
    }
    const double secs = seconds_since(t0);
    out.check(secs < 20.0, "runtime under 20 s");
}

// 7 ----------------------------------------------------------------------

template <typename F>
auto map_seeds(int count, F fn) {
    std::vector<std::future<decltype(fn(std::uint64_t{1}))>> jobs;
    for (int s = 1; s <= count; ++s) jobs.push_back(std::async(std::launch::async, fn, static_cast<std::uint64_t>(s)));
    std::vector<decltype(fn(std::uint64_t{1}))> results;
    for (auto &j : jobs) results.push_back(j.get());
    return results;
}

void criterion_otoc(Outcome &out) {
    const auto t0 = std::chrono::steady_clock::now();
    constexpr int kN = 10, kBlocks = 100, kLayers = 10, kSeeds = 10;

    // (a) non-entangling Clifford: F identically 1.
    double dev_a = 0.0;
    for (const auto &s : map_seeds(kSeeds, [](std::uint64_t seed) {
             return otoc_experiment(kN, GateSet::NonentanglingClifford, kBlocks, kLayers, {}, seed);
         }))
        for (const auto &p : s.points) dev_a = std::max(dev_a, std::abs(std::complex<double>(p.re - 1.0, p.im)));
    out.detail << " (a) max|F-1|=" << dev_a;
    out.check(dev_a <= 1e-10, "(a)");

    // (b) Clifford: Im F identically 0.
    double dev_b = 0.0;
    for (const auto &s : map_seeds(kSeeds, [](std::uint64_t seed) {
             return otoc_experiment(kN, GateSet::Clifford, kBlocks, kLayers, {}, seed);
         }))
        for (const auto &p : s.points) dev_b = std::max(dev_b, std::abs(p.im));
    out.detail << " (b) max|Im F|=" << dev_b;
    out.check(dev_b <= 1e-10, "(b)");

    // (c) Clifford+T: final |Re F| < 0.1 for at least 8 of 10 seeds.
    int ok_c = 0;
    for (const auto &s : map_seeds(kSeeds, [](std::uint64_t seed) {
             return otoc_experiment(kN, GateSet::CliffordT, kBlocks, kLayers, {}, seed);
         }))
        ok_c += std::abs(s.points.back().re) < 0.1 ? 1 : 0;
    out.detail << " (c) " << ok_c << "/10";
    out.check(ok_c >= 8, "(c)");

    // (d) 36 injections of V_m (m in [2, 10]) into {H, S} blocks.
    int ok_d = 0;
    for (const auto &s : map_seeds(kSeeds, [](std::uint64_t seed) {
             std::mt19937_64 rng(seed ^ 0xabcdefULL);
             const DopeSchedule sched = random_schedule(kN, 36, 90, 2, kN, rng);
             return otoc_experiment(kN, GateSet::NonentanglingClifford, kBlocks, kLayers, sched, seed);
         }))
        ok_d += std::abs(s.points.back().re) < 0.1 ? 1 : 0;
    out.detail << " (d) " << ok_d << "/10";
    out.check(ok_d >= 8, "(d)");

    // (e) 16 injections; |F| after the last one should be constant.
    struct Spread {
        double lo, hi;
        std::size_t distinct;
    };
    double worst_spread = 0.0;
    std::size_t worst_distinct = 0;
    for (const auto &sp : map_seeds(kSeeds, [](std::uint64_t seed) {
             std::mt19937_64 rng(seed ^ 0x1234ULL);
             const DopeSchedule sched = random_schedule(kN, 16, 40, 2, kN, rng);
             const int last = sched.injections.back().block;
             const auto s = otoc_experiment(kN, GateSet::NonentanglingClifford, kBlocks, kLayers, sched, seed);
             Spread r{1e300, -1.0, 0};
             std::vector<std::complex<double>> seen;
             for (const auto &p : s.points) {
                 if (p.tau < last) continue;
                 const std::complex<double> f(p.re, p.im);
                 r.lo = std::min(r.lo, std::abs(f));
                 r.hi = std::max(r.hi, std::abs(f));
                 if (std::none_of(seen.begin(), seen.end(), [&](auto v) { return std::abs(v - f) < 1e-9; }))
                     seen.push_back(f);
             }
             r.distinct = seen.size();
             return r;
         })) {
        worst_spread = std::max(worst_spread, sp.hi - sp.lo);
        worst_distinct = std::max(worst_distinct, sp.distinct);
    }
    out.detail << " (e) max post-injection |F| spread=" << worst_spread << " max distinct F=" << worst_distinct;
    out.check(worst_spread <= 1e-9, "(e) |F| constant after the last injection");

    const double secs = seconds_since(t0);
    out.detail << " total " << secs << " s";
    out.check(secs < 180.0, "runtime under 3 min");
}

// 8 ----------------------------------------------------------------------

void criterion_measured_families(Outcome &out) {
    for (int m = 2; m <= 3; ++m) {
        const double z = rom(measured_family(m + 1, FamilyBasis::Z)).value;
        const double star = rom(star_cat(m)).value;
        const double x = rom(measured_family(m, FamilyBasis::X)).value;
        const double tm = rom(t_state(m)).value;
        const double tm1 = rom(t_state(m + 1)).value;
        out.detail << " m=" << m << ": zmeas(m+1)=" << z << " cat*=" << star << " xmeas(m)=" << x
                   << " T^m=" << tm << " T^(m+1)=" << tm1;
        out.check(std::abs(z - star) <= 1e-4, "zmeas equals cat* at m=" + std::to_string(m));
        out.check(std::abs(x - star) <= 1e-4, "xmeas equals cat* at m=" + std::to_string(m));
        out.check(tm < star && star < tm1, "strict ordering at m=" + std::to_string(m));
    }
}

// 9 ----------------------------------------------------------------------

void criterion_matcher(Outcome &out) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto variants = enumerate_v2_variants();
    int recalled = 0, planted = 0, false_pos = 0, unsound = 0;
    auto local_circuit = [](const Circuit &host, const Match &m) {
        Circuit c(2);
        for (auto p : m.positions) {
            const Gate &g = host.gates()[p];
            auto q = [&](int x) { return x == m.qubit_map[0] ? 0 : 1; };
            c.append(g.arity() == 2 ? Gate::make(g.kind, q(g.qubits[0]), q(g.qubits[1])) : Gate::make(g.kind, q(g.qubits[0])));
        }
        return c;
    };
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 2 + static_cast<int>(seed % 9);
        const auto ph = plant_variants(n, 200, 5, variants, rng);
        const auto found = match_patterns(ph.host, variants);
        std::set<std::vector<std::size_t>> truth;
        for (const auto &p : ph.planted) truth.insert(p.positions);
        planted += static_cast<int>(truth.size());
        for (const auto &m : found) {
            if (truth.count(m.positions) != 0) {
                ++recalled;
            } else {
                ++false_pos;
            }
            const Eigen::MatrixXcd a = circuit_unitary(local_circuit(ph.host, m));
            const Eigen::MatrixXcd b = circuit_unitary(variants[static_cast<std::size_t>(m.variant_id)].gates);
            const std::complex<double> ph_ = (b.adjoint() * a).trace() / 4.0;
            if ((a - (ph_ / std::abs(ph_)) * b).norm() > 1e-10) ++unsound;
        }
        std::mt19937_64 rng_clean(seed + 1000);
        false_pos += static_cast<int>(match_patterns(plant_variants(n, 300, 0, variants, rng_clean).host, variants).size());
    }
    const double secs = seconds_since(t0);
    out.detail << " variants=" << variants.size() << " (closed form 96, reported only) recall=" << recalled << '/'
               << planted << " false positives=" << false_pos << " unsound=" << unsound << " in " << secs << " s";
    out.check(recalled == planted, "100% recall");
    out.check(false_pos == 0, "no false positives");
    out.check(unsound == 0, "every match re-simulates to its variant");
    out.check(secs < 30.0, "runtime under 30 s");
}

// 10 ---------------------------------------------------------------------

void criterion_rank(Outcome &out) {
    const auto t0 = std::chrono::steady_clock::now();
    const int chi_t = brute_rank(t_state(1)).rank;
    const int chi_00 = brute_rank(PureState(2)).rank;
    const int chi_tt = brute_rank(t_state(2)).rank;
    const int chi_cat = brute_rank(cat_state(2)).rank;
    const double secs = seconds_since(t0);
    out.detail << " chi(T)=" << chi_t << " chi(|00>)=" << chi_00 << " chi(T^2)=" << chi_tt << " chi(cat_2)=" << chi_cat
               << " in " << secs << " s";
    out.check(chi_t == 2, "chi(T) = 2");
    out.check(chi_00 == 1, "chi(|00>) = 1");
    out.check(2 * chi_cat >= chi_tt && chi_cat <= chi_tt, "chi(T^2)/2 <= chi(cat_2) <= chi(T^2)");
    out.check(secs < 60.0, "runtime under 60 s");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Acceptance criteria"};
    bool slow = false;
    std::vector<int> expect_fail;
    std::vector<int> only;
    app.add_flag("--slow", slow, "Include the long robustness computations");
    app.add_option("--expect-fail", expect_fail, "Criteria known to fail")->delimiter(',');
    app.add_option("--only", only, "Run only these criteria")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::function<void(Outcome &)>> criteria = {
        [slow](Outcome &o) { criterion_rom_table(o, slow); },
        criterion_meyer_wallach,
        criterion_gadget,
        criterion_generation,
        criterion_counts,
        criterion_hierarchy,
        criterion_otoc,
        criterion_measured_families,
        criterion_matcher,
        criterion_rank,
    };

    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i](o);
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const bool expected_failure = std::find(expect_fail.begin(), expect_fail.end(), id) != expect_fail.end();
        std::string note;
        if (o.pass && expected_failure) {
            note = " (UNEXPECTED PASS)";
            ++unexpected;
        } else if (!o.pass && expected_failure) {
            note = " (expected)";
        } else if (!o.pass) {
            ++unexpected;
        }
        std::printf("criterion %d: %s%s (%.2f s)%s\n", id, o.pass ? "PASS" : "FAIL", note.c_str(), seconds_since(t0),
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    return unexpected == 0 ? 0 : 1;
}
