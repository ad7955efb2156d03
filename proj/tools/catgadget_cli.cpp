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


// Command-line front end. Every subcommand prints one JSON document on
// stdout (the OTOC series may go to a file or be written as CSV instead).
// Failures print {"error": {...}} on stderr and exit with 1 for bad input
// or 2 when a computed result fails its own check.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "catgadget/catstates.hpp"
#include "catgadget/circuit.hpp"
#include "catgadget/entanglement.hpp"
#include "catgadget/magic.hpp"
#include "catgadget/matcher.hpp"
#include "catgadget/named_states.hpp"
#include "catgadget/scrambling.hpp"

namespace {

using catgadget::PureState;
using json = nlohmann::ordered_json;

constexpr double kGadgetFidelityFloor = 1.0 - 1e-9;

// Raised for inputs that pass parsing but are out of range.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a result fails its own consistency check.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit_error(const std::string &kind, const std::string &message) {
    json j;
    j["error"] = {{"kind", kind}, {"message", message}};
    std::cerr << j.dump() << '\n';
}

void require(bool ok, const std::string &message) {
    if (!ok) throw ValidationError(message);
}

json amplitudes_json(const PureState &s) {
    json arr = json::array();
    for (auto a : s.amplitudes()) arr.push_back({a.real(), a.imag()});
    return arr;
}

void write_output(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

void print(const json &j) { std::cout << j.dump(2) << '\n'; }

// cat ---------------------------------------------------------------------

struct CatArgs {
    int m = 2;
    std::string family = "star";
};

void run_cat(const CatArgs &a) {
    require(a.m >= 1 && a.m <= 20, "--m must be in [1, 20]");
    PureState s(1);
    if (a.family == "star") {
        s = catgadget::star_cat(a.m);
    } else if (a.family == "original") {
        s = catgadget::cat_state(a.m);
    } else if (a.family == "xmeas") {
        s = catgadget::measured_family(a.m, catgadget::FamilyBasis::X);
    } else {
        s = catgadget::measured_family(a.m, catgadget::FamilyBasis::Z);
    }
    json j;
    j["family"] = a.family;
    j["m"] = a.m;
    j["num_qubits"] = s.num_qubits();
    j["amplitudes"] = amplitudes_json(s);
    print(j);
}

// rom / mw / rank -----------------------------------------------------------

struct StateArgs {
    std::string state;
    bool slow = false;
    int rmax = 4;
};

void run_rom(const StateArgs &a) {
    const PureState s = catgadget::resolve_state(a.state);
    require(s.num_qubits() <= 4, "rom supports at most 4 qubits");
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = catgadget::rom(s);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json coeffs = json::array();
    for (const auto &[idx, w] : r.coefficients) coeffs.push_back({{"index", idx}, {"weight", w}});
    json j;
    j["state"] = a.state;
    j["num_qubits"] = s.num_qubits();
    j["value"] = r.value;
    j["iterations"] = r.iterations;
    j["support_size"] = r.coefficients.size();
    j["coefficients"] = coeffs;
    j["seconds"] = secs;
    print(j);
}

void run_mw(const StateArgs &a) {
    const PureState s = catgadget::resolve_state(a.state);
    require(s.num_qubits() >= 2, "mw needs at least two qubits");
    const auto r = catgadget::meyer_wallach(s);
    json j;
    j["state"] = a.state;
    j["num_qubits"] = s.num_qubits();
    j["value"] = r.value;
    j["purities"] = r.purities;
    print(j);
}

void run_rank(const StateArgs &a) {
    const PureState s = catgadget::resolve_state(a.state);
    require(s.num_qubits() <= 2, "rank supports one or two qubits");
    require(a.rmax >= 1 && a.rmax <= 4, "--rmax must be in [1, 4]");
    const auto r = catgadget::brute_rank(s, a.rmax);
    json terms = json::array();
    for (const auto &[c, idx] : r.decomposition)
        terms.push_back({{"index", idx}, {"re", c.real()}, {"im", c.imag()}});
    json j;
    j["state"] = a.state;
    j["num_qubits"] = s.num_qubits();
    j["rmax"] = a.rmax;
    j["found"] = r.found;
    j["rank"] = r.found ? json(r.rank) : json(nullptr);
    j["decomposition"] = terms;
    print(j);
}

// gadget ------------------------------------------------------------------

struct GadgetArgs {
    int m = 2;
    bool all_outcomes = false;
    bool skip_nonlocal = false;
    std::string convention;
    int samples = 20;
    std::uint64_t seed = 1;
};

catgadget::Convention pick_convention(const std::string &name) {
    if (name.empty()) return catgadget::default_convention();
    if (name == "as_written") return catgadget::Convention::AsWritten;
    return catgadget::Convention::ConjugateTranspose;
}

void run_gadget_verify(const GadgetArgs &a) {
    require(a.m >= 2 && a.m <= 8, "--m must be in [2, 8]");
    require(a.samples >= 1 && a.samples <= 10000, "--samples must be in [1, 10000]");
    const auto conv = pick_convention(a.convention);
    std::mt19937_64 rng(a.seed);
    std::vector<PureState> data;
    for (int i = 0; i < a.samples; ++i) data.push_back(catgadget::random_state(a.m, rng));

    json rows = json::array();
    double worst = 1.0;
    auto check = [&](const catgadget::Outcomes &o, const PureState &in, const PureState &out) {
        const PureState expect = catgadget::simulate(catgadget::gadget_target(o, a.skip_nonlocal), in);
        return catgadget::fidelity_up_to_phase(out, expect);
    };

    if (a.all_outcomes) {
        for (std::uint32_t idx = 0; idx < (1U << a.m); ++idx) {
            const auto o = catgadget::Outcomes::from_index(a.m, idx);
            double row_min = 1.0;
            for (const auto &in : data)
                row_min = std::min(row_min, check(o, in, catgadget::run_gadget(in, o, conv, a.skip_nonlocal)));
            worst = std::min(worst, row_min);
            rows.push_back({{"outcome", o.str()},
                            {"parity", o.parity()},
                            {"min_fidelity", row_min},
                            {"pass", row_min >= kGadgetFidelityFloor}});
        }
    } else {
        for (const auto &in : data) {
            const auto sample = catgadget::sample_gadget(in, conv, a.skip_nonlocal, rng);
            const double f = check(sample.outcomes, in, sample.output);
            worst = std::min(worst, f);
            rows.push_back({{"outcome", sample.outcomes.str()},
                            {"parity", sample.outcomes.parity()},
                            {"min_fidelity", f},
                            {"pass", f >= kGadgetFidelityFloor}});
        }
    }
    const bool pass = worst >= kGadgetFidelityFloor;
    json j;
    j["m"] = a.m;
    j["convention"] = catgadget::to_string(conv);
    j["skip_nonlocal"] = a.skip_nonlocal;
    j["samples"] = a.samples;
    j["seed"] = a.seed;
    j["rows"] = rows;
    j["min_fidelity"] = worst;
    j["pass"] = pass;
    print(j);
    if (!pass) throw VerificationError("gadget output fidelity below 1 - 1e-9");
}

void run_gadget_stats(const GadgetArgs &a) {
    require(a.m >= 2 && a.m <= 16, "--m must be in [2, 16]");
    const auto st = catgadget::gadget_stats(a.m);
    json j;
    j["m"] = st.m;
    j["t_count"] = st.t_count;
    j["direct_cnot"] = st.direct_cnot;
    j["gadget_cnot"] = st.gadget_cnot;
    j["mean_correction_cz"] = st.mean_correction_cz.str();
    j["mean_correction_cz_value"] = st.mean_correction_cz.value();
    j["effective_two_qubit"] = st.effective_two_qubit.str();
    j["effective_two_qubit_value"] = st.effective_two_qubit.value();
    j["variant_count_formula"] = st.variant_count_formula;
    print(j);
}

// otoc --------------------------------------------------------------------

struct OtocArgs {
    int n = 10;
    std::string gate_set = "clifford_t";
    int blocks = 100;
    int layers = 10;
    int inject = 0;
    int inject_upto = 0;
    int m_min = 2;
    int m_max = 10;
    std::string mode = "unitary";
    std::uint64_t seed = 1;
    std::vector<std::uint64_t> seeds;
    std::string out;
    std::string format;
};

// The injection schedule uses its own stream so that adding injections does
// not change the Clifford blocks drawn for the same seed.
constexpr std::uint64_t kScheduleStream = 0x9E3779B97F4A7C15ULL;

catgadget::OtocSeries otoc_one(const OtocArgs &a, catgadget::GateSet set, std::uint64_t seed) {
    catgadget::DopeSchedule schedule;
    if (a.inject > 0) {
        std::mt19937_64 rng(seed ^ kScheduleStream);
        const int upto = a.inject_upto > 0 ? a.inject_upto : a.blocks;
        schedule = catgadget::random_schedule(a.n, a.inject, upto, a.m_min, std::min(a.m_max, a.n), rng);
    }
    const auto mode = a.mode == "gadget" ? catgadget::InjectionMode::GadgetSampling
                                         : catgadget::InjectionMode::Unitary;
    return catgadget::otoc_experiment(a.n, set, a.blocks, a.layers, schedule, seed, mode);
}

void run_otoc(const OtocArgs &a) {
    require(a.n >= 2 && a.n <= 20, "--n must be in [2, 20]");
    require(a.blocks >= 1 && a.blocks <= 100000, "--blocks must be in [1, 100000]");
    require(a.layers >= 1 && a.layers <= 10000, "--layers must be in [1, 10000]");
    require(a.inject >= 0, "--inject must be non-negative");
    require(a.inject_upto >= 0 && a.inject_upto <= a.blocks, "--inject-upto must be in [1, blocks]");
    require(a.m_min >= 2 && a.m_min <= a.m_max, "need 2 <= --m-min <= --m-max");
    require(a.inject == 0 || a.m_min <= a.n, "--m-min exceeds the register size");
    const auto set = catgadget::parse_gate_set(a.gate_set);
    require(set.has_value(), "unknown gate set '" + a.gate_set + "'");

    std::string format = a.format;
    if (format.empty()) format = a.out.ends_with(".csv") ? "csv" : "json";

    std::vector<std::uint64_t> seeds = a.seeds.empty() ? std::vector<std::uint64_t>{a.seed} : a.seeds;
    std::vector<std::future<catgadget::OtocSeries>> jobs;
    for (auto s : seeds) jobs.push_back(std::async(std::launch::async, otoc_one, std::cref(a), *set, s));
    std::vector<catgadget::OtocSeries> runs;
    for (auto &f : jobs) runs.push_back(f.get());

    std::string text;
    if (format == "csv") {
        if (runs.size() == 1) {
            text = catgadget::to_csv(runs.front());
        } else {
            std::ostringstream os;
            os << "seed,tau,re,im\n";
            os.precision(17);
            for (const auto &r : runs)
                for (const auto &p : r.points) os << r.seed << ',' << p.tau << ',' << p.re << ',' << p.im << '\n';
            text = os.str();
        }
    } else if (runs.size() == 1) {
        text = catgadget::to_json(runs.front());
    } else {
        json arr = json::array();
        for (const auto &r : runs) arr.push_back(json::parse(catgadget::to_json(r)));
        text = arr.dump(2);
    }
    write_output(text, a.out);
}

// match -------------------------------------------------------------------

struct MatchArgs {
    std::string host;
    int plant = -1;
    int n = 8;
    int gates = 200;
    std::uint64_t seed = 1;
    std::string save_host;
};

json match_json(const catgadget::Match &m) {
    return {{"variant_id", m.variant_id}, {"positions", m.positions}, {"qubit_map", m.qubit_map}};
}

void run_match(const MatchArgs &a) {
    require(!a.host.empty() || a.plant >= 0, "give --host FILE or --plant K");
    require(a.host.empty() || a.plant < 0, "--host and --plant are mutually exclusive");
    const auto variants = catgadget::enumerate_v2_variants();

    catgadget::Circuit host(1);
    std::vector<catgadget::Match> planted;
    if (!a.host.empty()) {
        host = catgadget::load_circuit(a.host);
    } else {
        require(a.n >= 2 && a.n <= 64, "--n must be in [2, 64]");
        require(a.gates >= 0 && a.gates <= 1000000, "--gates must be in [0, 1000000]");
        std::mt19937_64 rng(a.seed);
        auto ph = catgadget::plant_variants(a.n, a.gates, a.plant, variants, rng);
        host = std::move(ph.host);
        planted = std::move(ph.planted);
        if (!a.save_host.empty()) write_output(catgadget::serialize_circuit(host), a.save_host);
    }

    const auto matches = catgadget::match_patterns(host, variants);
    const auto cost = catgadget::estimate_match_cost(host, variants.front().gates);

    json j;
    j["host"] = a.host.empty() ? json("planted") : json(a.host);
    j["num_qubits"] = host.num_qubits();
    j["num_gates"] = host.size();
    j["variant_count"] = variants.size();
    j["count"] = matches.size();
    json arr = json::array();
    for (const auto &m : matches) arr.push_back(match_json(m));
    j["matches"] = arr;
    j["cost_estimate"] = {{"g_c", cost.g_c},
                          {"g_p", cost.g_p},
                          {"n_c", cost.n_c},
                          {"n_p", cost.n_p},
                          {"pattern_factor", cost.pattern_factor},
                          {"value", cost.value}};
    bool recall_ok = true;
    if (a.plant >= 0) {
        json truth = json::array();
        for (const auto &m : planted) truth.push_back(match_json(m));
        j["seed"] = a.seed;
        j["planted"] = truth;
        recall_ok = matches.size() == planted.size();
        for (std::size_t i = 0; recall_ok && i < matches.size(); ++i)
            recall_ok = matches[i].positions == planted[i].positions;
        j["recall_ok"] = recall_ok;
    }
    print(j);
    if (!recall_ok) throw VerificationError("matches differ from the planted ground truth");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Cat-state gadgets, robustness of magic and OTOC experiments"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    CatArgs cat_args;
    auto *cat = app.add_subcommand("cat", "Print the amplitudes of a cat-state family member");
    cat->add_option("--m", cat_args.m, "Number of qubits")->required();
    cat->add_option("--family", cat_args.family, "star, original, xmeas or zmeas")
        ->check(CLI::IsMember({"star", "original", "xmeas", "zmeas"}));

    StateArgs rom_args;
    auto *rom = app.add_subcommand("rom", "Robustness of magic of a pure state");
    rom->add_option("--state", rom_args.state, "State name or amplitude file")->required();
    rom->add_flag("--slow", rom_args.slow, "Acknowledge a long run (accepted for every size)");

    StateArgs mw_args;
    auto *mw = app.add_subcommand("mw", "Meyer-Wallach entanglement");
    mw->add_option("--state", mw_args.state, "State name or amplitude file")->required();

    StateArgs rank_args;
    auto *rank = app.add_subcommand("rank", "Exhaustive stabilizer rank for one or two qubits");
    rank->add_option("--state", rank_args.state, "State name or amplitude file")->required();
    rank->add_option("--rmax", rank_args.rmax, "Largest rank to try");

    GadgetArgs gadget_args;
    auto *gadget = app.add_subcommand("gadget", "Cat-state injection gadget");
    gadget->require_subcommand(1);
    auto *verify = gadget->add_subcommand("verify", "Check corrected outputs against V_m");
    verify->add_option("--m", gadget_args.m, "Gadget size")->required();
    verify->add_flag("--all-outcomes", gadget_args.all_outcomes, "Enumerate every ancilla record");
    verify->add_flag("--skip-nonlocal", gadget_args.skip_nonlocal, "Apply only the local S corrections");
    verify->add_option("--convention", gadget_args.convention, "Override: as_written or conjugate_transpose")
        ->check(CLI::IsMember({"as_written", "conjugate_transpose"}));
    verify->add_option("--samples", gadget_args.samples, "Random data states");
    verify->add_option("--seed", gadget_args.seed, "Seed for data states and sampled records");
    auto *stats = gadget->add_subcommand("stats", "Gate counts of the gadget and the direct circuit");
    stats->add_option("--m", gadget_args.m, "Gadget size")->required();

    OtocArgs otoc_args;
    auto *otoc = app.add_subcommand("otoc", "OTOC of a random (optionally doped) circuit");
    otoc->add_option("--n", otoc_args.n, "Qubits");
    otoc->add_option("--gate-set", otoc_args.gate_set, "nonentangling_clifford, clifford or clifford_t");
    otoc->add_option("--blocks", otoc_args.blocks, "Number of blocks");
    otoc->add_option("--layers", otoc_args.layers, "Layers per block");
    otoc->add_option("--inject", otoc_args.inject, "Number of V_m injections");
    otoc->add_option("--inject-upto", otoc_args.inject_upto, "Last block that may receive an injection");
    otoc->add_option("--m-min", otoc_args.m_min, "Smallest injected m");
    otoc->add_option("--m-max", otoc_args.m_max, "Largest injected m (capped at n)");
    otoc->add_option("--mode", otoc_args.mode, "unitary or gadget")->check(CLI::IsMember({"unitary", "gadget"}));
    auto *seed_opt = otoc->add_option("--seed", otoc_args.seed, "Seed");
    otoc->add_option("--seeds", otoc_args.seeds, "Comma-separated seeds, run concurrently")
        ->delimiter(',')
        ->excludes(seed_opt);
    otoc->add_option("--out", otoc_args.out, "Output file (stdout when omitted)");
    otoc->add_option("--format", otoc_args.format, "json or csv; default from the --out extension")
        ->check(CLI::IsMember({"json", "csv"}));

    MatchArgs match_args;
    auto *match = app.add_subcommand("match", "Find V_2 variants in a circuit");
    match->add_option("--host", match_args.host, "Circuit file (native format or .qasm)");
    match->add_option("--plant", match_args.plant, "Plant K variants in a random Clifford host");
    match->add_option("--n", match_args.n, "Qubits of the planted host");
    match->add_option("--gates", match_args.gates, "Clifford gates of the planted host");
    match->add_option("--seed", match_args.seed, "Seed of the planted host");
    match->add_option("--save-host", match_args.save_host, "Write the planted host circuit here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        emit_error("usage", e.what());
        return 1;
    }

    try {
        if (cat->parsed()) run_cat(cat_args);
        else if (rom->parsed()) run_rom(rom_args);
        else if (mw->parsed()) run_mw(mw_args);
        else if (rank->parsed()) run_rank(rank_args);
        else if (verify->parsed()) run_gadget_verify(gadget_args);
        else if (stats->parsed()) run_gadget_stats(gadget_args);
        else if (otoc->parsed()) run_otoc(otoc_args);
        else if (match->parsed()) run_match(match_args);
    } catch (const VerificationError &e) {
        emit_error("verification", e.what());
        return 2;
    } catch (const ValidationError &e) {
        emit_error("validation", e.what());
        return 1;
    } catch (const catgadget::ParseError &e) {
        emit_error("validation", e.what());
        return 1;
    } catch (const std::invalid_argument &e) {
        emit_error("validation", e.what());
        return 1;
    } catch (const std::out_of_range &e) {
        emit_error("validation", e.what());
        return 1;
    } catch (const std::exception &e) {
        emit_error("computation", e.what());
        return 2;
    }
    return 0;
}
