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


#include "catgadget/named_states.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "catgadget/catstates.hpp"

namespace catgadget {
namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

// Parses "<prefix><digits>" and returns the number, or nullopt.
std::optional<int> suffix_number(std::string_view name, std::string_view prefix) {
    if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
    const auto digits = name.substr(prefix.size());
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return value;
}

}  // namespace

PureState t_state(int k) {
    if (k < 1) throw std::invalid_argument("t_state needs k >= 1");
    const double r = 1.0 / std::numbers::sqrt2;
    PureState one = PureState::from_amplitudes({r, std::polar(r, std::numbers::pi / 4)});
    PureState out = one;
    for (int i = 1; i < k; ++i) out = tensor(out, one);
    return out;
}

PureState cs_state() { return PureState::from_amplitudes({0.5, 0.5, 0.5, cplx(0, 0.5)}); }

PureState ccz_state() {
    std::vector<cplx> amps(8, 1.0);
    amps[7] = -1.0;
    return PureState::normalized(std::move(amps));
}

PureState hoggar_state() {
    return PureState::normalized({cplx(1, 1), 0, -1, 1, cplx(0, -1), 1, 0, 0});
}

PureState ghz_state(int m) {
    if (m < 2) throw std::invalid_argument("ghz_state needs m >= 2");
    std::vector<cplx> amps(std::size_t{1} << m, 0.0);
    amps.front() = amps.back() = 1.0;
    return PureState::normalized(std::move(amps));
}

std::optional<PureState> named_state(std::string_view raw) {
    const std::string name = upper(raw);
    if (name == "T") return t_state(1);
    if (name == "CS") return cs_state();
    if (name == "CCZ") return ccz_state();
    if (name == "HOGGAR") return hoggar_state();
    // Longer prefixes first so that STARCAT is not read as CAT.
    if (auto k = suffix_number(name, "STARCAT")) return star_cat(*k);
    if (auto k = suffix_number(name, "CAT")) return cat_state(*k);
    if (auto k = suffix_number(name, "XMEAS")) return measured_family(*k, FamilyBasis::X);
    if (auto k = suffix_number(name, "ZMEAS")) return measured_family(*k, FamilyBasis::Z);
    if (auto k = suffix_number(name, "GHZ")) return ghz_state(*k);
    if (auto k = suffix_number(name, "ZERO")) {
        if (*k < 1) throw std::invalid_argument("ZERO needs at least one qubit");
        return PureState(*k);
    }
    if (auto k = suffix_number(name, "PLUS")) {
        if (*k < 1) throw std::invalid_argument("PLUS needs at least one qubit");
        return PureState::plus(*k);
    }
    if (auto k = suffix_number(name, "T")) return t_state(*k);
    return std::nullopt;
}

PureState load_amplitude_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open amplitude file " + path.string());
    std::ostringstream body;
    std::string line;
    while (std::getline(in, line)) body << line.substr(0, line.find('#')) << '\n';

    std::istringstream tokens(body.str());
    std::vector<cplx> amps;
    std::string re_tok, im_tok;
    while (tokens >> re_tok) {
        if (!(tokens >> im_tok))
            throw std::invalid_argument("amplitude file has an unpaired real part: " + re_tok);
        try {
            std::size_t used_re = 0, used_im = 0;
            const double re = std::stod(re_tok, &used_re);
            const double im = std::stod(im_tok, &used_im);
            if (used_re != re_tok.size() || used_im != im_tok.size()) throw std::invalid_argument("");
            amps.emplace_back(re, im);
        } catch (const std::exception &) {
            throw std::invalid_argument("amplitude file has a malformed number near '" + re_tok + " " +
                                     im_tok + "'");
        }
    }
    return PureState::normalized(std::move(amps));
}

PureState resolve_state(const std::string &spec) {
    if (auto s = named_state(spec)) return *std::move(s);
    if (std::filesystem::exists(spec)) return load_amplitude_file(spec);
    throw std::invalid_argument("unknown state '" + spec + "' (not a known name or an existing file)");
}

}  // namespace catgadget
