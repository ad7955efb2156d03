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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "catgadget/state.hpp"

namespace catgadget {

/// |T> = (|0> + e^{i pi/4}|1>)/sqrt(2) repeated k times. k >= 1.
PureState t_state(int k = 1);

/// CS|++> = (1, 1, 1, i)/2
PureState cs_state();

/// CCZ|+++>
PureState ccz_state();

/// (1+i, 0, -1, 1, -i, 1, 0, 0)/sqrt(6)
PureState hoggar_state();

/// Balanced GHZ (|0...0> + |1...1>)/sqrt(2). m >= 2.
PureState ghz_state(int m);

/// Resolves a case-insensitive state name:
///   T, T2, T3, T4     tensor powers of |T>
///   CS, CCZ, HOGGAR
///   CATm, STARCATm    cat and star-cat states on m qubits
///   XMEASm, ZMEASm    measured families on m qubits
///   GHZm, ZEROm, PLUSm
/// Returns nullopt for names that do not parse. Throws std::invalid_argument
/// when a recognised family gets an unsupported size.
std::optional<PureState> named_state(std::string_view name);

/// Whitespace-separated "re im" pairs, one amplitude per pair; '#' starts a
/// comment. The vector is normalised. Throws std::invalid_argument on I/O or
/// format errors, a bad length or the zero vector.
PureState load_amplitude_file(const std::filesystem::path &path);

/// Named state if `spec` names one, otherwise the amplitude file at `spec`.
PureState resolve_state(const std::string &spec);

}  // namespace catgadget
