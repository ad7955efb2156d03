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

#include <vector>

#include "catgadget/state.hpp"

namespace catgadget {

struct MwReport {
    /// E = 2 (1 - mean_k Tr(rho_k^2)), in [0, 1].
    double value = 0.0;
    /// Tr(rho_k^2) of each single-qubit marginal, in qubit order.
    std::vector<double> purities;
};

/// Meyer-Wallach measure. Throws std::invalid_argument for a one-qubit state.
MwReport meyer_wallach(const PureState &state);

}  // namespace catgadget
