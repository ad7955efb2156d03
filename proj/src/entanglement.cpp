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


#include "catgadget/entanglement.hpp"

#include <complex>
#include <stdexcept>

namespace catgadget {

MwReport meyer_wallach(const PureState &state) {
    const int m = state.num_qubits();
    if (m < 2) {
        throw std::invalid_argument("meyer_wallach: needs at least two qubits");
    }
    MwReport report;
    report.purities.reserve(static_cast<std::size_t>(m));
    double sum = 0.0;
    for (int k = 0; k < m; ++k) {
        const DensityMatrix rho = partial_trace_single(state, k);
        double purity = 0.0;
        for (const cplx &e : rho.entries()) {
            purity += std::norm(e);
        }
        report.purities.push_back(purity);
        sum += purity;
    }
    report.value = 2.0 * (1.0 - sum / m);
    return report;
}

}  // namespace catgadget
