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

#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "catgadget/state.hpp"

namespace catgadget::testing {

inline void expect_amplitudes_near(const PureState &a, const PureState &b, double tol) {
    ASSERT_EQ(a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        EXPECT_NEAR(a[i].real(), b[i].real(), tol) << "index " << i;
        EXPECT_NEAR(a[i].imag(), b[i].imag(), tol) << "index " << i;
    }
}

inline PureState seeded_state(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_state(n, rng);
}

}  // namespace catgadget::testing
