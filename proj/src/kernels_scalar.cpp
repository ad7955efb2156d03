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


#include "kernels_internal.hpp"

namespace catgadget::kernels::detail {

namespace {

// Plain product; std::complex operator* routes through the C99 NaN-recovery path.
inline cplx mul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

void scalar_apply_mat2(std::span<cplx> amps, std::size_t stride, const Mat2 &u) {
    const std::size_t dim = amps.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; ++k) {
            const cplx a0 = amps[k];
            const cplx a1 = amps[k + stride];
            amps[k] = mul(u.m00, a0) + mul(u.m01, a1);
            amps[k + stride] = mul(u.m10, a0) + mul(u.m11, a1);
        }
    }
}

void scalar_apply_phase(std::span<cplx> amps, std::size_t stride, cplx phase) {
    const std::size_t dim = amps.size();
    for (std::size_t base = stride; base < dim; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; ++k) {
            amps[k] = mul(amps[k], phase);
        }
    }
}

void scalar_axpy(double alpha, std::span<const double> x, std::span<double> y) {
    const std::size_t n = y.size();
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

double scalar_dot(std::span<const double> x, std::span<const double> y) {
    double acc = 0.0;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i] * y[i];
    }
    return acc;
}

}  // namespace catgadget::kernels::detail
