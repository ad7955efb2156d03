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

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

/// Data-parallel inner loops shared by the state-vector engine and the
/// simplex solver. Every kernel has a portable scalar reference and, where
/// the build and the CPU allow it, an AVX2/FMA variant. The variant in use
/// is picked once at startup; `scalar()` and `avx2()` stay reachable so the
/// two can be compared directly.
namespace catgadget::kernels {

using cplx = std::complex<double>;

/// Row-major 2x2 complex matrix.
struct Mat2 {
    cplx m00, m01, m10, m11;
};

/// Applies `u` to every amplitude pair (i, i + stride) with (i & stride) == 0.
/// `stride` must be a power of two smaller than amps.size().
using ApplyMat2Fn = void (*)(std::span<cplx> amps, std::size_t stride, const Mat2 &u);

/// Multiplies every amplitude whose index has the `stride` bit set by `phase`.
using ApplyPhaseFn = void (*)(std::span<cplx> amps, std::size_t stride, cplx phase);

/// y += alpha * x
using AxpyFn = void (*)(double alpha, std::span<const double> x, std::span<double> y);

using DotFn = double (*)(std::span<const double> x, std::span<const double> y);

struct KernelTable {
    std::string_view name;
    ApplyMat2Fn apply_mat2;
    ApplyPhaseFn apply_phase;
    AxpyFn axpy;
    DotFn dot;
};

const KernelTable &scalar();

/// nullptr when the AVX2 variants were not compiled in or the CPU lacks AVX2/FMA.
const KernelTable *avx2();

/// The table chosen at first use. Setting CATGADGET_FORCE_SCALAR=1 in the
/// environment pins the scalar reference.
const KernelTable &active();

inline void apply_mat2(std::span<cplx> amps, std::size_t stride, const Mat2 &u) {
    active().apply_mat2(amps, stride, u);
}
inline void apply_phase(std::span<cplx> amps, std::size_t stride, cplx phase) {
    active().apply_phase(amps, stride, phase);
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    active().axpy(alpha, x, y);
}
inline double dot(std::span<const double> x, std::span<const double> y) {
    return active().dot(x, y);
}

}  // namespace catgadget::kernels
