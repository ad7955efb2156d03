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


// Compiled with -mavx2 -mfma; only reached after the runtime CPU check in
// kernels_dispatch.cpp.

#include "kernels_internal.hpp"

#ifdef CATGADGET_HAVE_AVX2

#include <immintrin.h>

namespace catgadget::kernels::detail {

namespace {

// Two packed complex doubles times a broadcast complex scalar.
inline __m256d cmul_bcast(__m256d z, __m256d cr, __m256d ci) {
    const __m256d swapped = _mm256_permute_pd(z, 0b0101);
    return _mm256_fmaddsub_pd(z, cr, _mm256_mul_pd(swapped, ci));
}

// Lane-wise complex product of two packed complex pairs.
inline __m256d cmul_lanes(__m256d z, __m256d c) {
    const __m256d cr = _mm256_movedup_pd(c);
    const __m256d ci = _mm256_permute_pd(c, 0b1111);
    const __m256d swapped = _mm256_permute_pd(z, 0b0101);
    return _mm256_fmaddsub_pd(z, cr, _mm256_mul_pd(swapped, ci));
}

inline __m256d pack(cplx lo, cplx hi) {
    return _mm256_setr_pd(lo.real(), lo.imag(), hi.real(), hi.imag());
}

}  // namespace

void avx2_apply_mat2(std::span<cplx> amps, std::size_t stride, const Mat2 &u) {
    auto *data = reinterpret_cast<double *>(amps.data());
    const std::size_t dim = amps.size();
    if (stride == 1) {
        const __m256d c0 = pack(u.m00, u.m10);
        const __m256d c1 = pack(u.m01, u.m11);
        for (std::size_t k = 0; k < dim; k += 2) {
            const __m256d v = _mm256_loadu_pd(data + 2 * k);
            const __m256d a0 = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d a1 = _mm256_permute2f128_pd(v, v, 0x11);
            _mm256_storeu_pd(data + 2 * k, _mm256_add_pd(cmul_lanes(a0, c0), cmul_lanes(a1, c1)));
        }
        return;
    }
    const __m256d r00 = _mm256_set1_pd(u.m00.real()), i00 = _mm256_set1_pd(u.m00.imag());
    const __m256d r01 = _mm256_set1_pd(u.m01.real()), i01 = _mm256_set1_pd(u.m01.imag());
    const __m256d r10 = _mm256_set1_pd(u.m10.real()), i10 = _mm256_set1_pd(u.m10.imag());
    const __m256d r11 = _mm256_set1_pd(u.m11.real()), i11 = _mm256_set1_pd(u.m11.imag());
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; k += 2) {
            double *p0 = data + 2 * k;
            double *p1 = data + 2 * (k + stride);
            const __m256d a0 = _mm256_loadu_pd(p0);
            const __m256d a1 = _mm256_loadu_pd(p1);
            const __m256d b0 = _mm256_add_pd(cmul_bcast(a0, r00, i00), cmul_bcast(a1, r01, i01));
            const __m256d b1 = _mm256_add_pd(cmul_bcast(a0, r10, i10), cmul_bcast(a1, r11, i11));
            _mm256_storeu_pd(p0, b0);
            _mm256_storeu_pd(p1, b1);
        }
    }
}

void avx2_apply_phase(std::span<cplx> amps, std::size_t stride, cplx phase) {
    auto *data = reinterpret_cast<double *>(amps.data());
    const std::size_t dim = amps.size();
    if (stride == 1) {
        const __m256d c = pack(cplx{1.0, 0.0}, phase);
        for (std::size_t k = 0; k < dim; k += 2) {
            const __m256d v = _mm256_loadu_pd(data + 2 * k);
            _mm256_storeu_pd(data + 2 * k, cmul_lanes(v, c));
        }
        return;
    }
    const __m256d pr = _mm256_set1_pd(phase.real());
    const __m256d pi = _mm256_set1_pd(phase.imag());
    for (std::size_t base = stride; base < dim; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; k += 2) {
            double *p = data + 2 * k;
            _mm256_storeu_pd(p, cmul_bcast(_mm256_loadu_pd(p), pr, pi));
        }
    }
}

void avx2_axpy(double alpha, std::span<const double> x, std::span<double> y) {
    const std::size_t n = y.size();
    const __m256d a = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d yv = _mm256_loadu_pd(y.data() + i);
        _mm256_storeu_pd(y.data() + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x.data() + i), yv));
    }
    for (; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

double avx2_dot(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i + 4), _mm256_loadu_pd(y.data() + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i), acc0);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) {
        acc += x[i] * y[i];
    }
    return acc;
}

}  // namespace catgadget::kernels::detail

#endif  // CATGADGET_HAVE_AVX2
