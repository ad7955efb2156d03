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

#include "catgadget/kernels.hpp"

namespace catgadget::kernels::detail {

void scalar_apply_mat2(std::span<cplx> amps, std::size_t stride, const Mat2 &u);
void scalar_apply_phase(std::span<cplx> amps, std::size_t stride, cplx phase);
void scalar_axpy(double alpha, std::span<const double> x, std::span<double> y);
double scalar_dot(std::span<const double> x, std::span<const double> y);

#ifdef CATGADGET_HAVE_AVX2
void avx2_apply_mat2(std::span<cplx> amps, std::size_t stride, const Mat2 &u);
void avx2_apply_phase(std::span<cplx> amps, std::size_t stride, cplx phase);
void avx2_axpy(double alpha, std::span<const double> x, std::span<double> y);
double avx2_dot(std::span<const double> x, std::span<const double> y);
#endif

}  // namespace catgadget::kernels::detail
