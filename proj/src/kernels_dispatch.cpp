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


#include <cstdlib>
#include <cstring>

#include "kernels_internal.hpp"

namespace catgadget::kernels {

const KernelTable &scalar() {
    static const KernelTable table{
        "scalar", detail::scalar_apply_mat2, detail::scalar_apply_phase, detail::scalar_axpy, detail::scalar_dot};
    return table;
}

const KernelTable *avx2() {
#ifdef CATGADGET_HAVE_AVX2
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    static const KernelTable table{
        "avx2", detail::avx2_apply_mat2, detail::avx2_apply_phase, detail::avx2_axpy, detail::avx2_dot};
    return supported ? &table : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable &active() {
    static const KernelTable &chosen = [] () -> const KernelTable & {
        const char *force = std::getenv("CATGADGET_FORCE_SCALAR");
        if (force != nullptr && std::strcmp(force, "0") != 0 && force[0] != '\0') {
            return scalar();
        }
        const KernelTable *vec = avx2();
        return vec != nullptr ? *vec : scalar();
    }();
    return chosen;
}

}  // namespace catgadget::kernels
