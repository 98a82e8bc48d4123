// Copyright 2026-present the qwalk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "qwalk/kernels.hpp"

namespace qwalk::kernels {

const KernelTable& scalar_table() {
    static const KernelTable table{"scalar", &scalar::rotate, &scalar::axpy, &scalar::max_abs_diff};
    return table;
}

const KernelTable* avx2_table() {
#if defined(QWALK_HAVE_AVX2)
    static const KernelTable table{"avx2", &avx2::rotate, &avx2::axpy, &avx2::max_abs_diff};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &table : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() {
    static const KernelTable& chosen = [&]() -> const KernelTable& {
        const char* env = std::getenv("QWALK_SIMD");
        if (env != nullptr && std::string_view(env) == "scalar") return scalar_table();
        if (const auto* t = avx2_table()) return *t;
        return scalar_table();
    }();
    return chosen;
}

RealMatrix gemm(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("gemm: dimension mismatch");
    const auto& k = active();
    RealMatrix c(a.rows(), b.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* crow = c.row(i).data();
        for (std::size_t p = 0; p < a.cols(); ++p) {
            const double aip = a(i, p);
            if (aip != 0.0) k.axpy(aip, b.row(p).data(), crow, b.cols());
        }
    }
    return c;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    return active().max_abs_diff(a.data(), b.data(), a.values().size());
}

}  // namespace qwalk::kernels
