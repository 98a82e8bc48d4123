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

#pragma once

#include <cstddef>
#include <string_view>

#include "qwalk/matrix.hpp"

namespace qwalk::kernels {

// Floating-point kernels behind the eigensolver and the numeric operator
// products. Every variant performs the same IEEE operations in the same order
// (no fused multiply-add), so results are bit-identical across variants.

/// x' = c*x - s*y, y' = s*x + c*y
using RotateFunc = void (*)(double* x, double* y, std::size_t n, double c, double s);
/// y += a*x
using AxpyFunc = void (*)(double a, const double* x, double* y, std::size_t n);
/// max_i |a_i - b_i|
using MaxAbsDiffFunc = double (*)(const double* a, const double* b, std::size_t n);

struct KernelTable {
    std::string_view name;
    RotateFunc rotate;
    AxpyFunc axpy;
    MaxAbsDiffFunc max_abs_diff;
};

namespace scalar {
void rotate(double* x, double* y, std::size_t n, double c, double s);
void axpy(double a, const double* x, double* y, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
}  // namespace scalar

#if defined(QWALK_HAVE_AVX2)
namespace avx2 {
void rotate(double* x, double* y, std::size_t n, double c, double s);
void axpy(double a, const double* x, double* y, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
}  // namespace avx2
#endif

const KernelTable& scalar_table();
/// nullptr unless the AVX2 variant was compiled in and the CPU supports it.
const KernelTable* avx2_table();
/// Chosen once: AVX2 when available, unless QWALK_SIMD=scalar is set.
const KernelTable& active();

/// C = A * B (row-major, ikj order through axpy).
RealMatrix gemm(const RealMatrix& a, const RealMatrix& b);
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);

}  // namespace qwalk::kernels
