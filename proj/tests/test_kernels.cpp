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

#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string_view>
#include <random>
#include <vector>

#include "qwalk/kernels.hpp"

using namespace qwalk;

namespace {

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> nd(0.0, 10.0);
    std::vector<double> v(n);
    for (auto& x : v) x = nd(rng);
    return v;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar kernels") {
    std::vector<double> x{1, 2, 3};
    std::vector<double> y{4, 5, 6};
    kernels::scalar::axpy(2.0, x.data(), y.data(), 3);
    CHECK(y == std::vector<double>{6, 9, 12});
    CHECK(kernels::scalar::max_abs_diff(x.data(), y.data(), 3) == 9.0);
    CHECK(kernels::scalar::max_abs_diff(x.data(), y.data(), 0) == 0.0);

    std::vector<double> a{1, 0};
    std::vector<double> b{0, 1};
    kernels::scalar::rotate(a.data(), b.data(), 2, 0.0, 1.0);
    // x' = c x - s y, y' = s x + c y
    CHECK(a == std::vector<double>{0, -1});
    CHECK(b == std::vector<double>{1, 0});
}

TEST_CASE("dispatch table") {
    const auto& active = kernels::active();
    CHECK((active.name == "scalar" || active.name == "avx2"));
    CHECK(kernels::scalar_table().name == "scalar");
    if (const char* env = std::getenv("QWALK_SIMD"); env != nullptr && std::string_view(env) == "scalar")
        CHECK(active.name == "scalar");
    if (kernels::avx2_table() == nullptr) MESSAGE("AVX2 unavailable on this host; only the scalar path is tested");
}

TEST_CASE("AVX2 kernels are bit-identical to scalar") {
    const auto* avx = kernels::avx2_table();
    if (avx == nullptr) return;
    const auto& ref = kernels::scalar_table();
    std::mt19937_64 rng(99);
    for (std::size_t n = 0; n <= 67; ++n) {
        const auto x0 = random_vector(n, rng);
        const auto y0 = random_vector(n, rng);
        const double c = std::cos(0.3 + n);
        const double s = std::sin(0.3 + n);

        auto xs = x0, ys = y0, xv = x0, yv = y0;
        ref.rotate(xs.data(), ys.data(), n, c, s);
        avx->rotate(xv.data(), yv.data(), n, c, s);
        CHECK(same_bits(xs, xv));
        CHECK(same_bits(ys, yv));

        auto as = y0, av = y0;
        ref.axpy(-1.7, x0.data(), as.data(), n);
        avx->axpy(-1.7, x0.data(), av.data(), n);
        CHECK(same_bits(as, av));

        CHECK(ref.max_abs_diff(x0.data(), y0.data(), n) == avx->max_abs_diff(x0.data(), y0.data(), n));
    }
}

TEST_CASE("max_abs_diff sees NaN-free extremes at every position") {
    for (const auto* table : {&kernels::scalar_table(), kernels::avx2_table()}) {
        if (table == nullptr) continue;
        for (std::size_t n = 1; n <= 19; ++n)
            for (std::size_t pos = 0; pos < n; ++pos) {
                std::vector<double> a(n, 1.0), b(n, 1.0);
                b[pos] = -4.0;
                CHECK(table->max_abs_diff(a.data(), b.data(), n) == 5.0);
            }
    }
}

TEST_CASE("gemm matches the triple loop") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 1 + rng() % 9, k = 1 + rng() % 9, m = 1 + rng() % 9;
        RealMatrix a(n, k), b(k, m);
        for (std::size_t i = 0; i < n * k; ++i) a.data()[i] = static_cast<double>(static_cast<int>(rng() % 7) - 3);
        for (std::size_t i = 0; i < k * m; ++i) b.data()[i] = static_cast<double>(static_cast<int>(rng() % 7) - 3);
        RealMatrix c(n, m, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t l = 0; l < k; ++l) c(i, j) += a(i, l) * b(l, j);
        CHECK(kernels::gemm(a, b) == c);  // small integers: exact
        CHECK(kernels::max_abs_diff(kernels::gemm(a, b), c) == 0.0);
    }
    CHECK_THROWS(kernels::gemm(RealMatrix(2, 3), RealMatrix(2, 3)));
}

}
