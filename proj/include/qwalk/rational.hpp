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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "qwalk/matrix.hpp"

namespace qwalk {

using Integer = mpz_class;
/// GMP rationals are kept canonical (reduced, positive denominator) by every
/// arithmetic operation; make_rational canonicalizes explicitly constructed
/// values.
using Rational = mpq_class;
using RationalMatrix = DenseMatrix<Rational>;

Rational make_rational(const Integer& num, const Integer& den);
/// "p" or "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
/// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);
bool is_integer(const Rational& r);

RationalMatrix to_rational(const IntMatrix& m);
RealMatrix to_real(const RationalMatrix& m);

/// Exact product. Both operands are scaled to integer matrices over their
/// common denominators, multiplied with fused integer multiply-adds, and the
/// result is canonicalized once per entry.
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
/// Binary exponentiation; A^0 = I.
RationalMatrix mat_pow(const RationalMatrix& a, std::uint64_t k);

RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_sub(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_scale(const RationalMatrix& a, const Rational& s);
/// 2M - I, the reflection through the column space of a projection M.
RationalMatrix reflection(const RationalMatrix& projection);

Rational trace(const RationalMatrix& m);
bool is_identity(const RationalMatrix& m);
bool is_symmetric(const RationalMatrix& m);
/// M * M^T == I.
bool is_orthogonal(const RationalMatrix& m);
/// Rank over Q by fraction-free elimination.
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntMatrix& m);

}  // namespace qwalk
