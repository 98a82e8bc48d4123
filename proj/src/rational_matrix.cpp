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

#include <stdexcept>
#include <vector>

#include "qwalk/rational.hpp"

namespace qwalk {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return Integer(digits);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const Integer den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return make_rational(parse_int(text.substr(0, slash)), den);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(static_cast<long>(m(i, j)));
    return r;
}

RealMatrix to_real(const RationalMatrix& m) {
    RealMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
    return r;
}

namespace {

Integer common_denominator(const RationalMatrix& m) {
    Integer l = 1;
    for (const auto& x : m.values())
        if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

// Entries scaled by the common denominator; exact integers.
std::vector<Integer> scaled_numerators(const RationalMatrix& m, const Integer& den) {
    std::vector<Integer> out(m.values().size());
    Integer tmp;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto& x = m.values()[i];
        if (x == 0) continue;
        mpz_divexact(tmp.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        out[i] = tmp * x.get_num();
    }
    return out;
}

}  // namespace

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    const std::size_t n = a.rows();
    const std::size_t inner = a.cols();
    const std::size_t m = b.cols();

    const Integer da = common_denominator(a);
    const Integer db = common_denominator(b);
    const auto an = scaled_numerators(a, da);
    const auto bn = scaled_numerators(b, db);
    const Integer den = da * db;

    std::vector<Integer> acc(m);
    RationalMatrix c(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& x : acc) x = 0;
        for (std::size_t k = 0; k < inner; ++k) {
            const Integer& aik = an[i * inner + k];
            if (aik == 0) continue;
            const Integer* brow = bn.data() + k * m;
            for (std::size_t j = 0; j < m; ++j)
                if (brow[j] != 0) mpz_addmul(acc[j].get_mpz_t(), aik.get_mpz_t(), brow[j].get_mpz_t());
        }
        for (std::size_t j = 0; j < m; ++j) c(i, j) = make_rational(acc[j], den);
    }
    return c;
}

RationalMatrix mat_pow(const RationalMatrix& a, std::uint64_t k) {
    if (!a.is_square()) throw std::invalid_argument("mat_pow: matrix is not square");
    RationalMatrix result = RationalMatrix::identity(a.rows());
    RationalMatrix base = a;
    while (k > 0) {
        if (k & 1U) result = mat_mul(result, base);
        k >>= 1U;
        if (k > 0) base = mat_mul(base, base);
    }
    return result;
}

RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b) {
    require_same_shape(a, b, "mat_add");
    RationalMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

RationalMatrix mat_sub(const RationalMatrix& a, const RationalMatrix& b) {
    require_same_shape(a, b, "mat_sub");
    RationalMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

RationalMatrix mat_scale(const RationalMatrix& a, const Rational& s) {
    RationalMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * s;
    return c;
}

RationalMatrix reflection(const RationalMatrix& projection) {
    if (!projection.is_square()) throw std::invalid_argument("reflection: matrix is not square");
    RationalMatrix r = mat_scale(projection, 2);
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) -= 1;
    return r;
}

Rational trace(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("trace: matrix is not square");
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

bool is_identity(const RationalMatrix& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (mpq_cmp_si(m(i, j).get_mpq_t(), i == j ? 1 : 0, 1) != 0) return false;
    return true;
}

bool is_symmetric(const RationalMatrix& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

bool is_orthogonal(const RationalMatrix& m) {
    return m.is_square() && is_identity(mat_mul(m, m.transpose()));
}

namespace {

// Bareiss elimination on an integer copy; returns the rank.
std::size_t bareiss_rank(std::vector<Integer> a, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (a[r * cols + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
        const Integer p = a[rank * cols + col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Integer f = a[r * cols + col];
            for (std::size_t j = col; j < cols; ++j) {
                Integer v = p * a[r * cols + j] - f * a[rank * cols + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[r * cols + j] = v;
            }
        }
        prev = p;
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
    const Integer den = common_denominator(m);
    return bareiss_rank(scaled_numerators(m, den), m.rows(), m.cols());
}

std::size_t rank(const IntMatrix& m) {
    std::vector<Integer> a(m.values().size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<long>(m.values()[i]);
    return bareiss_rank(std::move(a), m.rows(), m.cols());
}

}  // namespace qwalk
