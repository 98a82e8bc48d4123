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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/rational.hpp"

namespace qwalk {

/// Polynomial with integer coefficients, stored lowest degree first with no
/// trailing zeros. The zero polynomial has degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> ascending);

    static IntPolynomial constant(const Integer& c);
    /// x^k
    static IntPolynomial monomial(int k);
    /// Product of (x - r) over the given roots.
    static IntPolynomial from_roots(const std::vector<Integer>& roots);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const;
    /// Coefficient of x^k; zero beyond the degree.
    Integer coeff(int k) const;
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    Integer evaluate(const Integer& x) const;
    Rational evaluate(const Rational& x) const;
    IntPolynomial derivative() const;

    /// "x^4 - 4*x^2", "0" for the zero polynomial.
    std::string to_string() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Characteristic polynomial det(xI - A), computed division-free (Berkowitz).
IntPolynomial char_poly(const IntMatrix& a);

/// Quotient of p by a monic divisor when the division is exact.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& monic_divisor);

/// Monic gcd of two monic polynomials, computed over Q. The result has
/// integer coefficients by Gauss's lemma.
IntPolynomial monic_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// n = core * square^2 with core square-free; signs stay on the core.
struct SquareFreeSplit {
    Integer core;
    Integer square;
};
SquareFreeSplit square_free_part(const Integer& n);

/// Positive divisors of |n| in ascending order; n must be nonzero.
std::vector<Integer> divisors(const Integer& n);

/// a + b*sqrt(m) with rational a, b and square-free m > 1, or a rational
/// (b = 0, m = 1).
class QuadraticValue {
public:
    QuadraticValue() = default;
    /// Normalizes the radicand: perfect squares collapse to rationals and
    /// square factors move into b. Throws std::domain_error for negative m
    /// with nonzero b.
    QuadraticValue(Rational a, Rational b, const Integer& radicand);
    static QuadraticValue rational(Rational a) { return QuadraticValue(std::move(a), 0, 1); }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const Integer& radicand() const noexcept { return m_; }
    bool is_rational() const noexcept { return b_ == 0; }

    QuadraticValue conjugate() const { return {a_, -b_, m_}; }
    /// a^2 - m b^2
    Rational norm() const { return a_ * a_ - Rational(m_) * b_ * b_; }
    Rational trace() const { return 2 * a_; }
    double to_double() const;

    /// "6+2*sqrt(5)", "1/2-1/4*sqrt(2)", "-sqrt(3)", "3/4".
    std::string to_string() const;
    static QuadraticValue parse(std::string_view text);

    /// Field operations require both operands in the same field Q(sqrt m);
    /// mixing two distinct radicands throws std::domain_error.
    friend QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator-(const QuadraticValue& x) { return {-x.a_, -x.b_, x.m_}; }
    friend bool operator==(const QuadraticValue& x, const QuadraticValue& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_;
    }
    /// Exact ordering on the real line.
    friend bool operator<(const QuadraticValue& x, const QuadraticValue& y);

private:
    Rational a_ = 0;
    Rational b_ = 0;
    Integer m_ = 1;
};

/// True when the minimal polynomial over Q is monic with integer
/// coefficients (trace and norm integral for irrational values).
bool is_quadratic_algebraic_integer(const QuadraticValue& v);

/// p(v), exact.
QuadraticValue eval_at_quadratic(const IntPolynomial& p, const QuadraticValue& v);

struct PolynomialRoot {
    QuadraticValue value;
    int multiplicity = 0;
    /// Degree of the minimal polynomial of value (1 or 2).
    int degree = 1;
};

/// Real roots of degree at most two over Q, found by exact factor search.
/// The residual is the product of every square-free factor that is not of
/// that form (irreducible factors of degree three or more, or quadratics with
/// negative discriminant); it is 1 when p splits completely.
struct RootFactorization {
    std::vector<PolynomialRoot> roots;  // ascending by value
    IntPolynomial residual;

    bool complete() const noexcept { return residual.degree() <= 0; }
};

/// Requires a monic p with nonzero degree; throws std::invalid_argument
/// otherwise.
RootFactorization roots_degree_le2(const IntPolynomial& p);

}  // namespace qwalk
