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

#include <cmath>
#include <random>

#include "catalog.hpp"
#include "oracles.hpp"
#include "qwalk/polynomial.hpp"
#include "qwalk/rational.hpp"

using namespace qwalk;

namespace {

QuadraticValue qv(const char* text) { return QuadraticValue::parse(text); }

IntPolynomial poly(std::initializer_list<long> ascending) {
    std::vector<Integer> c;
    for (long x : ascending) c.emplace_back(x);
    return IntPolynomial(c);
}

// p(x + shift), by Horner over polynomials.
IntPolynomial shifted(const IntPolynomial& p, long shift) {
    const IntPolynomial lin = poly({shift, 1});
    IntPolynomial r;
    for (int k = p.degree(); k >= 0; --k) r = r * lin + IntPolynomial::constant(p.coeff(k));
    return r;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("rationals stay canonical") {
    const Rational r = make_rational(6, -4);
    CHECK(to_string(r) == "-3/2");
    CHECK(r.get_den() > 0);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    CHECK(parse_rational("2/4") == make_rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("+3/9") == make_rational(1, 3));
    for (const char* bad : {"", "/", "1/", "1/0", "1/-2", "a", "1.5", "--1"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("mat_mul agrees with schoolbook multiplication") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + rng() % 7;
        const auto a = oracle::random_rational(n, rng);
        const auto b = oracle::random_rational(n, rng);
        CHECK(mat_mul(a, b) == oracle::naive_mul(a, b));
    }
    const auto a = oracle::random_rational(4, rng);
    CHECK(mat_mul(RationalMatrix::identity(4), a) == a);
    const auto swap = to_rational(IntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(mat_mul(swap, swap) == RationalMatrix::identity(2));
    CHECK_THROWS_AS(mat_mul(RationalMatrix(2, 3), RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("figure1 projections recombine to the worked operator") {
    // The printed P and Q give the printed U once entry (2,4) takes the
    // sign that orthogonality forces.
    const RationalMatrix u = mat_mul(reflection(catalog::printed_p()), reflection(catalog::printed_q()));
    RationalMatrix expected = catalog::printed_u();
    CHECK(expected(2, 4) == make_rational(1, 3));
    CHECK_FALSE(is_orthogonal(expected));
    expected(2, 4) = make_rational(-1, 3);
    CHECK(u == expected);
    CHECK(is_orthogonal(u));
    CHECK(trace(u) == make_rational(-1, 3));
}

TEST_CASE("mat_pow") {
    std::mt19937_64 rng(3);
    const auto a = oracle::random_rational(3, rng);
    CHECK(mat_pow(a, 0) == RationalMatrix::identity(3));
    CHECK(mat_pow(a, 1) == a);
    CHECK(mat_pow(a, 5) == oracle::naive_pow(a, 5));

    const RationalMatrix u = mat_mul(reflection(catalog::printed_p()), reflection(catalog::printed_q()));
    const RationalMatrix u2 = mat_pow(u, 2);
    CHECK(u2 == oracle::naive_mul(u, u));

    // K2,2 walk operator, assembled by hand
    const auto k22 = to_rational(IntMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(is_identity(mat_pow(k22, 2)));
    CHECK_THROWS_AS(mat_pow(RationalMatrix(2, 3), 2), std::invalid_argument);
}

TEST_CASE("mat_pow is additive in the exponent") {
    std::mt19937_64 rng(2026);
    for (int t = 0; t < 20; ++t) {
        const auto a = oracle::random_rational(1 + rng() % 4, rng, 3, 3);
        const unsigned i = rng() % 5;
        const unsigned j = rng() % 5;
        CHECK(mat_pow(a, i + j) == mat_mul(mat_pow(a, i), mat_pow(a, j)));
    }
}

TEST_CASE("rank agrees with Gaussian elimination") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + rng() % 6;
        auto a = oracle::random_rational(n, rng, 2, 2);
        if (n > 2 && t % 2 == 0)
            for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = a(0, j) * 3 - a(1, j);
        CHECK(rank(a) == oracle::rank(a));
    }
    CHECK(rank(IntMatrix::from_rows({{1, 1}, {1, 1}})) == 1);
    CHECK(rank(RationalMatrix(3, 3, Rational(0))) == 0);
}

TEST_CASE("matrix predicates") {
    CHECK(is_symmetric(catalog::printed_p()));
    CHECK(mat_mul(catalog::printed_p(), catalog::printed_p()) == catalog::printed_p());
    CHECK(is_identity(RationalMatrix::identity(3)));
    CHECK_FALSE(is_identity(RationalMatrix(2, 3)));
    CHECK(reflection(RationalMatrix::identity(2)) == RationalMatrix::identity(2));
    CHECK(mat_sub(mat_add(catalog::printed_p(), catalog::printed_q()), catalog::printed_q()) == catalog::printed_p());
    CHECK(mat_scale(catalog::printed_p(), 0) == RationalMatrix(7, 7, Rational(0)));
}

TEST_CASE("char_poly small cases") {
    CHECK(char_poly(IntMatrix::from_rows({{0, 1}, {1, 0}})) == poly({-1, 0, 1}));
    CHECK(char_poly(adjacency_matrix(cycle(4))).to_string() == "x^4 - 4*x^2");
    CHECK(char_poly(IntMatrix(0, 0)) == poly({1}));
}

TEST_CASE("char_poly agrees with det(tI - A)") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 12; ++t) {
        const Graph g = random_connected(2 + static_cast<int>(rng() % 7), 0.5, rng());
        const IntMatrix a = adjacency_matrix(g);
        const IntPolynomial p = char_poly(a);
        CHECK(p.is_monic());
        CHECK(p.degree() == g.vertex_count());
        for (long x = -3; x <= 3; ++x) CHECK(Rational(p.evaluate(Integer(x))) == oracle::char_poly_at(a, x));
    }
}

TEST_CASE("line graph characteristic polynomial of a regular graph") {
    // phi(L(G), x) = (x + 2)^(e - n) phi(G, x - d + 2)
    for (const auto& [name, g] : catalog::regular()) {
        CAPTURE(name);
        const int d = *g.regular_degree();
        const int gap = g.edge_count() - g.vertex_count();
        if (gap < 0) continue;
        IntPolynomial lhs = char_poly(adjacency_matrix(line_graph(g)));
        IntPolynomial rhs = shifted(char_poly(adjacency_matrix(g)), 2 - d);
        for (int i = 0; i < gap; ++i) rhs = rhs * poly({2, 1});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Cayley-Hamilton on catalog adjacency matrices") {
    for (const auto& [name, g] : catalog::regular()) {
        CAPTURE(name);
        const RationalMatrix a = to_rational(adjacency_matrix(g));
        const IntPolynomial p = char_poly(adjacency_matrix(g));
        RationalMatrix acc(a.rows(), a.cols(), Rational(0));
        RationalMatrix power = RationalMatrix::identity(a.rows());
        for (int k = 0; k <= p.degree(); ++k) {
            acc = mat_add(acc, mat_scale(power, Rational(p.coeff(k))));
            power = mat_mul(power, a);
        }
        CHECK(acc == RationalMatrix(a.rows(), a.cols(), Rational(0)));
    }
}

TEST_CASE("polynomial arithmetic") {
    const IntPolynomial p = poly({-1, 0, 1});
    CHECK((p * p).to_string() == "x^4 - 2*x^2 + 1");
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p.derivative() == poly({0, 2}));
    CHECK(IntPolynomial::from_roots({Integer(1), Integer(-1)}) == p);
    CHECK(divide_exact(p * poly({3, 1}), poly({3, 1})) == p);
    CHECK_FALSE(divide_exact(p, poly({3, 1})).has_value());
    CHECK(monic_gcd(p * poly({3, 1}), poly({-1, 1}) * poly({5, 1})) == poly({-1, 1}));
    CHECK(p.evaluate(Rational(1, 2)) == Rational(-3, 4));
    CHECK(IntPolynomial().to_string() == "0");
}

TEST_CASE("square_free_part") {
    auto check = [](long n, long core, long square) {
        const auto s = square_free_part(Integer(n));
        CHECK(s.core == core);
        CHECK(s.square == square);
    };
    check(20, 5, 2);
    check(5, 5, 1);
    check(48, 3, 4);
    check(1, 1, 1);
    check(-12, -3, 2);

    for (long n = 1; n <= 3000; ++n) {
        const auto s = square_free_part(Integer(n));
        REQUIRE(s.core * s.square * s.square == n);
        for (long p = 2; p * p <= s.core; ++p) REQUIRE(s.core % (p * p) != 0);
    }
}

TEST_CASE("divisors") {
    for (long n = 1; n <= 2000; ++n) {
        std::vector<Integer> brute;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) brute.emplace_back(d);
        REQUIRE(divisors(Integer(n)) == brute);
    }
    const Integer big = Integer(1000003) * Integer(1000033);
    CHECK(divisors(big) == std::vector<Integer>{1, 1000003, 1000033, big});
    CHECK(divisors(Integer(-6)) == std::vector<Integer>{1, 2, 3, 6});
    CHECK_THROWS(divisors(Integer(0)));
}

TEST_CASE("quadratic values normalize") {
    CHECK(QuadraticValue(0, 1, 8) == QuadraticValue(0, 2, 2));
    CHECK(QuadraticValue(3, 1, 4) == QuadraticValue::rational(5));
    CHECK(QuadraticValue(1, 0, 7).is_rational());
    CHECK_THROWS_AS(QuadraticValue(0, 1, -3), std::domain_error);
    CHECK(qv("6+2*sqrt(5)").to_string() == "6+2*sqrt(5)");
    CHECK(qv("-sqrt(3)") == QuadraticValue(0, -1, 3));
    CHECK(qv("1/2-1/4*sqrt(2)") == QuadraticValue(make_rational(1, 2), make_rational(-1, 4), 2));
    CHECK(qv("3/4").to_string() == "3/4");
    CHECK(qv("6+2*sqrt(5)").norm() == 16);
    CHECK(qv("6+2*sqrt(5)").trace() == 12);
    CHECK_THROWS(qv("sqrt("));
    CHECK_THROWS_AS(qv("sqrt(2)") + qv("sqrt(3)"), std::domain_error);
    CHECK(qv("1+sqrt(5)") * qv("1-sqrt(5)") == QuadraticValue::rational(-4));
}

TEST_CASE("quadratic ordering is exact") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> small(-9, 9);
    for (int t = 0; t < 300; ++t) {
        const int m = std::vector<int>{2, 3, 5, 6, 7}[rng() % 5];
        const QuadraticValue x(make_rational(small(rng), 1 + rng() % 4), make_rational(small(rng), 1 + rng() % 3), m);
        const QuadraticValue y(make_rational(small(rng), 1 + rng() % 4), make_rational(small(rng), 1 + rng() % 3), m);
        CHECK((x < y) == (x.to_double() < y.to_double() - 1e-12 ||
                          (std::abs(x.to_double() - y.to_double()) <= 1e-12 && x < y)));
        CHECK(QuadraticValue::parse(x.to_string()) == x);
    }
    CHECK(qv("sqrt(2)") < qv("3/2"));
    CHECK(qv("3/2") < qv("sqrt(3)"));
}

TEST_CASE("is_quadratic_algebraic_integer") {
    CHECK(is_quadratic_algebraic_integer(qv("6+2*sqrt(5)")));
    CHECK_FALSE(is_quadratic_algebraic_integer(qv("1/2+sqrt(2)")));
    CHECK(is_quadratic_algebraic_integer(QuadraticValue::rational(7)));
    CHECK(is_quadratic_algebraic_integer(qv("1/2+1/2*sqrt(5)")));
    CHECK_FALSE(is_quadratic_algebraic_integer(qv("1/2+1/2*sqrt(3)")));
    CHECK_FALSE(is_quadratic_algebraic_integer(QuadraticValue::rational(make_rational(1, 2))));
}

TEST_CASE("eval_at_quadratic") {
    CHECK(eval_at_quadratic(poly({-1, -1, 1}), qv("1/2+1/2*sqrt(5)")) == QuadraticValue::rational(0));
    CHECK(eval_at_quadratic(poly({-2, 0, 1}), qv("sqrt(2)")) == QuadraticValue::rational(0));
    CHECK(eval_at_quadratic(poly({0, -4, 1}), QuadraticValue::rational(4)) == QuadraticValue::rational(0));
    CHECK(eval_at_quadratic(poly({0, -4, 1}), QuadraticValue::rational(1)) == QuadraticValue::rational(-3));
}

TEST_CASE("roots_degree_le2 examples") {
    const auto c4 = roots_degree_le2(poly({0, 0, -4, 0, 1}));
    CHECK(c4.complete());
    REQUIRE(c4.roots.size() == 3);
    CHECK(c4.roots[0].value == QuadraticValue::rational(-2));
    CHECK(c4.roots[1].value == QuadraticValue::rational(0));
    CHECK(c4.roots[1].multiplicity == 2);
    CHECK(c4.roots[2].value == QuadraticValue::rational(2));

    // squares of the figure7 adjacency eigenvalues
    const RationalMatrix a = to_rational(adjacency_matrix(fixtures::figure7()));
    IntMatrix a2(8, 8);
    const RationalMatrix sq = mat_mul(a, a);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) a2(i, j) = sq(i, j).get_num().get_si();
    const auto f = roots_degree_le2(char_poly(a2));
    CHECK(f.complete());
    std::vector<std::string> values;
    for (const auto& r : f.roots) values.push_back(r.value.to_string());
    CHECK(values == std::vector<std::string>{"0", "6-2*sqrt(5)", "4", "6+2*sqrt(5)", "16"});

    const auto cubic = roots_degree_le2(poly({-2, 0, 0, 1}));
    CHECK_FALSE(cubic.complete());
    CHECK(cubic.roots.empty());
    CHECK(cubic.residual == poly({-2, 0, 0, 1}));

    CHECK_THROWS_AS(roots_degree_le2(poly({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(roots_degree_le2(poly({3})), std::invalid_argument);
}

TEST_CASE("roots_degree_le2 recovers planted factors") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        IntPolynomial p = IntPolynomial::constant(1);
        int planted = 0;
        const int linear = static_cast<int>(rng() % 4);
        for (int i = 0; i < linear; ++i) {
            p = p * poly({static_cast<long>(rng() % 13) - 6, 1});
            ++planted;
        }
        // x^2 + bx + c with positive non-square discriminant
        const int quads = static_cast<int>(rng() % 3);
        for (int i = 0; i < quads; ++i) {
            long b = static_cast<long>(rng() % 9) - 4;
            long c = static_cast<long>(rng() % 11) - 8;
            const long disc = b * b - 4 * c;
            const long r = static_cast<long>(std::lround(std::sqrt(static_cast<double>(std::max(disc, 0L)))));
            if (disc <= 0 || r * r == disc) continue;
            const int mult = 1 + static_cast<int>(rng() % 2);
            for (int k = 0; k < mult; ++k) p = p * poly({c, b, 1});
            planted += 2 * mult;
        }
        const bool with_cubic = rng() % 4 == 0;
        if (with_cubic) p = p * poly({-3, 0, 0, 1});
        if (p.degree() < 1) continue;
        const auto f = roots_degree_le2(p);
        CHECK(f.complete() == !with_cubic);
        int total = 0;
        for (const auto& r : f.roots) {
            CHECK(eval_at_quadratic(p, r.value) == QuadraticValue::rational(0));
            CHECK(r.degree == (r.value.is_rational() ? 1 : 2));
            total += r.multiplicity;
        }
        CHECK(total == planted);
        for (std::size_t i = 1; i < f.roots.size(); ++i) CHECK(f.roots[i - 1].value < f.roots[i].value);
    }
}

}
