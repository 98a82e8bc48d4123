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

#include "qwalk/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qwalk {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(int k) {
    if (k < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<Integer> c(static_cast<std::size_t>(k) + 1, 0);
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_roots(const std::vector<Integer>& roots) {
    IntPolynomial p = constant(1);
    for (const auto& r : roots) p = p * IntPolynomial({-r, 1});
    return p;
}

bool IntPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Integer IntPolynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Integer IntPolynomial::evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return IntPolynomial(std::move(d));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Integer& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Integer mag = abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool show_coeff = mag != 1 || k == 0;
        if (show_coeff) out += mag.get_str();
        if (k > 0) {
            if (show_coeff) out += '*';
            out += 'x';
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------

IntPolynomial char_poly(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
    const std::size_t n = a.rows();
    auto at = [&](std::size_t i, std::size_t j) { return Integer(static_cast<long>(a(i, j))); };

    // Coefficients leading first; the 0x0 leading block has polynomial 1.
    std::vector<Integer> poly{1};
    for (std::size_t r = 0; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R S C, ..., -R S^{r-1} C
        std::vector<Integer> t(r + 2);
        t[0] = 1;
        t[1] = -at(r, r);
        std::vector<Integer> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = at(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            Integer dot = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (a(r, i) != 0) dot += at(r, i) * v[i];
            t[k + 2] = -dot;
            if (k + 1 < r) {
                std::vector<Integer> w(r, 0);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        if (a(i, j) != 0) w[i] += at(i, j) * v[j];
                v = std::move(w);
            }
        }
        std::vector<Integer> next(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                mpz_addmul(next[i].get_mpz_t(), t[i - j].get_mpz_t(), poly[j].get_mpz_t());
        poly = std::move(next);
    }
    std::reverse(poly.begin(), poly.end());
    return IntPolynomial(std::move(poly));
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& d) {
    if (!d.is_monic()) throw std::invalid_argument("divide_exact: divisor must be monic");
    if (p.is_zero()) return IntPolynomial{};
    if (p.degree() < d.degree()) return std::nullopt;
    std::vector<Integer> rem = p.coefficients();
    const int dd = d.degree();
    std::vector<Integer> quot(static_cast<std::size_t>(p.degree() - dd + 1), 0);
    for (int k = p.degree(); k >= dd; --k) {
        const Integer c = rem[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - dd)] = c;
        for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= c * d.coefficients()[i];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

namespace {

using QPoly = std::vector<Rational>;  // ascending, trimmed

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly remainder(QPoly a, const QPoly& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

QPoly to_q(const IntPolynomial& p) {
    QPoly q;
    for (const auto& c : p.coefficients()) q.emplace_back(c);
    return q;
}

}  // namespace

IntPolynomial monic_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    QPoly x = to_q(a);
    QPoly y = to_q(b);
    if (x.empty() && y.empty()) throw std::invalid_argument("monic_gcd: both polynomials are zero");
    while (!y.empty()) {
        QPoly r = remainder(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    const Rational lead = x.back();
    std::vector<Integer> out;
    for (auto& c : x) {
        const Rational m = c / lead;
        if (m.get_den() != 1) throw std::logic_error("monic_gcd: non-integral gcd of monic inputs");
        out.push_back(m.get_num());
    }
    return IntPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------

namespace {

Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        constexpr unsigned long m = 64;
        auto f = [&](const Integer& v) {
            Integer w = v * v + c;
            mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
            return w;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    const Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::map<Integer, int> factorize(Integer n) {
    std::map<Integer, int> out;
    n = abs(n);
    for (unsigned long p = 2; p < 1000 && p * p <= n; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    factor_into(n, out);
    return out;
}

}  // namespace

std::vector<Integer> divisors(const Integer& n) {
    if (n == 0) throw std::invalid_argument("divisors: zero has infinitely many divisors");
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = ds.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

SquareFreeSplit square_free_part(const Integer& n) {
    if (n == 0) return {0, 1};
    SquareFreeSplit s{n < 0 ? Integer(-1) : Integer(1), 1};
    for (const auto& [p, e] : factorize(n)) {
        for (int k = 0; k < e / 2; ++k) s.square *= p;
        if (e % 2) s.core *= p;
    }
    return s;
}

// ---------------------------------------------------------------------------

QuadraticValue::QuadraticValue(Rational a, Rational b, const Integer& radicand) : a_(std::move(a)), b_(std::move(b)) {
    if (b_ == 0 || radicand == 0) {
        b_ = 0;
        m_ = 1;
        return;
    }
    if (radicand < 0) throw std::domain_error("QuadraticValue: negative radicand");
    const auto split = square_free_part(radicand);
    b_ *= Rational(split.square);
    m_ = split.core;
    if (m_ == 1) {
        a_ += b_;
        b_ = 0;
    }
}

double QuadraticValue::to_double() const {
    if (is_rational()) return a_.get_d();
    const mpf_class root = sqrt(mpf_class(m_, 256));
    const mpf_class v = mpf_class(a_, 256) + mpf_class(b_, 256) * root;
    return v.get_d();
}

std::string QuadraticValue::to_string() const {
    if (is_rational()) return a_.get_str();
    std::string out;
    if (a_ != 0) out = a_.get_str();
    if (b_ < 0)
        out += '-';
    else if (!out.empty())
        out += '+';
    const Rational mag = abs(b_);
    if (mag != 1) out += mag.get_str() + "*";
    out += "sqrt(" + m_.get_str() + ")";
    return out;
}

QuadraticValue QuadraticValue::parse(std::string_view text) {
    const auto bad = [&] { return std::invalid_argument("malformed quadratic value: '" + std::string(text) + "'"); };
    const auto at = text.find("sqrt(");
    if (at == std::string_view::npos) return rational(parse_rational(text));
    if (text.back() != ')') throw bad();
    const auto inside = text.substr(at + 5, text.size() - at - 6);
    if (inside.empty() || inside.find_first_not_of("0123456789") != std::string_view::npos) throw bad();
    const Integer m{std::string(inside)};

    std::string_view prefix = text.substr(0, at);
    if (!prefix.empty() && prefix.back() == '*') prefix.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = prefix.size(); i-- > 1;)
        if (prefix[i] == '+' || prefix[i] == '-') {
            split = i;
            break;
        }
    std::string_view a_text;
    std::string_view b_text = prefix;
    if (split != std::string_view::npos) {
        a_text = prefix.substr(0, split);
        b_text = prefix.substr(split);
    }
    Rational b;
    if (b_text.empty() || b_text == "+")
        b = 1;
    else if (b_text == "-")
        b = -1;
    else
        b = parse_rational(b_text);
    const Rational a = a_text.empty() ? Rational(0) : parse_rational(a_text);
    return {a, b, m};
}

namespace {

const Integer& common_radicand(const QuadraticValue& x, const QuadraticValue& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
    throw std::domain_error("QuadraticValue: operands lie in different quadratic fields");
}

int sign_of(const Rational& p, const Rational& q, const Integer& m) {
    const int sp = sgn(p);
    const int sq = sgn(q);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    return p * p > q * q * Rational(m) ? sp : sq;
}

}  // namespace

QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y)};
}

QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y) {
    return {x.a_ - y.a_, x.b_ - y.b_, common_radicand(x, y)};
}

QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y) {
    const Integer& m = common_radicand(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * Rational(m), x.a_ * y.b_ + x.b_ * y.a_, m};
}

bool operator<(const QuadraticValue& x, const QuadraticValue& y) {
    if (x.is_rational() || y.is_rational() || x.m_ == y.m_) {
        const Integer& m = x.is_rational() ? y.m_ : x.m_;
        return sign_of(x.a_ - y.a_, x.b_ - y.b_, m) < 0;
    }
    // Irrational values from distinct fields are never equal.
    const mpf_class lhs = mpf_class(x.a_, 1024) + mpf_class(x.b_, 1024) * sqrt(mpf_class(x.m_, 1024));
    const mpf_class rhs = mpf_class(y.a_, 1024) + mpf_class(y.b_, 1024) * sqrt(mpf_class(y.m_, 1024));
    return lhs < rhs;
}

bool is_quadratic_algebraic_integer(const QuadraticValue& v) {
    if (v.is_rational()) return v.a().get_den() == 1;
    return v.trace().get_den() == 1 && v.norm().get_den() == 1;
}

QuadraticValue eval_at_quadratic(const IntPolynomial& p, const QuadraticValue& v) {
    QuadraticValue acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + QuadraticValue::rational(Rational(*it));
    return acc;
}

// ---------------------------------------------------------------------------

RootFactorization roots_degree_le2(const IntPolynomial& p) {
    if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("roots_degree_le2: expects a monic non-constant polynomial");

    struct Factor {
        IntPolynomial poly;
        std::vector<QuadraticValue> roots;
    };
    std::vector<Factor> factors;

    int zeros = 0;
    while (p.coefficients()[static_cast<std::size_t>(zeros)] == 0) ++zeros;
    IntPolynomial q(std::vector<Integer>(p.coefficients().begin() + zeros, p.coefficients().end()));

    IntPolynomial s = q;
    if (q.degree() > 0) s = *divide_exact(q, monic_gcd(q, q.derivative()));

    if (s.degree() > 0) {
        for (const auto& d : divisors(s.coeff(0))) {
            for (const Integer& r : {Integer(d), Integer(-d)}) {
                if (s.degree() > 0 && s.evaluate(r) == 0) {
                    const IntPolynomial f({-r, 1});
                    s = *divide_exact(s, f);
                    factors.push_back({f, {QuadraticValue::rational(Rational(r))}});
                }
            }
        }
    }

    // x^2 + beta x + gamma divides s only if gamma | s(0), (1+beta+gamma) | s(1)
    // and (1-beta+gamma) | s(-1). 0 and +-1 are no longer roots, so those
    // values are nonzero.
    while (s.degree() >= 2) {
        const Integer s0 = s.coeff(0);
        const Integer s1 = s.evaluate(Integer(1));
        const Integer sm1 = s.evaluate(Integer(-1));
        const auto d0 = divisors(s0);
        const auto d1 = divisors(s1);
        bool found = false;
        for (std::size_t i = 0; i < d0.size() && !found; ++i) {
            for (const Integer& gamma : {d0[i], Integer(-d0[i])}) {
                for (std::size_t j = 0; j < d1.size() && !found; ++j) {
                    for (const Integer& at_one : {d1[j], Integer(-d1[j])}) {
                        const Integer beta = at_one - 1 - gamma;
                        const Integer at_minus_one = 1 - beta + gamma;
                        if (at_minus_one == 0 || !mpz_divisible_p(sm1.get_mpz_t(), at_minus_one.get_mpz_t())) continue;
                        const Integer disc = beta * beta - 4 * gamma;
                        if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t())) continue;
                        const IntPolynomial f({gamma, beta, 1});
                        auto quotient = divide_exact(s, f);
                        if (!quotient) continue;
                        s = std::move(*quotient);
                        const Rational half(1, 2);
                        const Rational centre = Rational(-beta) * half;
                        factors.push_back({f, {QuadraticValue(centre, -half, disc), QuadraticValue(centre, half, disc)}});
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
        }
        if (!found) break;
    }

    RootFactorization out;
    out.residual = s;
    if (zeros > 0) out.roots.push_back({QuadraticValue(), zeros, 1});
    for (const auto& f : factors) {
        int mult = 0;
        IntPolynomial t = q;
        while (auto next = divide_exact(t, f.poly)) {
            t = std::move(*next);
            ++mult;
        }
        for (const auto& r : f.roots) out.roots.push_back({r, mult, f.poly.degree()});
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const PolynomialRoot& x, const PolynomialRoot& y) { return x.value < y.value; });
    return out;
}

}  // namespace qwalk
