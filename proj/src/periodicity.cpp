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

#include "qwalk/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qwalk {
namespace {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Order n of the root of unity whose cosine is nearest to c among orders
// with phi(n) <= dim, when within tol.
std::optional<int> nearest_root_of_unity(double c, int dim, double tol) {
    if (std::fabs(c - 1.0) < tol) return 1;
    if (std::fabs(c + 1.0) < tol) return 2;
    std::optional<int> best;
    double best_gap = tol;
    const int limit = 2 * dim * dim + 6;
    for (int n = 3; n <= limit; ++n) {
        if (euler_phi(n) > dim) continue;
        for (int k = 1; 2 * k < n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            const double gap = std::fabs(std::cos(2.0 * M_PI * k / n) - c);
            if (gap < best_gap) {
                best_gap = gap;
                best = n;
            }
        }
    }
    return best;
}

struct CountingPow {
    std::uint64_t multiplications = 0;

    RationalMatrix operator()(const RationalMatrix& a, std::uint64_t k) {
        RationalMatrix result = RationalMatrix::identity(a.rows());
        RationalMatrix base = a;
        bool first = true;
        while (k > 0) {
            if (k & 1U) {
                if (first) {
                    result = base;
                    first = false;
                } else {
                    result = mat_mul(result, base);
                    ++multiplications;
                }
            }
            k >>= 1U;
            if (k > 0) {
                base = mat_mul(base, base);
                ++multiplications;
            }
        }
        return result;
    }
};

OracleResult iterate_oracle(const RationalMatrix& u, std::uint64_t cap) {
    OracleResult r;
    r.method = "iterated";
    RationalMatrix m = u;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (is_identity(m)) {
            r.outcome = OracleOutcome::periodic;
            r.period = k;
            return r;
        }
        if (k < cap) {
            m = mat_mul(m, u);
            ++r.multiplications;
        }
    }
    r.outcome = OracleOutcome::exceeds_cap;
    r.method = "cap";
    return r;
}

}  // namespace

OracleResult exact_period_oracle(const RationalMatrix& u, std::uint64_t cap, OracleMode mode) {
    if (!u.is_square()) throw std::invalid_argument("exact_period_oracle: matrix is not square");
    if (cap == 0) throw std::invalid_argument("exact_period_oracle: cap must be positive");
    if (mode == OracleMode::iterate || u.rows() == 0) return iterate_oracle(u, cap);

    EigenphaseSet spectrum;
    try {
        spectrum = numeric_walk_spectrum(to_real(u));
    } catch (const std::logic_error&) {
        return iterate_oracle(u, cap);
    }

    OracleResult r;
    const int dim = static_cast<int>(u.rows());
    std::uint64_t lcm = 1;
    if (spectrum.minus_one > 0) lcm = 2;
    for (const auto& phase : spectrum.phases) {
        const auto n = nearest_root_of_unity(phase.cosine, dim, 1e-6);
        if (!n) {
            r.outcome = OracleOutcome::aperiodic;
            r.method = "phase-mismatch";
            return r;
        }
        lcm = std::lcm(lcm, static_cast<std::uint64_t>(*n));
        if (lcm > cap) break;
    }
    if (lcm > cap) {
        r.outcome = OracleOutcome::exceeds_cap;
        r.method = "phase-lcm-over-cap";
        return r;
    }

    CountingPow power;
    if (!is_identity(power(u, lcm))) {
        r.outcome = OracleOutcome::aperiodic;
        r.method = "power-mismatch";
        r.multiplications = power.multiplications;
        return r;
    }
    // The order divides lcm; strip prime factors while the power stays I.
    std::uint64_t tau = lcm;
    for (std::uint64_t p : prime_divisors(lcm))
        while (tau % p == 0 && is_identity(power(u, tau / p))) tau /= p;
    r.outcome = OracleOutcome::periodic;
    r.period = tau;
    r.method = "order-divisor";
    r.multiplications = power.multiplications;
    return r;
}

TraceTestResult trace_test(const RationalMatrix& u, int k_max) {
    if (!u.is_square()) throw std::invalid_argument("trace_test: matrix is not square");
    TraceTestResult r;
    RationalMatrix m = u;
    for (int k = 1; k <= k_max; ++k) {
        const Rational t = trace(m);
        r.traces.push_back(t);
        if (!is_integer(t)) {
            r.passed = false;
            r.failing_k = k;
            r.failing_trace = t;
            return r;
        }
        if (k < k_max) m = mat_mul(m, u);
    }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

struct NivenEntry {
    QuadraticValue cosine;
    int order;
};

const std::vector<NivenEntry>& niven_table() {
    static const std::vector<NivenEntry> table = [] {
        const Rational half(1, 2);
        const Rational quarter(1, 4);
        return std::vector<NivenEntry>{
            {QuadraticValue::rational(1), 1},
            {QuadraticValue::rational(-1), 2},
            {QuadraticValue::rational(half), 6},
            {QuadraticValue::rational(-half), 3},
            {QuadraticValue::rational(0), 4},
            {QuadraticValue(0, half, 2), 8},
            {QuadraticValue(0, -half, 2), 8},
            {QuadraticValue(0, half, 3), 12},
            {QuadraticValue(0, -half, 3), 12},
            {QuadraticValue(-quarter, quarter, 5), 5},   // cos(2pi/5)
            {QuadraticValue(quarter, -quarter, 5), 10},  // cos(3pi/5)
            {QuadraticValue(quarter, quarter, 5), 10},   // cos(pi/5)
            {QuadraticValue(-quarter, -quarter, 5), 5},  // cos(4pi/5)
        };
    }();
    return table;
}

}  // namespace

std::optional<int> niven_order(const QuadraticValue& cosine) {
    for (const auto& e : niven_table())
        if (e.cosine == cosine) return e.order;
    return std::nullopt;
}

AllowedValueTable::AllowedValueTable(int d0, int d1) : d0_(d0), d1_(d1) {
    if (d0 < 1 || d1 < 1) throw std::invalid_argument("AllowedValueTable: degrees must be positive");
    const Rational prod = static_cast<long>(d0) * static_cast<long>(d1);
    for (const auto& e : niven_table()) {
        // lambda^2 = (1 + cos) / 2 * d0 d1
        const Rational a = (1 + e.cosine.a()) / 2 * prod;
        const Rational b = e.cosine.b() / 2 * prod;
        entries_.push_back({QuadraticValue(a, b, e.cosine.radicand()), e.cosine, e.order});
    }
}

const AllowedValue* AllowedValueTable::find(const QuadraticValue& lambda_sq) const {
    for (const auto& e : entries_)
        if (e.value == lambda_sq) return &e;
    return nullptr;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::periodic: return "periodic";
        case Verdict::non_periodic: return "non-periodic";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

// Classifies the roots of poly; value_of maps a root to the table key.
template <class Lookup>
SpectralVerdict classify(const IntPolynomial& poly, Lookup&& lookup) {
    SpectralVerdict out;
    out.polynomial = poly;
    const auto f = roots_degree_le2(poly);
    bool all_allowed = true;
    for (const auto& root : f.roots) {
        RootClassification c;
        c.value = root.value;
        c.multiplicity = root.multiplicity;
        c.degree = root.degree;
        c.order = lookup(root.value);
        if (root.degree == 2) {
            const auto conj = root.value.conjugate();
            c.conjugate_present = std::any_of(f.roots.begin(), f.roots.end(), [&](const PolynomialRoot& r) {
                return r.value == conj && r.multiplicity == root.multiplicity;
            });
        }
        if (!c.order || !c.conjugate_present) all_allowed = false;
        out.roots.push_back(std::move(c));
    }
    if (!all_allowed) {
        out.verdict = Verdict::non_periodic;
    } else if (!f.complete()) {
        out.verdict = Verdict::inconclusive;
    } else {
        out.verdict = Verdict::periodic;
    }
    if (!f.complete()) {
        out.residual = f.residual.to_string();
        out.notes.push_back("factor of degree above two: " + out.residual);
    }
    return out;
}

IntMatrix int_gram(const IntMatrix& a, bool rows) {
    // rows: A A^T, otherwise A^T A
    const std::size_t n = rows ? a.rows() : a.cols();
    const std::size_t inner = rows ? a.cols() : a.rows();
    IntMatrix g(n, n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long long s = 0;
            for (std::size_t k = 0; k < inner; ++k) s += rows ? a(i, k) * a(j, k) : a(k, i) * a(k, j);
            g(i, j) = s;
        }
    return g;
}

}  // namespace

SpectralVerdict spectral_test_biregular(const Graph& g) {
    const Bipartition b = bipartition(g);
    const DegreeProfile prof = degree_profile(g, b);
    if (!prof.biregular()) throw GraphError("graph is not biregular");
    const IntMatrix bi = biadjacency_matrix(g, b);
    const IntMatrix block = int_gram(bi, bi.rows() <= bi.cols());
    const AllowedValueTable table(*prof.d0, *prof.d1);

    SpectralVerdict out = classify(char_poly(block), [&](const QuadraticValue& v) -> std::optional<int> {
        if (const auto* e = table.find(v)) return e->order;
        return std::nullopt;
    });
    out.d0 = *prof.d0;
    out.d1 = *prof.d1;
    if (prof.product() % 4 != 0) {
        for (const auto& r : out.roots) {
            const Rational mu = r.value.a() / Rational(static_cast<long>(prof.product()));
            if (r.degree == 1 && mu.get_den() != 1) {
                out.notes.push_back("d0*d1 = " + std::to_string(prof.product()) +
                                    " is not divisible by 4 although lambda^2 = " + r.value.to_string() +
                                    " is a fractional table entry; the verdict follows the value table");
                break;
            }
        }
    }
    return out;
}

SpectralVerdict grover_regular_test(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedError();
    const auto d = g.regular_degree();
    if (!d) throw GraphError("graph is not regular");
    // lambda is admitted exactly when lambda + d is a table entry for S(g),
    // which is (2,d)-biregular; that reproduces {0, +-d, +-d/2} and
    // {+-sqrt2/2 d, +-sqrt3/2 d, (1+-sqrt5)d/4, (-1+-sqrt5)d/4}.
    const AllowedValueTable table(2, *d);
    const QuadraticValue shift = QuadraticValue::rational(*d);
    SpectralVerdict out = classify(char_poly(adjacency_matrix(g)), [&](const QuadraticValue& v) -> std::optional<int> {
        if (const auto* e = table.find(v + shift)) return e->order;
        return std::nullopt;
    });
    out.d0 = *d;
    out.d1 = *d;
    return out;
}

namespace {

PhasePeriod assemble(const SpectralVerdict& verdict, const EigenspaceDims& dims,
                     const std::function<bool(const RootClassification&)>& interior) {
    PhasePeriod p;
    p.dim_plus = dims.plus;
    p.dim_minus = dims.minus;
    if (verdict.verdict != Verdict::periodic) return p;
    std::set<int> orders;
    if (dims.plus > 0) orders.insert(1);
    if (dims.minus > 0) orders.insert(2);
    for (const auto& r : verdict.roots)
        if (interior(r)) orders.insert(*r.order);
    p.orders.assign(orders.begin(), orders.end());
    std::uint64_t l = 1;
    for (int o : p.orders) l = std::lcm(l, static_cast<std::uint64_t>(o));
    p.period = l;
    return p;
}

}  // namespace

PhasePeriod period_from_phases(const Graph& g) { return period_from_phases(g, spectral_test_biregular(g)); }

PhasePeriod period_from_phases(const Graph& g, const SpectralVerdict& verdict) {
    const Rational top = static_cast<long>(verdict.d0) * static_cast<long>(verdict.d1);
    return assemble(verdict, pm1_eigenspace_dims(g, bipartition(g)), [&](const RootClassification& r) {
        return !(r.value.is_rational() && (r.value.a() == 0 || r.value.a() == top));
    });
}

PhasePeriod grover_period_from_phases(const Graph& g, const SpectralVerdict& verdict) {
    const SplitGraph s = subdivision(g);
    const Rational d = verdict.d0;
    return assemble(verdict, pm1_eigenspace_dims(s.graph, s.parts), [&](const RootClassification& r) {
        return !(r.value.is_rational() && (r.value.a() == d || r.value.a() == -d));
    });
}

// ---------------------------------------------------------------------------

std::string to_string(PhaseEvidence e) {
    switch (e) {
        case PhaseEvidence::exact_biregular: return "exact";
        case PhaseEvidence::niven: return "niven";
        case PhaseEvidence::continued_fraction: return "continued-fraction";
        case PhaseEvidence::irrational: return "irrational";
    }
    return "irrational";
}

namespace {

// Rational p/q (q <= max_den) with |x - p/q| < tol from the convergents of x.
std::optional<std::pair<long, long>> small_rational(double x, long max_den, double tol) {
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int step = 0; step < 64; ++step) {
        const double a = std::floor(r);
        const long ai = static_cast<long>(a);
        const long h2 = ai * h1 + h0;
        const long k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        if (std::fabs(x - static_cast<double>(h2) / static_cast<double>(k2)) < tol) return std::make_pair(h2, k2);
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        const double frac = r - a;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    return std::nullopt;
}

}  // namespace

StatePeriodicity state_periodicity(const WalkOperator& w, int edge) {
    StatePeriodicity out;
    const auto idempotents = spectral_idempotents(w);
    out.support = eigenvalue_support(idempotents, edge);

    std::vector<std::pair<double, int>> exact;  // (cos theta, order or 0)
    if (w.profile.biregular()) {
        const auto verdict = spectral_test_biregular(w.graph);
        const Rational top = static_cast<long>(w.profile.product());
        for (const auto& r : verdict.roots) {
            const QuadraticValue cosine(2 * r.value.a() / top - 1, 2 * r.value.b() / top, r.value.radicand());
            exact.emplace_back(cosine.to_double(), niven_order(cosine).value_or(0));
        }
    }

    std::vector<double> thetas;
    for (const auto& [r, s] : out.support.pairs) {
        thetas.push_back(r);
        thetas.push_back(s);
    }
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end(),
                             [](double x, double y) { return std::fabs(x - y) < kSpectralTolerance; }),
                 thetas.end());

    out.periodic = true;
    for (double theta : thetas) {
        PhaseClass pc;
        pc.theta = theta;
        const double c = std::cos(theta);
        bool decided = false;
        for (const auto& [value, order] : exact) {
            if (std::fabs(value - c) < kSpectralTolerance) {
                pc.evidence = PhaseEvidence::exact_biregular;
                if (order > 0) pc.order = order;
                decided = true;
                break;
            }
        }
        if (!decided) {
            for (const auto& e : niven_table())
                if (std::fabs(e.cosine.to_double() - c) < kSpectralTolerance) {
                    pc.evidence = PhaseEvidence::niven;
                    pc.order = e.order;
                    decided = true;
                    break;
                }
        }
        if (!decided) {
            if (const auto pq = small_rational(std::fabs(theta) / M_PI, 48, kSpectralTolerance)) {
                const long p = pq->first;
                const long q = pq->second;
                pc.evidence = PhaseEvidence::continued_fraction;
                pc.order = static_cast<int>(2 * q / std::gcd(2 * q, p));
            } else {
                pc.evidence = PhaseEvidence::irrational;
            }
        }
        if (!pc.order) out.periodic = false;
        out.phases.push_back(pc);
    }
    return out;
}

// ---------------------------------------------------------------------------

PeriodDoubling grover_period_doubling(const Graph& g, std::uint64_t cap) {
    PeriodDoubling out;
    out.bipartite = exact_period_oracle(build_bipartite_walk(g).U, cap);
    out.grover = exact_period_oracle(build_grover_walk(g).U, 2 * cap);
    const bool bw = out.bipartite.outcome == OracleOutcome::periodic;
    const bool gw = out.grover.outcome == OracleOutcome::periodic;
    if (bw && gw) {
        out.doubling_holds = *out.grover.period == 2 * *out.bipartite.period;
        out.grover_period_even = *out.grover.period % 2 == 0;
    } else {
        out.doubling_holds = out.bipartite.outcome == OracleOutcome::aperiodic &&
                             out.grover.outcome == OracleOutcome::aperiodic;
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string to_string(WalkKind k) { return k == WalkKind::bipartite ? "bipartite" : "grover"; }

std::string to_string(Method m) {
    switch (m) {
        case Method::oracle: return "oracle";
        case Method::spectral: return "spectral";
        case Method::phases: return "phases";
        case Method::trace: return "trace";
    }
    return "oracle";
}

Method parse_method(const std::string& name) {
    for (Method m : {Method::oracle, Method::spectral, Method::phases, Method::trace})
        if (to_string(m) == name) return m;
    throw std::invalid_argument("unknown method: " + name);
}

PeriodicityVerdict analyze(const Graph& g, const AnalysisOptions& options) {
    auto wants = [&](Method m) {
        return std::find(options.methods.begin(), options.methods.end(), m) != options.methods.end();
    };
    const bool bipartite = options.kind == WalkKind::bipartite;
    const RationalMatrix u = bipartite ? build_bipartite_walk(g).U : build_grover_walk(g).U;

    PeriodicityVerdict v;
    if (wants(Method::trace)) v.trace = trace_test(u, options.trace_k_max);
    if (wants(Method::oracle)) v.oracle = exact_period_oracle(u, options.cap);

    if (wants(Method::spectral) || wants(Method::phases)) {
        try {
            v.spectral = bipartite ? spectral_test_biregular(g) : grover_regular_test(g);
        } catch (const GraphError&) {
            v.notes.push_back(bipartite ? "spectral test skipped: graph is not biregular"
                                        : "spectral test skipped: graph is not regular");
        }
        if (v.spectral && wants(Method::phases))
            v.phases = bipartite ? period_from_phases(g, *v.spectral) : grover_period_from_phases(g, *v.spectral);
        if (v.spectral && !wants(Method::spectral) && !v.phases) v.spectral.reset();
    }

    std::optional<Verdict> oracle_verdict;
    if (v.oracle && v.oracle->outcome == OracleOutcome::periodic) oracle_verdict = Verdict::periodic;
    if (v.oracle && v.oracle->outcome == OracleOutcome::aperiodic) oracle_verdict = Verdict::non_periodic;
    Verdict spectral_verdict = Verdict::inconclusive;
    if (v.spectral) spectral_verdict = v.spectral->verdict;
    const bool spectral_definite = spectral_verdict != Verdict::inconclusive;
    const bool trace_failed = v.trace && !v.trace->passed;

    if (v.oracle && v.oracle->period && v.phases && v.phases->period && *v.oracle->period != *v.phases->period) {
        v.disagreement = true;
        v.notes.push_back("oracle period " + std::to_string(*v.oracle->period) + " differs from phase period " +
                          std::to_string(*v.phases->period));
    }
    if (oracle_verdict && spectral_definite && *oracle_verdict != spectral_verdict) {
        v.disagreement = true;
        v.notes.push_back("oracle verdict " + to_string(*oracle_verdict) + " differs from spectral verdict " +
                          to_string(spectral_verdict));
    }
    if (trace_failed && oracle_verdict == Verdict::periodic) {
        v.disagreement = true;
        v.notes.push_back("trace test failed on a walk the oracle found periodic");
    }

    if (oracle_verdict) {
        v.verdict = *oracle_verdict;
        v.period = v.oracle->period;
    } else if (spectral_definite) {
        v.verdict = spectral_verdict;
        if (v.phases) v.period = v.phases->period;
    } else if (trace_failed) {
        v.verdict = Verdict::non_periodic;
    } else {
        v.verdict = Verdict::inconclusive;
    }
    if (v.oracle && v.oracle->outcome == OracleOutcome::exceeds_cap)
        v.notes.push_back("oracle exceeded the cap of " + std::to_string(options.cap));
    return v;
}

}  // namespace qwalk
