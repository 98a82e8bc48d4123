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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/polynomial.hpp"
#include "qwalk/rational.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

inline constexpr std::uint64_t kDefaultOracleCap = 10000;

// ---------------------------------------------------------------------------
// Exact oracle

enum class OracleOutcome { periodic, aperiodic, exceeds_cap };

struct OracleResult {
    OracleOutcome outcome = OracleOutcome::exceeds_cap;
    std::optional<std::uint64_t> period;
    /// How the outcome was reached: "iterated", "order-divisor",
    /// "phase-mismatch", "power-mismatch", "phase-lcm-over-cap", "cap".
    std::string method;
    std::uint64_t multiplications = 0;
};

enum class OracleMode {
    /// Phase-guided: numeric eigenphases are matched to roots of unity
    /// (1e-6); a phase with no match certifies aperiodicity at once,
    /// otherwise U^L is formed exactly for L = lcm of the matched orders and
    /// the minimal period is extracted from the prime divisors of L.
    guided,
    /// Plain repeated multiplication, U, U^2, ... up to the cap.
    iterate,
};

/// Minimal tau <= cap with U^tau = I exactly. Requires a square U.
OracleResult exact_period_oracle(const RationalMatrix& u, std::uint64_t cap = kDefaultOracleCap,
                                 OracleMode mode = OracleMode::guided);

// ---------------------------------------------------------------------------
// Trace test

struct TraceTestResult {
    bool passed = true;
    std::optional<int> failing_k;
    std::optional<Rational> failing_trace;
    std::vector<Rational> traces;  // tr(U^k) for the k examined
};

/// tr(U^k) must be an integer for every k when U is periodic; stops at the
/// first failure.
TraceTestResult trace_test(const RationalMatrix& u, int k_max = 12);

// ---------------------------------------------------------------------------
// Allowed values

/// Order of e^{i theta} when cos(theta) is one of the cosines of degree at
/// most two (1, -1, +-1/2, 0, +-sqrt2/2, +-sqrt3/2, +-(sqrt5-1)/4,
/// +-(sqrt5+1)/4); nullopt otherwise.
std::optional<int> niven_order(const QuadraticValue& cosine);

struct AllowedValue {
    QuadraticValue value;  // lambda^2
    QuadraticValue cosine;
    int order = 0;
};

/// lambda^2 values admitted for a (d0,d1)-biregular periodic walk, each with
/// the order of the eigenvalue e^{i theta}, cos(theta) = 2 lambda^2/(d0 d1) - 1.
class AllowedValueTable {
public:
    AllowedValueTable(int d0, int d1);

    int d0() const noexcept { return d0_; }
    int d1() const noexcept { return d1_; }
    const std::vector<AllowedValue>& entries() const noexcept { return entries_; }
    const AllowedValue* find(const QuadraticValue& lambda_sq) const;

private:
    int d0_;
    int d1_;
    std::vector<AllowedValue> entries_;
};

// ---------------------------------------------------------------------------
// Spectral tests

enum class Verdict { periodic, non_periodic, inconclusive };
std::string to_string(Verdict v);

struct RootClassification {
    QuadraticValue value;  // lambda^2 (bipartite test) or lambda (Grover test)
    int multiplicity = 0;
    int degree = 1;
    std::optional<int> order;  // set when the value is admitted
    bool conjugate_present = true;
};

struct SpectralVerdict {
    Verdict verdict = Verdict::inconclusive;
    int d0 = 0;
    int d1 = 0;
    IntPolynomial polynomial;  // factored polynomial
    std::vector<RootClassification> roots;
    std::string residual;      // nonempty when a higher-degree factor remains
    std::vector<std::string> notes;
};

/// Factors the characteristic polynomial of the smaller of B B^T and B^T B
/// (B the biadjacency matrix) and checks every lambda^2 against the allowed
/// table. Throws NotBipartiteError / DisconnectedError / GraphError (not
/// biregular).
SpectralVerdict spectral_test_biregular(const Graph& g);

/// Adjacency eigenvalues of a connected d-regular graph against the sets
/// {0, +-d, +-d/2} and {+-sqrt2/2 d, +-sqrt3/2 d, (1+-sqrt5)d/4,
/// (-1+-sqrt5)d/4}. The verdict is for the Grover walk on g.
SpectralVerdict grover_regular_test(const Graph& g);

struct PhasePeriod {
    std::optional<std::uint64_t> period;
    std::vector<int> orders;  // distinct, ascending, including 1 and 2 when present
    int dim_plus = 0;
    int dim_minus = 0;
};

/// lcm of the eigenvalue orders of a periodic biregular walk, including the
/// -1 eigenspace when its dimension is positive. period is empty unless the
/// spectral verdict is periodic.
PhasePeriod period_from_phases(const Graph& g);
PhasePeriod period_from_phases(const Graph& g, const SpectralVerdict& verdict);

/// Same for the Grover walk on a d-regular graph, through S(g).
PhasePeriod grover_period_from_phases(const Graph& g, const SpectralVerdict& verdict);

// ---------------------------------------------------------------------------
// States

enum class PhaseEvidence { exact_biregular, niven, continued_fraction, irrational };
std::string to_string(PhaseEvidence e);

struct PhaseClass {
    double theta = 0.0;
    PhaseEvidence evidence = PhaseEvidence::irrational;
    std::optional<int> order;  // order of e^{i theta} when theta is a rational multiple of pi
};

struct StatePeriodicity {
    bool periodic = false;
    EigenvalueSupport support;
    std::vector<PhaseClass> phases;  // distinct phases in the support
};

/// Periodicity of the state e_a e_a^T.
StatePeriodicity state_periodicity(const WalkOperator& w, int edge);

// ---------------------------------------------------------------------------
// Grover doubling

struct PeriodDoubling {
    OracleResult bipartite;
    OracleResult grover;
    bool doubling_holds = false;  // both periodic with tau_GW = 2 tau_BW, or both aperiodic
    bool grover_period_even = true;
};

PeriodDoubling grover_period_doubling(const Graph& g, std::uint64_t cap = kDefaultOracleCap);

// ---------------------------------------------------------------------------
// Aggregate verdict

enum class WalkKind { bipartite, grover };
std::string to_string(WalkKind k);

enum class Method { oracle, spectral, phases, trace };
std::string to_string(Method m);
Method parse_method(const std::string& name);

struct PeriodicityVerdict {
    Verdict verdict = Verdict::inconclusive;
    std::optional<std::uint64_t> period;
    std::optional<OracleResult> oracle;
    std::optional<SpectralVerdict> spectral;
    std::optional<PhasePeriod> phases;
    std::optional<TraceTestResult> trace;
    /// Oracle and phase periods both present and different.
    bool disagreement = false;
    std::vector<std::string> notes;
};

struct AnalysisOptions {
    WalkKind kind = WalkKind::bipartite;
    std::uint64_t cap = kDefaultOracleCap;
    std::vector<Method> methods{Method::oracle, Method::spectral, Method::phases, Method::trace};
    int trace_k_max = 12;
};

/// Runs the selected methods on the walk of g and combines them. The oracle
/// decides when it completes; otherwise a definite spectral or trace result
/// decides.
PeriodicityVerdict analyze(const Graph& g, const AnalysisOptions& options);

}  // namespace qwalk
