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

#include "qwalk/serialize.hpp"

#include <cstdio>
#include <stdexcept>

namespace qwalk {
namespace {

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key).get<T>();
}

std::optional<Verdict> parse_verdict(const std::string& s) {
    for (Verdict v : {Verdict::periodic, Verdict::non_periodic, Verdict::inconclusive})
        if (to_string(v) == s) return v;
    return std::nullopt;
}

Verdict verdict_from(const json& j) {
    const auto v = parse_verdict(j.get<std::string>());
    if (!v) throw std::invalid_argument("unknown verdict: " + j.get<std::string>());
    return *v;
}

std::string outcome_name(OracleOutcome o) {
    switch (o) {
        case OracleOutcome::periodic: return "periodic";
        case OracleOutcome::aperiodic: return "aperiodic";
        case OracleOutcome::exceeds_cap: return "exceeds-cap";
    }
    return "exceeds-cap";
}

OracleOutcome outcome_from(const std::string& s) {
    for (auto o : {OracleOutcome::periodic, OracleOutcome::aperiodic, OracleOutcome::exceeds_cap})
        if (outcome_name(o) == s) return o;
    throw std::invalid_argument("unknown oracle outcome: " + s);
}

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

json edges_json(const Graph& g) {
    json e = json::array();
    for (const auto& [u, v] : g.edges()) e.push_back({u, v});
    return e;
}

Graph graph_from(const json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph(field<int>(j, "vertices"), std::move(edges));
}

// --- verdict pieces -------------------------------------------------------

json oracle_json(const OracleResult& r) {
    return {{"outcome", outcome_name(r.outcome)},
            {"period", optional_json(r.period)},
            {"method", r.method},
            {"multiplications", r.multiplications}};
}

OracleResult oracle_from(const json& j) {
    OracleResult r;
    r.outcome = outcome_from(field<std::string>(j, "outcome"));
    r.period = optional_from<std::uint64_t>(j, "period");
    r.method = field<std::string>(j, "method");
    r.multiplications = field<std::uint64_t>(j, "multiplications");
    return r;
}

json trace_json(const TraceTestResult& t) {
    json traces = json::array();
    for (const auto& x : t.traces) traces.push_back(to_string(x));
    return {{"passed", t.passed},
            {"failing_k", optional_json(t.failing_k)},
            {"failing_trace", t.failing_trace ? json(to_string(*t.failing_trace)) : json(nullptr)},
            {"traces", traces}};
}

TraceTestResult trace_from(const json& j) {
    TraceTestResult t;
    t.passed = field<bool>(j, "passed");
    t.failing_k = optional_from<int>(j, "failing_k");
    if (const auto s = optional_from<std::string>(j, "failing_trace")) t.failing_trace = parse_rational(*s);
    for (const auto& x : j.at("traces")) t.traces.push_back(parse_rational(x.get<std::string>()));
    return t;
}

json polynomial_json(const IntPolynomial& p) {
    json c = json::array();
    for (const auto& x : p.coefficients()) c.push_back(x.get_str());
    return {{"text", p.to_string()}, {"coefficients", c}};
}

IntPolynomial polynomial_from(const json& j) {
    std::vector<Integer> c;
    for (const auto& x : j.at("coefficients")) c.emplace_back(x.get<std::string>());
    return IntPolynomial(std::move(c));
}

json spectral_json(const SpectralVerdict& s) {
    json roots = json::array();
    for (const auto& r : s.roots)
        roots.push_back({{"value", r.value.to_string()},
                         {"approx", r.value.to_double()},
                         {"multiplicity", r.multiplicity},
                         {"degree", r.degree},
                         {"order", optional_json(r.order)},
                         {"conjugate_present", r.conjugate_present}});
    return {{"verdict", to_string(s.verdict)}, {"d0", s.d0},         {"d1", s.d1},
            {"polynomial", polynomial_json(s.polynomial)},        {"roots", roots},
            {"residual", s.residual},          {"notes", s.notes}};
}

SpectralVerdict spectral_from(const json& j) {
    SpectralVerdict s;
    s.verdict = verdict_from(j.at("verdict"));
    s.d0 = field<int>(j, "d0");
    s.d1 = field<int>(j, "d1");
    s.polynomial = polynomial_from(j.at("polynomial"));
    for (const auto& r : j.at("roots")) {
        RootClassification c;
        c.value = QuadraticValue::parse(field<std::string>(r, "value"));
        c.multiplicity = field<int>(r, "multiplicity");
        c.degree = field<int>(r, "degree");
        c.order = optional_from<int>(r, "order");
        c.conjugate_present = field<bool>(r, "conjugate_present");
        s.roots.push_back(std::move(c));
    }
    s.residual = field<std::string>(j, "residual");
    s.notes = field<std::vector<std::string>>(j, "notes");
    return s;
}

json phases_json(const PhasePeriod& p) {
    return {{"period", optional_json(p.period)},
            {"orders", p.orders},
            {"dim_plus", p.dim_plus},
            {"dim_minus", p.dim_minus}};
}

PhasePeriod phases_from(const json& j) {
    PhasePeriod p;
    p.period = optional_from<std::uint64_t>(j, "period");
    p.orders = field<std::vector<int>>(j, "orders");
    p.dim_plus = field<int>(j, "dim_plus");
    p.dim_minus = field<int>(j, "dim_minus");
    return p;
}

json verdict_json(const PeriodicityVerdict& v) {
    return {{"verdict", to_string(v.verdict)},
            {"period", optional_json(v.period)},
            {"disagreement", v.disagreement},
            {"oracle", v.oracle ? oracle_json(*v.oracle) : json(nullptr)},
            {"spectral", v.spectral ? spectral_json(*v.spectral) : json(nullptr)},
            {"phases", v.phases ? phases_json(*v.phases) : json(nullptr)},
            {"trace", v.trace ? trace_json(*v.trace) : json(nullptr)},
            {"notes", v.notes}};
}

PeriodicityVerdict verdict_from_json(const json& j) {
    PeriodicityVerdict v;
    v.verdict = verdict_from(j.at("verdict"));
    v.period = optional_from<std::uint64_t>(j, "period");
    v.disagreement = field<bool>(j, "disagreement");
    if (!j.at("oracle").is_null()) v.oracle = oracle_from(j.at("oracle"));
    if (!j.at("spectral").is_null()) v.spectral = spectral_from(j.at("spectral"));
    if (!j.at("phases").is_null()) v.phases = phases_from(j.at("phases"));
    if (!j.at("trace").is_null()) v.trace = trace_from(j.at("trace"));
    v.notes = field<std::vector<std::string>>(j, "notes");
    return v;
}

json spectrum_json(const EigenphaseSet& s) {
    json phases = json::array();
    for (const auto& p : s.phases)
        phases.push_back({{"theta", p.theta}, {"cos", p.cosine}, {"multiplicity", p.multiplicity}});
    return {{"plus_one", s.plus_one}, {"minus_one", s.minus_one}, {"phases", phases}};
}

EigenphaseSet spectrum_from(const json& j) {
    EigenphaseSet s;
    s.plus_one = field<int>(j, "plus_one");
    s.minus_one = field<int>(j, "minus_one");
    for (const auto& p : j.at("phases"))
        s.phases.push_back({field<double>(p, "theta"), field<double>(p, "cos"), field<int>(p, "multiplicity")});
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------

json matrix_to_json(const RationalMatrix& m) {
    json entries = json::array();
    for (const auto& x : m.values()) entries.push_back(to_string(x));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RationalMatrix matrix_from_json(const json& j) {
    const auto rows = field<std::size_t>(j, "rows");
    const auto cols = field<std::size_t>(j, "cols");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw std::invalid_argument("matrix entry count does not match its shape");
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) m.data()[i] = parse_rational(entries[i].get<std::string>());
    return m;
}

json to_json(const WalkOperator& w) {
    return {{"kind", "bipartite"},
            {"dimension", w.dimension()},
            {"vertices", w.graph.vertex_count()},
            {"edges", edges_json(w.graph)},
            {"c0", w.parts.c0},
            {"c1", w.parts.c1},
            {"d0", optional_json(w.profile.d0)},
            {"d1", optional_json(w.profile.d1)},
            {"P", matrix_to_json(w.P)},
            {"Q", matrix_to_json(w.Q)},
            {"U", matrix_to_json(w.U)}};
}

json to_json(const ArcWalkOperator& w) {
    json arcs = json::array();
    for (const auto& a : w.arcs) arcs.push_back({a.head, a.tail});
    return {{"kind", "grover"},
            {"dimension", w.dimension()},
            {"vertices", w.graph.vertex_count()},
            {"edges", edges_json(w.graph)},
            {"arcs", arcs},
            {"R", matrix_to_json(w.R)},
            {"K", matrix_to_json(w.K)},
            {"U", matrix_to_json(w.U)}};
}

WalkOperator walk_from_json(const json& j) {
    if (field<std::string>(j, "kind") != "bipartite") throw std::invalid_argument("not a bipartite walk document");
    WalkOperator w;
    w.graph = graph_from(j);
    std::vector<int> side(static_cast<std::size_t>(w.graph.vertex_count()), 0);
    for (int v : field<std::vector<int>>(j, "c1")) side.at(static_cast<std::size_t>(v)) = 1;
    w.parts = Bipartition::from_sides(std::move(side));
    if (w.parts.c0 != field<std::vector<int>>(j, "c0")) throw std::invalid_argument("c0 and c1 do not partition the vertices");
    w.profile = {optional_from<int>(j, "d0"), optional_from<int>(j, "d1")};
    w.P = matrix_from_json(j.at("P"));
    w.Q = matrix_from_json(j.at("Q"));
    w.U = matrix_from_json(j.at("U"));
    return w;
}

ArcWalkOperator arc_walk_from_json(const json& j) {
    if (field<std::string>(j, "kind") != "grover") throw std::invalid_argument("not a Grover walk document");
    ArcWalkOperator w;
    w.graph = graph_from(j);
    for (const auto& a : j.at("arcs")) w.arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    w.R = matrix_from_json(j.at("R"));
    w.K = matrix_from_json(j.at("K"));
    w.U = matrix_from_json(j.at("U"));
    return w;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json to_json(const AnalysisReport& r) {
    json j = {{"input", r.input},
              {"transform", r.transform},
              {"kind", to_string(r.kind)},
              {"graph_hash", hash_hex(r.graph_hash)},
              {"vertices", r.vertices},
              {"edges", r.edges},
              {"dimension", r.dimension},
              {"spectrum", spectrum_json(r.spectrum.numeric)},
              {"result", verdict_json(r.verdict)}};
    if (r.seconds) j["seconds"] = *r.seconds;
    return j;
}

AnalysisReport report_from_json(const json& j) {
    AnalysisReport r;
    r.input = field<std::string>(j, "input");
    r.transform = field<std::string>(j, "transform");
    const auto kind = field<std::string>(j, "kind");
    if (kind != "bipartite" && kind != "grover") throw std::invalid_argument("unknown walk kind: " + kind);
    r.kind = kind == "bipartite" ? WalkKind::bipartite : WalkKind::grover;
    r.graph_hash = std::stoull(field<std::string>(j, "graph_hash"), nullptr, 16);
    r.vertices = field<int>(j, "vertices");
    r.edges = field<int>(j, "edges");
    r.dimension = field<std::size_t>(j, "dimension");
    r.spectrum.numeric = spectrum_from(j.at("spectrum"));
    r.verdict = verdict_from_json(j.at("result"));
    r.seconds = optional_from<double>(j, "seconds");
    return r;
}

}  // namespace qwalk
