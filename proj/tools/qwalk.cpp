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

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "qwalk/fixtures.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/periodicity.hpp"
#include "qwalk/scan.hpp"
#include "qwalk/serialize.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace {

using namespace qwalk;

constexpr int kExitPeriodic = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNonPeriodic = 3;
constexpr int kExitInconclusive = 4;
constexpr int kExitDisagreement = 5;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Input {
    std::string name;
    Graph graph;
};

Input read_input(const std::string& source) {
    if (source == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return {"-", parse_graph(text)};
    }
    if (std::ifstream file(source); file) {
        std::stringstream buf;
        buf << file.rdbuf();
        return {source, parse_graph(buf.str())};
    }
    if (auto g = fixtures::resolve(source)) return {source, std::move(*g)};
    throw UsageError("no such file or fixture: " + source);
}

std::string transform_name(const std::string& t) {
    if (t.empty() || t == "none") return "none";
    if (t == "s" || t == "subdivide") return "subdivide";
    if (t == "d" || t == "doublecover") return "doublecover";
    throw UsageError("unknown transform: " + t);
}

Graph apply_transform(const Graph& g, const std::string& transform) {
    if (transform == "subdivide") return subdivision(g).graph;
    if (transform == "doublecover") {
        if (try_bipartition(g)) throw UsageError("doublecover needs a non-bipartite graph");
        return bipartite_double_cover(g).graph;
    }
    return g;
}

WalkKind parse_kind(const std::string& k) {
    if (k == "b" || k == "bipartite") return WalkKind::bipartite;
    if (k == "g" || k == "grover") return WalkKind::grover;
    throw UsageError("unknown walk kind: " + k);
}

int exit_code(const PeriodicityVerdict& v) {
    if (v.disagreement) return kExitDisagreement;
    switch (v.verdict) {
        case Verdict::periodic: return kExitPeriodic;
        case Verdict::non_periodic: return kExitNonPeriodic;
        case Verdict::inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad integer list: " + text);
        }
    }
    return out;
}

int parse_int(const std::string& text) {
    const auto v = parse_int_list(text);
    if (v.size() != 1) throw UsageError("expected an integer: " + text);
    return v.front();
}

// --- pretty printing -----------------------------------------------------

void print_matrix(const char* name, const RationalMatrix& m) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (const auto& x : m.values()) {
        cells.push_back(to_string(x));
        width = std::max(width, cells.back().size());
    }
    std::printf("%s (%zux%zu)\n", name, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) std::printf(" %*s", static_cast<int>(width), cells[i * m.cols() + j].c_str());
        std::printf("\n");
    }
}

void print_report(const AnalysisReport& r) {
    const auto& v = r.verdict;
    std::printf("%-14s %s\n", "input", r.input.c_str());
    std::printf("%-14s %s\n", "transform", r.transform.c_str());
    std::printf("%-14s %s\n", "walk", to_string(r.kind).c_str());
    std::printf("%-14s %d vertices, %d edges, operator %zux%zu\n", "graph", r.vertices, r.edges, r.dimension, r.dimension);
    std::printf("%-14s %s\n", "verdict", to_string(v.verdict).c_str());
    if (v.period) std::printf("%-14s %llu\n", "period", static_cast<unsigned long long>(*v.period));
    if (v.oracle) {
        std::printf("%-14s %s", "oracle", v.oracle->method.c_str());
        if (v.oracle->period) std::printf(", tau = %llu", static_cast<unsigned long long>(*v.oracle->period));
        std::printf("\n");
    }
    if (v.trace) {
        if (v.trace->passed)
            std::printf("%-14s integral for k <= %zu\n", "trace", v.trace->traces.size());
        else
            std::printf("%-14s fails at k = %d with %s\n", "trace", *v.trace->failing_k,
                        to_string(*v.trace->failing_trace).c_str());
    }
    if (v.spectral) {
        std::printf("%-14s %s (d0 = %d, d1 = %d)\n", "spectral", to_string(v.spectral->verdict).c_str(), v.spectral->d0,
                    v.spectral->d1);
        std::printf("  %-20s %5s %6s\n", "value", "mult", "order");
        for (const auto& root : v.spectral->roots)
            std::printf("  %-20s %5d %6s\n", root.value.to_string().c_str(), root.multiplicity,
                        root.order ? std::to_string(*root.order).c_str() : "-");
    }
    if (v.phases && v.phases->period)
        std::printf("%-14s %llu\n", "phase period", static_cast<unsigned long long>(*v.phases->period));
    for (const auto& n : v.notes) std::printf("note: %s\n", n.c_str());
    if (v.spectral)
        for (const auto& n : v.spectral->notes) std::printf("note: %s\n", n.c_str());
    if (r.seconds) std::printf("%-14s %.3f s\n", "time", *r.seconds);
}

// --- commands -------------------------------------------------------------

int cmd_gen(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw UsageError("family " + family + " takes " + std::to_string(n) + " parameter(s)");
    };
    Graph g;
    if (family == "cycle") {
        need(1);
        g = cycle(parse_int(params[0]));
    } else if (family == "complete_bipartite") {
        need(2);
        g = complete_bipartite(parse_int(params[0]), parse_int(params[1]));
    } else if (family == "star") {
        need(1);
        g = star(parse_int(params[0]));
    } else if (family == "complete") {
        need(1);
        g = complete(parse_int(params[0]));
    } else if (family == "circulant") {
        need(2);
        const int n = parse_int(params[0]);
        g = circulant(n, symmetric_connection_set(n, parse_int_list(params[1])));
    } else if (family == "random") {
        if (params.size() != 1 && params.size() != 2) throw UsageError("family random takes n [p]");
        g = random_connected(parse_int(params[0]), params.size() == 2 ? std::stod(params[1]) : 0.3, seed);
    } else {
        need(0);
        const auto names = fixtures::names();
        if (std::find(names.begin(), names.end(), family) == names.end()) throw UsageError("unknown family: " + family);
        g = *fixtures::resolve(family);
    }
    std::cout << format_graph(g);
    return 0;
}

int cmd_walk(const std::string& source, const std::string& kind_text, const std::string& transform_text, bool pretty) {
    const Input in = read_input(source);
    const std::string transform = transform_name(transform_text);
    const Graph g = apply_transform(in.graph, transform);
    if (parse_kind(kind_text) == WalkKind::bipartite) {
        const auto w = build_bipartite_walk(g);
        if (pretty) {
            print_matrix("P", w.P);
            print_matrix("Q", w.Q);
            print_matrix("U", w.U);
        } else {
            std::cout << to_json(w).dump() << '\n';
        }
    } else {
        const auto w = build_grover_walk(g);
        if (pretty) {
            print_matrix("K", w.K);
            print_matrix("U", w.U);
        } else {
            std::cout << to_json(w).dump() << '\n';
        }
    }
    return 0;
}

AnalysisReport make_report(const std::string& name, const std::string& transform, const Graph& g,
                           const AnalysisOptions& options, bool timing) {
    const auto t0 = std::chrono::steady_clock::now();
    AnalysisReport r;
    r.input = name;
    r.transform = transform;
    r.kind = options.kind;
    r.graph_hash = g.hash();
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    const RationalMatrix u =
        options.kind == WalkKind::bipartite ? build_bipartite_walk(g).U : build_grover_walk(g).U;
    r.dimension = u.rows();
    r.spectrum.numeric = numeric_walk_spectrum(to_real(u));
    r.verdict = analyze(g, options);
    if (timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

int cmd_period(const std::string& source, const std::string& kind_text, const std::string& transform_text,
               std::uint64_t cap, const std::string& methods, bool pretty, bool timing) {
    const Input in = read_input(source);
    const std::string transform = transform_name(transform_text);
    const Graph g = apply_transform(in.graph, transform);
    AnalysisOptions options;
    options.kind = parse_kind(kind_text);
    options.cap = cap;
    if (!methods.empty()) {
        options.methods.clear();
        std::stringstream ss(methods);
        std::string m;
        while (std::getline(ss, m, ',')) {
            try {
                options.methods.push_back(parse_method(m));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
    }
    const AnalysisReport report = make_report(in.name, transform, g, options, timing);
    if (pretty)
        print_report(report);
    else
        std::cout << to_json(report).dump() << '\n';
    if (report.verdict.disagreement) {
        std::cerr << "internal disagreement between methods:\n" << to_json(report).dump(2) << '\n';
    }
    return exit_code(report.verdict);
}

int cmd_scan(int max_edges, std::uint64_t cap, bool full, bool pretty) {
    if (max_edges < 1 || max_edges > kMaxScanEdges)
        throw UsageError("--max-edges must lie in 1.." + std::to_string(kMaxScanEdges));
    ScanOptions options;
    options.cap = cap;
    options.trace_filter = !full;
    bool disagreement = false;
    if (pretty) std::printf("%-28s %5s %-13s %6s %-13s\n", "graph", "edges", "verdict", "tau", "spectral");
    scan(max_edges, options, [&](const ScanEntry& e) {
        disagreement = disagreement || e.verdict.disagreement;
        AnalysisReport r;
        r.input = e.graph.canonical;
        r.graph_hash = e.graph.graph.hash();
        r.vertices = e.graph.graph.vertex_count();
        r.edges = e.graph.graph.edge_count();
        r.dimension = static_cast<std::size_t>(r.edges);
        r.spectrum.numeric = numeric_walk_spectrum(to_real(build_bipartite_walk(e.graph.graph, e.graph.parts).U));
        r.verdict = e.verdict;
        if (pretty) {
            const auto& v = e.verdict;
            std::printf("%-28s %5d %-13s %6s %-13s\n", r.input.c_str(), r.edges, to_string(v.verdict).c_str(),
                        v.period ? std::to_string(*v.period).c_str() : "-",
                        v.spectral ? to_string(v.spectral->verdict).c_str() : "-");
        } else {
            std::cout << to_json(r).dump() << '\n';
        }
    });
    return disagreement ? kExitDisagreement : 0;
}

int cmd_verify(const std::string& source, bool pretty) {
    const Input in = read_input(source);
    const Graph& g = in.graph;
    if (!g.is_connected()) throw DisconnectedError();
    json out = {{"input", in.name}, {"graph_hash", hash_hex(g.hash())}};
    bool ok = true;
    const auto eq = grover_equals_bipartite_on_subdivision(g);
    out["grover_equals_subdivision"] = eq.equal;
    ok = ok && eq.equal;
    const bool bip = try_bipartition(g).has_value();
    json blocks = json::array();
    if (bip) {
        for (int k = 1; k <= 4; ++k) {
            const auto b = block_identity_check(g, k);
            blocks.push_back({{"k", k}, {"holds", b.holds}});
            ok = ok && b.holds;
        }
    }
    out["block_identity"] = bip ? blocks : json(nullptr);
    out["passed"] = ok;
    if (pretty) {
        std::printf("%-28s %s\n", "U_GW(G) = U_BW(S(G))", eq.equal ? "pass" : "FAIL");
        if (bip)
            for (const auto& b : blocks)
                std::printf("block identity k = %-10d %s\n", b["k"].get<int>(), b["holds"].get<bool>() ? "pass" : "FAIL");
        else
            std::printf("%-28s %s\n", "block identity", "not bipartite, skipped");
    } else {
        std::cout << out.dump() << '\n';
    }
    return ok ? 0 : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodicity of bipartite and Grover quantum walks"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Human-readable tables instead of JSON Lines");

    std::string family;
    std::vector<std::string> gen_params;
    std::uint64_t seed = 42;
    auto* gen = app.add_subcommand("gen", "Write a graph family as an edge list");
    gen->add_option("family", family, "cycle, complete_bipartite, star, complete, circulant, random, or a named fixture")
        ->required();
    gen->add_option("params", gen_params, "Family parameters");
    gen->add_option("--seed", seed, "Seed for the random family");

    std::string source;
    std::string kind = "b";
    std::string transform;
    auto* walk = app.add_subcommand("walk", "Print the exact walk operator");
    walk->add_option("input", source, "Edge-list file, '-' for standard input, or a fixture name")->required();
    walk->add_option("--kind", kind, "b (bipartite) or g (Grover)");
    walk->add_option("--transform", transform, "s (subdivide) or d (double cover)");
    walk->add_flag("--pretty", pretty);

    std::uint64_t cap = kDefaultOracleCap;
    std::string methods;
    bool timing = false;
    auto* period = app.add_subcommand("period", "Decide periodicity and report the period");
    period->add_option("input", source, "Edge-list file, '-' for standard input, or a fixture name")->required();
    period->add_option("--kind", kind, "b (bipartite) or g (Grover)");
    period->add_option("--transform", transform, "s (subdivide) or d (double cover)");
    period->add_option("--cap", cap, "Largest exponent the exact oracle tries")->check(CLI::PositiveNumber);
    period->add_option("--methods", methods, "Comma-separated subset of oracle,spectral,phases,trace");
    period->add_flag("--timing", timing, "Include wall-clock seconds in the report");
    period->add_flag("--pretty", pretty);

    int max_edges = 0;
    bool full = false;
    auto* scan_cmd = app.add_subcommand("scan", "Analyze every connected biregular bipartite graph up to a size");
    scan_cmd->add_option("--max-edges", max_edges, "Edge bound, at most 12")->required();
    scan_cmd->add_option("--cap", cap, "Largest exponent the exact oracle tries")->check(CLI::PositiveNumber);
    scan_cmd->add_flag("--full", full, "Run the oracle even when the trace test already fails");
    scan_cmd->add_flag("--pretty", pretty);

    auto* verify = app.add_subcommand("verify", "Check the Grover/subdivision equality and the block identity");
    verify->add_option("input", source, "Edge-list file, '-' for standard input, or a fixture name")->required();
    verify->add_flag("--pretty", pretty);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(family, gen_params, seed);
        if (*walk) return cmd_walk(source, kind, transform, pretty);
        if (*period) return cmd_period(source, kind, transform, cap, methods, pretty, timing);
        if (*scan_cmd) return cmd_scan(max_edges, cap, full, pretty);
        if (*verify) return cmd_verify(source, pretty);
    } catch (const std::invalid_argument& e) {
        std::cerr << "qwalk: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "qwalk: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "qwalk: internal error: " << e.what() << '\n';
        return kExitDisagreement;
    }
    return kExitUsage;
}
