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

#include "qwalk/scan.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qwalk {
namespace {

std::vector<std::uint32_t> sorted_columns(const std::vector<std::uint32_t>& rows, const std::vector<int>& order, int b) {
    std::vector<std::uint32_t> cols(static_cast<std::size_t>(b), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::uint32_t r = rows[static_cast<std::size_t>(order[i])];
        for (int j = 0; j < b; ++j)
            if (r >> j & 1U) cols[static_cast<std::size_t>(j)] |= 1U << i;
    }
    std::sort(cols.begin(), cols.end());
    return cols;
}

std::vector<std::uint32_t> minimal_columns(const std::vector<std::uint32_t>& rows, int b) {
    std::vector<int> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::uint32_t> best;
    do {
        auto cols = sorted_columns(rows, order, b);
        if (best.empty() || cols < best) best = std::move(cols);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

std::vector<std::uint32_t> transpose_rows(const std::vector<std::uint32_t>& rows, int b) {
    std::vector<std::uint32_t> t(static_cast<std::size_t>(b), 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < b; ++j)
            if (rows[i] >> j & 1U) t[static_cast<std::size_t>(j)] |= 1U << i;
    return t;
}

bool connected(const std::vector<std::uint32_t>& rows, int b) {
    const int a = static_cast<int>(rows.size());
    std::uint32_t seen_rows = 1;
    std::uint32_t seen_cols = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < a; ++i)
            if (seen_rows >> i & 1U) {
                const std::uint32_t next = seen_cols | rows[static_cast<std::size_t>(i)];
                grew = grew || next != seen_cols;
                seen_cols = next;
            }
        for (int i = 0; i < a; ++i)
            if (!(seen_rows >> i & 1U) && (rows[static_cast<std::size_t>(i)] & seen_cols)) {
                seen_rows |= 1U << i;
                grew = true;
            }
    }
    return seen_rows == (1U << a) - 1 && seen_cols == (1U << b) - 1;
}

struct Search {
    int a, b, d0, d1;
    std::vector<std::uint32_t> masks;  // all rows of weight d0, descending
    std::vector<std::uint32_t> rows;
    std::vector<int> column_load;
    std::set<std::string> seen;
    std::vector<BiregularGraph>* out;

    void run(std::size_t start) {
        const auto i = rows.size();
        if (static_cast<int>(i) == a) {
            for (int c : column_load)
                if (c != d1) return;
            if (!connected(rows, b)) return;
            std::string key = canonical_form(rows, b);
            if (!seen.insert(key).second) return;
            emit(std::move(key));
            return;
        }
        const int remaining = a - static_cast<int>(i);
        for (std::size_t k = start; k < masks.size(); ++k) {
            const std::uint32_t m = masks[k];
            bool ok = true;
            for (int j = 0; j < b && ok; ++j) {
                const int load = column_load[static_cast<std::size_t>(j)] + static_cast<int>(m >> j & 1U);
                // every column still needs d1 - load entries from the remaining - 1 rows
                ok = load <= d1 && d1 - load <= remaining - 1;
            }
            if (!ok) continue;
            for (int j = 0; j < b; ++j) column_load[static_cast<std::size_t>(j)] += static_cast<int>(m >> j & 1U);
            rows.push_back(m);
            run(k);  // rows nonincreasing in mask order
            rows.pop_back();
            for (int j = 0; j < b; ++j) column_load[static_cast<std::size_t>(j)] -= static_cast<int>(m >> j & 1U);
        }
    }

    void emit(std::string key) {
        std::vector<Edge> edges;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (rows[static_cast<std::size_t>(i)] >> j & 1U) edges.emplace_back(i, a + j);
        std::vector<int> side(static_cast<std::size_t>(a + b), 0);
        std::fill(side.begin() + a, side.end(), 1);
        out->push_back({Graph(a + b, std::move(edges)), Bipartition::from_sides(std::move(side)), d0, d1, std::move(key)});
    }
};

}  // namespace

std::string canonical_form(const std::vector<std::uint32_t>& rows, int b) {
    auto best = minimal_columns(rows, b);
    if (static_cast<int>(rows.size()) == b) {
        auto t = minimal_columns(transpose_rows(rows, b), b);
        if (t < best) best = std::move(t);
    }
    const int a = static_cast<int>(rows.size());
    const int d0 = rows.empty() ? 0 : std::popcount(rows.front());
    const int d1 = best.empty() ? 0 : std::popcount(best.front());
    std::string key = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d0) + "," +
                      std::to_string(d1) + ":";
    for (std::size_t j = 0; j < best.size(); ++j) key += (j ? "." : "") + std::to_string(best[j]);
    return key;
}

std::vector<BiregularGraph> enumerate_biregular(int max_edges) {
    if (max_edges < 1 || max_edges > kMaxScanEdges)
        throw std::invalid_argument("max_edges must lie in 1.." + std::to_string(kMaxScanEdges));
    std::vector<BiregularGraph> out;
    for (int e = 1; e <= max_edges; ++e) {
        for (int a = 1; a <= e; ++a) {
            if (e % a != 0) continue;
            for (int b = a; b <= e; ++b) {
                if (e % b != 0 || a + b - 1 > e) continue;
                const int d0 = e / a;
                const int d1 = e / b;
                if (d0 > b || d1 > a) continue;
                Search s{a, b, d0, d1, {}, {}, std::vector<int>(static_cast<std::size_t>(b), 0), {}, &out};
                for (std::uint32_t m = (1U << b) - 1;; --m) {
                    if (std::popcount(m) == d0) s.masks.push_back(m);
                    if (m == 0) break;
                }
                const auto first = out.size();
                s.run(0);
                std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
                          [](const auto& x, const auto& y) { return x.canonical < y.canonical; });
            }
        }
    }
    return out;
}

void scan(int max_edges, const ScanOptions& options, const std::function<void(const ScanEntry&)>& sink) {
    for (auto& g : enumerate_biregular(max_edges)) {
        ScanEntry entry;
        AnalysisOptions analysis;
        analysis.cap = options.cap;
        if (options.trace_filter) {
            const auto trace = trace_test(build_bipartite_walk(g.graph, g.parts).U);
            if (!trace.passed) {
                analysis.methods = {Method::spectral, Method::phases, Method::trace};
                entry.filtered = true;
            }
        }
        entry.verdict = analyze(g.graph, analysis);
        entry.graph = std::move(g);
        sink(entry);
    }
}

}  // namespace qwalk
