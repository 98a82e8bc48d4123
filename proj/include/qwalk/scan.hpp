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
#include <functional>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/periodicity.hpp"

namespace qwalk {

inline constexpr int kMaxScanEdges = 12;

struct BiregularGraph {
    Graph graph;
    Bipartition parts;  // c0 = 0..a-1, c1 = a..a+b-1, a <= b
    int d0 = 0;
    int d1 = 0;
    std::string canonical;  // "a,b,d0,d1:" followed by the canonical column masks
};

/// Every connected biregular bipartite graph with 1..max_edges edges, one per
/// isomorphism class, ordered by (edges, a, b, d0, canonical form). Throws
/// std::invalid_argument when max_edges is outside 1..12.
std::vector<BiregularGraph> enumerate_biregular(int max_edges);

/// Canonical form of a 0/1 biadjacency matrix given as row bitmasks over b
/// columns: the minimum over row orders of the sorted column masks, also
/// minimized over the transpose when the matrix is square.
std::string canonical_form(const std::vector<std::uint32_t>& rows, int b);

struct ScanOptions {
    std::uint64_t cap = kDefaultOracleCap;
    /// A trace-test failure settles the graph as non-periodic without
    /// running the oracle.
    bool trace_filter = true;
};

struct ScanEntry {
    BiregularGraph graph;
    PeriodicityVerdict verdict;
    bool filtered = false;  // settled by the trace filter
};

/// Analyzes each enumerated graph in order and hands it to sink.
void scan(int max_edges, const ScanOptions& options, const std::function<void(const ScanEntry&)>& sink);

}  // namespace qwalk
