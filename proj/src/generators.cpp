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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "qwalk/graph.hpp"

namespace qwalk {

Graph cycle(int k) {
    if (k < 3) throw GraphError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Graph(k, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw GraphError("complete_bipartite needs positive part sizes");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, std::move(edges));
}

Graph star(int k) { return complete_bipartite(1, k); }

Graph complete(int n) {
    if (n < 1) throw GraphError("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

std::vector<int> symmetric_connection_set(int n, const std::vector<int>& generators) {
    if (n < 2) throw GraphError("circulant needs n >= 2");
    std::set<int> s;
    for (int g : generators) {
        const int r = ((g % n) + n) % n;
        if (r == 0) throw GraphError("connection set must not contain 0");
        s.insert(r);
        s.insert((n - r) % n);
    }
    return {s.begin(), s.end()};
}

Graph circulant(int n, const std::vector<int>& connection_set) {
    if (n < 2) throw GraphError("circulant needs n >= 2");
    std::set<int> s;
    for (int c : connection_set) {
        const int r = ((c % n) + n) % n;
        if (r == 0) throw GraphError("connection set must not contain 0");
        s.insert(r);
    }
    for (int r : s)
        if (!s.contains((n - r) % n)) throw GraphError("connection set is not closed under negation");
    std::set<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int r : s) {
            const int j = (i + r) % n;
            edges.emplace(std::min(i, j), std::max(i, j));
        }
    return Graph(n, {edges.begin(), edges.end()});
}

Graph random_connected(int n, double p, std::uint64_t seed) {
    if (n < 1) throw GraphError("random_connected needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw GraphError("random_connected needs 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::set<Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.emplace(parent(rng), v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace(u, v);
    return Graph(n, {edges.begin(), edges.end()});
}

}  // namespace qwalk
