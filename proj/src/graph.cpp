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

#include "qwalk/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace qwalk {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("vertex index out of range in edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw GraphError("duplicate edge (" + std::to_string(dup->first) + "," +
                         std::to_string(dup->second) + ")");
    edges_ = std::move(edges);

    adjacency_.assign(static_cast<std::size_t>(n), {});
    incidence_.assign(static_cast<std::size_t>(n), {});
    for (int j = 0; j < edge_count(); ++j) {
        const auto [u, v] = edges_[static_cast<std::size_t>(j)];
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
        incidence_[u].push_back(j);
        incidence_[v].push_back(j);
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : adjacency_[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n_;
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return std::nullopt;
    const int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) seq.push_back(degree(v));
    std::sort(seq.rbegin(), seq.rend());
    return seq;
}

std::uint64_t Graph::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : format_graph(*this)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// ---------------------------------------------------------------------------

Bipartition Bipartition::from_sides(std::vector<int> side) {
    Bipartition b;
    for (int v = 0; v < static_cast<int>(side.size()); ++v) (side[v] == 0 ? b.c0 : b.c1).push_back(v);
    b.side = std::move(side);
    return b;
}

bool Bipartition::valid_for(const Graph& g) const {
    if (static_cast<int>(side.size()) != g.vertex_count()) return false;
    if (c0.size() + c1.size() != side.size()) return false;
    for (int v : c0)
        if (side[v] != 0) return false;
    for (int v : c1)
        if (side[v] != 1) return false;
    for (const auto& [u, v] : g.edges())
        if (side[u] == side[v]) return false;
    return true;
}

Bipartition Bipartition::swapped() const {
    std::vector<int> s = side;
    for (auto& x : s) x = 1 - x;
    return from_sides(std::move(s));
}

long long DegreeProfile::product() const {
    if (!biregular()) throw std::logic_error("degree profile is not biregular");
    return static_cast<long long>(*d0) * *d1;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view token, int& out) {
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::optional<int> n;
    std::vector<Edge> edges;
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        std::vector<std::string_view> tokens;
        while (!line.empty()) {
            const auto sp = line.find_first_of(" \t");
            tokens.push_back(line.substr(0, sp));
            line = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
        }
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (!n) {
            int value = 0;
            if (tokens.size() != 1 || !parse_int(tokens[0], value) || value < 0)
                throw GraphError(where + "expected vertex count");
            n = value;
            continue;
        }
        int u = 0;
        int v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            throw GraphError(where + "malformed edge line");
        if (u < 0 || v < 0 || u >= *n || v >= *n) throw GraphError(where + "vertex index out of range");
        edges.emplace_back(u, v);
    }
    if (!n) throw GraphError("empty graph document");
    return Graph(*n, std::move(edges));
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------

std::optional<Bipartition> try_bipartition(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedError();
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    if (n == 0) return Bipartition{};
    std::deque<int> queue{0};
    side[0] = 0;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
            if (side[y] < 0) {
                side[y] = 1 - side[x];
                queue.push_back(y);
            } else if (side[y] == side[x]) {
                return std::nullopt;
            }
        }
    }
    return Bipartition::from_sides(std::move(side));
}

Bipartition bipartition(const Graph& g) {
    auto b = try_bipartition(g);
    if (!b) throw NotBipartiteError();
    return std::move(*b);
}

DegreeProfile degree_profile(const Graph& g, const Bipartition& b) {
    auto common = [&](const std::vector<int>& cls) -> std::optional<int> {
        if (cls.empty()) return std::nullopt;
        const int d = g.degree(cls.front());
        for (int v : cls)
            if (g.degree(v) != d) return std::nullopt;
        return d;
    };
    return {common(b.c0), common(b.c1)};
}

SplitGraph subdivision(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<Edge> edges;
    edges.reserve(2 * static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const auto [u, v] = g.edge(j);
        edges.emplace_back(u, n + j);
        edges.emplace_back(v, n + j);
    }
    std::vector<int> side(static_cast<std::size_t>(n + m), 1);
    std::fill(side.begin() + n, side.end(), 0);
    return {Graph(n + m, std::move(edges)), Bipartition::from_sides(std::move(side))};
}

SplitGraph bipartite_double_cover(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(2 * g.edges().size());
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, n + v);
        edges.emplace_back(v, n + u);
    }
    Graph cover(2 * n, std::move(edges));
    if (!cover.is_connected()) throw DisconnectedError();
    std::vector<int> side(static_cast<std::size_t>(2 * n), 0);
    std::fill(side.begin() + n, side.end(), 1);
    return {std::move(cover), Bipartition::from_sides(std::move(side))};
}

Graph line_graph(const Graph& g) {
    std::vector<Edge> edges;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) edges.emplace_back(inc[a], inc[b]);
    }
    // simple graphs: two edges share at most one endpoint, so no duplicates
    return Graph(g.edge_count(), std::move(edges));
}

IntMatrix adjacency_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    IntMatrix a(n, n, 0);
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1;
        a(v, u) = 1;
    }
    return a;
}

IntMatrix adjacency_matrix(const Graph& g, const Bipartition& b) {
    std::vector<int> order = b.c0;
    order.insert(order.end(), b.c1.begin(), b.c1.end());
    std::vector<int> position(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
    const auto n = order.size();
    IntMatrix a(n, n, 0);
    for (const auto& [u, v] : g.edges()) {
        a(position[u], position[v]) = 1;
        a(position[v], position[u]) = 1;
    }
    return a;
}

IntMatrix biadjacency_matrix(const Graph& g, const Bipartition& b) {
    std::vector<int> index(b.side.size());
    for (std::size_t i = 0; i < b.c0.size(); ++i) index[b.c0[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < b.c1.size(); ++i) index[b.c1[i]] = static_cast<int>(i);
    IntMatrix c(b.c0.size(), b.c1.size(), 0);
    for (const auto& [u, v] : g.edges()) {
        if (b.side[u] == 0)
            c(index[u], index[v]) = 1;
        else
            c(index[v], index[u]) = 1;
    }
    return c;
}

}  // namespace qwalk
