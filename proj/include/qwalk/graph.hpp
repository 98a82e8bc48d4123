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
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwalk/matrix.hpp"

namespace qwalk {

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotBipartiteError : public GraphError {
public:
    NotBipartiteError() : GraphError("graph is not bipartite") {}
};

class DisconnectedError : public GraphError {
public:
    DisconnectedError() : GraphError("graph is disconnected") {}
};

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are stored as (u,v) with u<v, sorted lexicographically. The position
/// of an edge in that list is its canonical index; every edge-indexed matrix in
/// the library (P, Q, U, line graph vertices, subdivision vertices) uses it.
class Graph {
public:
    Graph() = default;
    /// Normalizes each pair to (min,max) and sorts. Throws GraphError on
    /// self-loops, duplicates, or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

    const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    /// Canonical indices of the edges incident to v, ascending.
    const std::vector<int>& incident_edges(int v) const { return incidence_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Canonical index of edge {u,v}, or -1.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    bool is_connected() const;
    /// Common degree if every vertex has the same degree.
    std::optional<int> regular_degree() const;
    std::vector<int> degree_sequence() const;  // sorted descending

    /// 64-bit FNV-1a over the canonical edge-list text.
    std::uint64_t hash() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<int>> incidence_;
};

struct Bipartition {
    std::vector<int> c0;    // ascending
    std::vector<int> c1;    // ascending
    std::vector<int> side;  // side[v] in {0,1}

    /// Builds from a side vector.
    static Bipartition from_sides(std::vector<int> side);
    bool valid_for(const Graph& g) const;
    /// c0 and c1 exchanged.
    Bipartition swapped() const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

struct DegreeProfile {
    std::optional<int> d0;
    std::optional<int> d1;

    bool biregular() const noexcept { return d0.has_value() && d1.has_value(); }
    /// d0*d1; throws std::logic_error unless biregular.
    long long product() const;
};

/// Arc (o(alpha), t(alpha)) = (head, tail); the reverse arc swaps them.
struct Arc {
    int head = 0;
    int tail = 0;

    Arc reversed() const noexcept { return {tail, head}; }
    friend bool operator==(const Arc&, const Arc&) = default;
};

// ---------------------------------------------------------------------------
// Text format

/// Parses the edge-list document: first non-comment line is n, every further
/// nonempty line is "u v"; lines starting with '#' are comments.
Graph parse_graph(std::string_view text);
/// Canonical edge-list text (sorted edges, trailing newline).
std::string format_graph(const Graph& g);

// ---------------------------------------------------------------------------
// Structure

/// BFS 2-coloring from vertex 0 (vertex 0 lands in c0). Returns nullopt for an
/// odd cycle; throws DisconnectedError for disconnected input.
std::optional<Bipartition> try_bipartition(const Graph& g);
/// As try_bipartition but throws NotBipartiteError instead of returning nullopt.
Bipartition bipartition(const Graph& g);

DegreeProfile degree_profile(const Graph& g, const Bipartition& b);

/// Graph together with the bipartition a construction hands back.
struct SplitGraph {
    Graph graph;
    Bipartition parts;
};

/// Subdivides every edge once. Original vertices keep 0..n-1, the vertex on
/// edge j is n+j; c0 = subdivision vertices, c1 = original vertices.
SplitGraph subdivision(const Graph& g);

/// G x K2 with (v,0) -> v and (v,1) -> n+v. Requires a connected non-bipartite
/// input, otherwise the cover is disconnected and DisconnectedError is thrown.
SplitGraph bipartite_double_cover(const Graph& g);

/// Vertices are the canonical edge indices of g.
Graph line_graph(const Graph& g);

/// Symmetric 0/1 adjacency matrix in vertex order.
IntMatrix adjacency_matrix(const Graph& g);
/// Adjacency with rows/columns ordered c0 then c1 (each ascending); the
/// off-diagonal blocks are the biadjacency matrix and its transpose.
IntMatrix adjacency_matrix(const Graph& g, const Bipartition& b);
/// |c0| x |c1| matrix, entry 1 when the two vertices are adjacent.
IntMatrix biadjacency_matrix(const Graph& g, const Bipartition& b);

// ---------------------------------------------------------------------------
// Generators

Graph cycle(int k);
/// K_{a,b}: vertices 0..a-1 on one side and a..a+b-1 on the other.
Graph complete_bipartite(int a, int b);
/// K_{1,k} with centre 0.
Graph star(int k);
Graph complete(int n);
/// Cayley graph of Z_n; the connection set must exclude 0 and be closed
/// under negation mod n.
Graph circulant(int n, const std::vector<int>& connection_set);
/// Closes a set of generators under negation ({1,4} -> {1,4,n-1,n-4}).
std::vector<int> symmetric_connection_set(int n, const std::vector<int>& generators);

/// Connected graph with n vertices drawn from a seeded generator: a random
/// spanning tree plus extra edges with probability p.
Graph random_connected(int n, double p, std::uint64_t seed);

}  // namespace qwalk
