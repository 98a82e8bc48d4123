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

#include "qwalk/walk.hpp"

#include <stdexcept>

namespace qwalk {
namespace {

EdgePartition partition_for(const Graph& g, const std::vector<int>& color_class) {
    EdgePartition p;
    p.keys = color_class;
    p.cells.reserve(color_class.size());
    for (int v : color_class) p.cells.push_back(g.incident_edges(v));
    return p;
}

RationalMatrix projection_from(const EdgePartition& pi, std::size_t m) {
    RationalMatrix p(m, m);
    for (const auto& cell : pi.cells) {
        const Rational w(1, static_cast<unsigned long>(cell.size()));
        for (int e : cell)
            for (int f : cell) p(e, f) = w;
    }
    return p;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
}

}  // namespace

std::pair<EdgePartition, EdgePartition> build_partitions(const Graph& g, const Bipartition& b) {
    if (!b.valid_for(g)) throw GraphError("bipartition does not match the graph");
    return {partition_for(g, b.c0), partition_for(g, b.c1)};
}

std::pair<RationalMatrix, RationalMatrix> projections(const EdgePartition& pi0, const EdgePartition& pi1,
                                                      const Graph& g) {
    const auto m = static_cast<std::size_t>(g.edge_count());
    return {projection_from(pi0, m), projection_from(pi1, m)};
}

WalkOperator build_bipartite_walk(const Graph& g) { return build_bipartite_walk(g, bipartition(g)); }

WalkOperator build_bipartite_walk(const Graph& g, const Bipartition& b) {
    if (!g.is_connected()) throw DisconnectedError();
    if (g.edge_count() == 0) throw GraphError("walk needs at least one edge");
    const auto [pi0, pi1] = build_partitions(g, b);
    auto [p, q] = projections(pi0, pi1, g);

    WalkOperator w;
    w.graph = g;
    w.parts = b;
    w.profile = degree_profile(g, b);
    w.U = mat_mul(reflection(p), reflection(q));
    w.P = std::move(p);
    w.Q = std::move(q);

    require(is_symmetric(w.P) && mat_mul(w.P, w.P) == w.P, "P is not a symmetric idempotent");
    require(is_symmetric(w.Q) && mat_mul(w.Q, w.Q) == w.Q, "Q is not a symmetric idempotent");
    require(is_orthogonal(w.U), "U is not orthogonal");
    return w;
}

ArcWalkOperator build_grover_walk(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedError();
    if (g.edge_count() == 0) throw GraphError("walk needs at least one edge");
    const auto m = static_cast<std::size_t>(g.edge_count());

    ArcWalkOperator w;
    w.graph = g;
    w.arcs.reserve(2 * m);
    for (const auto& [u, v] : g.edges()) w.arcs.push_back({u, v});
    for (std::size_t j = 0; j < m; ++j) w.arcs.push_back(w.arcs[j].reversed());

    w.R = RationalMatrix(2 * m, 2 * m);
    for (std::size_t j = 0; j < m; ++j) {
        w.R(j, j + m) = 1;
        w.R(j + m, j) = 1;
    }
    w.K = RationalMatrix(2 * m, 2 * m);
    for (std::size_t a = 0; a < 2 * m; ++a) {
        const int t = w.arcs[a].tail;
        const Rational inv(1, static_cast<unsigned long>(g.degree(t)));
        for (std::size_t b = 0; b < 2 * m; ++b)
            if (w.arcs[b].tail == t) w.K(a, b) = inv;
    }
    w.U = mat_mul(w.R, reflection(w.K));

    require(is_identity(mat_mul(w.R, w.R)), "R is not an involution");
    require(is_symmetric(w.K) && mat_mul(w.K, w.K) == w.K, "K is not a symmetric idempotent");
    require(is_orthogonal(w.U), "U_GW is not orthogonal");
    return w;
}

GroverEquality grover_equals_bipartite_on_subdivision(const Graph& g) {
    const ArcWalkOperator gw = build_grover_walk(g);
    const SplitGraph s = subdivision(g);
    const WalkOperator bw = build_bipartite_walk(s.graph, s.parts);

    const int n = g.vertex_count();
    GroverEquality out;
    out.arc_to_edge.reserve(gw.arcs.size());
    for (std::size_t a = 0; a < gw.arcs.size(); ++a) {
        const int e = g.edge_index(gw.arcs[a].head, gw.arcs[a].tail);
        out.arc_to_edge.push_back(s.graph.edge_index(n + e, gw.arcs[a].tail));
    }
    out.equal = true;
    for (std::size_t a = 0; a < gw.arcs.size() && out.equal; ++a)
        for (std::size_t b = 0; b < gw.arcs.size(); ++b)
            if (gw.U(a, b) != bw.U(out.arc_to_edge[a], out.arc_to_edge[b])) {
                out.equal = false;
                break;
            }
    return out;
}

BlockIdentity block_identity_check(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("block_identity_check: k must be positive");
    const Bipartition b = bipartition(g);
    const WalkOperator bw = build_bipartite_walk(g, b);
    const ArcWalkOperator gw = build_grover_walk(g);
    const auto m = static_cast<std::size_t>(g.edge_count());

    // Arc with tail in c1 on edge j is the first half, tail in c0 the second.
    BlockIdentity out;
    out.arc_order.assign(2 * m, -1);
    for (std::size_t a = 0; a < 2 * m; ++a) {
        const auto& arc = gw.arcs[a];
        const int j = g.edge_index(arc.head, arc.tail);
        const bool tail_in_c1 = b.side[arc.tail] == 1;
        out.arc_order[(tail_in_c1 ? 0 : m) + static_cast<std::size_t>(j)] = static_cast<int>(a);
    }

    const RationalMatrix big = mat_pow(gw.U, 2 * static_cast<std::uint64_t>(k));
    const RationalMatrix uk = mat_pow(bw.U, static_cast<std::uint64_t>(k));
    const RationalMatrix utk = uk.transpose();
    out.upper_block = out.lower_block = out.off_diagonal = true;
    for (std::size_t i = 0; i < 2 * m; ++i) {
        for (std::size_t j = 0; j < 2 * m; ++j) {
            const Rational& x = big(out.arc_order[i], out.arc_order[j]);
            const bool top = i < m;
            const bool left = j < m;
            if (top && left)
                out.upper_block = out.upper_block && x == uk(i, j);
            else if (!top && !left)
                out.lower_block = out.lower_block && x == utk(i - m, j - m);
            else
                out.off_diagonal = out.off_diagonal && x == 0;
        }
    }
    out.holds = out.upper_block && out.lower_block && out.off_diagonal;
    return out;
}

}  // namespace qwalk
