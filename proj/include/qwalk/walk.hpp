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

#include <utility>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/rational.hpp"

namespace qwalk {

/// One cell per vertex of a color class, holding that vertex's incident edges.
struct EdgePartition {
    std::vector<int> keys;                // owning vertices, ascending
    std::vector<std::vector<int>> cells;  // canonical edge indices, ascending
};

/// (pi0, pi1): cells keyed by the vertices of c0 and c1 respectively.
std::pair<EdgePartition, EdgePartition> build_partitions(const Graph& g, const Bipartition& b);

/// (P, Q) with P[e,f] = 1/deg(x) when e and f share their c0 endpoint x, and
/// Q the same over c1.
std::pair<RationalMatrix, RationalMatrix> projections(const EdgePartition& pi0, const EdgePartition& pi1,
                                                      const Graph& g);

/// U = (2P - I)(2Q - I) on the edges of a connected bipartite graph.
struct WalkOperator {
    Graph graph;
    Bipartition parts;
    DegreeProfile profile;
    RationalMatrix P;
    RationalMatrix Q;
    RationalMatrix U;

    std::size_t dimension() const noexcept { return U.rows(); }
};

/// Uses the bipartition found by BFS from vertex 0. Throws NotBipartiteError
/// or DisconnectedError. Idempotence and orthogonality are checked on every
/// construction; a failure throws std::logic_error.
WalkOperator build_bipartite_walk(const Graph& g);
WalkOperator build_bipartite_walk(const Graph& g, const Bipartition& b);

/// Grover walk R(2K - I) on arcs. Arc j is (u,v) and arc j+|E| is (v,u) for
/// canonical edge j = (u,v), u < v.
struct ArcWalkOperator {
    Graph graph;
    std::vector<Arc> arcs;
    RationalMatrix R;  // arc reversal
    RationalMatrix K;  // K[a,b] = 1/deg(t(a)) when t(a) = t(b)
    RationalMatrix U;

    std::size_t dimension() const noexcept { return U.rows(); }
};

/// Throws DisconnectedError.
ArcWalkOperator build_grover_walk(const Graph& g);

struct GroverEquality {
    bool equal = false;
    /// arc index -> canonical edge index in S(g); arc (u,v) goes to the
    /// edge joining the subdivision vertex of {u,v} with v.
    std::vector<int> arc_to_edge;
};

/// Compares U_GW(g) with U_BW(S(g)) (c0 = subdivision vertices) under the
/// arc correspondence above.
GroverEquality grover_equals_bipartite_on_subdivision(const Graph& g);

struct BlockIdentity {
    bool holds = false;
    bool upper_block = false;   // leading block equals U^k
    bool lower_block = false;   // trailing block equals (U^T)^k
    bool off_diagonal = false;  // both off-diagonal blocks vanish
    /// Arc order used: arcs with tail in c1 by edge index, then tail in c0.
    std::vector<int> arc_order;
};

/// Checks U_GW^{2k} = diag(U_BW^k, (U_BW^T)^k) for a connected bipartite g.
BlockIdentity block_identity_check(const Graph& g, int k);

}  // namespace qwalk
