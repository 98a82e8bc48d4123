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

#include <doctest.h>

#include <random>

#include "catalog.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

const std::vector<int>* cell_of(const EdgePartition& p, int key) {
    for (std::size_t i = 0; i < p.keys.size(); ++i)
        if (p.keys[i] == key) return &p.cells[i];
    return nullptr;
}

}  // namespace

TEST_SUITE("walk") {

TEST_CASE("edge partitions of figure1") {
    const Graph g = fixtures::figure1();
    const auto [pi0, pi1] = build_partitions(g, bipartition(g));
    const int e01 = g.edge_index(0, 1);
    REQUIRE(cell_of(pi0, 0) != nullptr);
    CHECK(*cell_of(pi0, 0) == std::vector<int>{e01, g.edge_index(0, 5)});
    REQUIRE(cell_of(pi1, 1) != nullptr);
    CHECK(*cell_of(pi1, 1) == std::vector<int>{e01, g.edge_index(1, 2), g.edge_index(1, 4)});
}

TEST_CASE("edge partitions cover every edge once") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = subdivision(random_connected(6, 0.5, seed)).graph;
        const auto [pi0, pi1] = build_partitions(g, bipartition(g));
        for (const auto* pi : {&pi0, &pi1}) {
            std::vector<int> seen(g.edge_count(), 0);
            for (std::size_t i = 0; i < pi->keys.size(); ++i) {
                CHECK(static_cast<int>(pi->cells[i].size()) == g.degree(pi->keys[i]));
                for (int e : pi->cells[i]) ++seen[e];
            }
            for (int s : seen) CHECK(s == 1);
        }
    }
}

TEST_CASE("edge partitions of small graphs") {
    const Graph k11 = complete_bipartite(1, 1);
    const auto [a0, a1] = build_partitions(k11, bipartition(k11));
    CHECK(a0.cells == std::vector<std::vector<int>>{{0}});
    CHECK(a1.cells == std::vector<std::vector<int>>{{0}});

    // center of the star on the c1 side
    const Graph s = star(3);
    const auto [p0, p1] = build_partitions(s, bipartition(s).swapped());
    CHECK(p1.cells == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(p0.cells.size() == 3);
}

TEST_CASE("figure1 projections and operator") {
    // P is keyed by the class of vertex 0; the printed labels run the
    // other way round and the printed U is our transpose.
    const auto w = build_bipartite_walk(fixtures::figure1());
    CHECK(w.P == catalog::printed_q());
    CHECK(w.Q == catalog::printed_p());
    RationalMatrix expected = catalog::printed_u();
    expected(2, 4) = make_rational(-1, 3);
    CHECK(w.U.transpose() == expected);
    for (const auto& x : w.U.values())
        CHECK((x == 0 || x == 1 || x == make_rational(2, 3) || x == make_rational(-1, 3)));
}

TEST_CASE("bipartite walk invariants") {
    const auto k11 = build_bipartite_walk(complete_bipartite(1, 1));
    CHECK(k11.P == RationalMatrix::identity(1));
    CHECK(k11.Q == RationalMatrix::identity(1));
    CHECK(k11.U == RationalMatrix::identity(1));

    const auto k22 = build_bipartite_walk(complete_bipartite(2, 2));
    CHECK(k22.dimension() == 4);
    CHECK(is_orthogonal(k22.U));
    CHECK(is_identity(mat_pow(k22.U, 2)));

    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
        const Graph g = subdivision(random_connected(3 + static_cast<int>(rng() % 5), 0.5, rng())).graph;
        const auto w = build_bipartite_walk(g);
        CHECK(mat_mul(w.P, w.P) == w.P);
        CHECK(mat_mul(w.Q, w.Q) == w.Q);
        CHECK(is_symmetric(w.P));
        CHECK(is_symmetric(w.Q));
        CHECK(w.U == mat_mul(reflection(w.P), reflection(w.Q)));
        CHECK(is_orthogonal(w.U));
        CHECK(rank(w.P) == w.parts.c0.size());
        CHECK(rank(w.Q) == w.parts.c1.size());
    }
}

TEST_CASE("bipartite walk rejects bad input") {
    CHECK_THROWS_AS(build_bipartite_walk(cycle(5)), NotBipartiteError);
    CHECK_THROWS_AS(build_bipartite_walk(parse_graph("4\n0 1\n2 3")), DisconnectedError);
    CHECK_THROWS_AS(build_bipartite_walk(parse_graph("1")), GraphError);
    const Graph c4 = cycle(4);
    Bipartition bad = Bipartition::from_sides({0, 0, 1, 1});
    CHECK_THROWS_AS(build_bipartite_walk(c4, bad), GraphError);
}

TEST_CASE("Grover walk") {
    const auto k11 = build_grover_walk(complete_bipartite(1, 1));
    CHECK(k11.arcs.size() == 2);
    CHECK(k11.K == RationalMatrix::identity(2));
    const auto swap = to_rational(IntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(k11.U == swap);
    CHECK(k11.R == swap);

    const auto c4 = build_grover_walk(cycle(4));
    CHECK(c4.dimension() == 8);
    CHECK(is_integer(trace(mat_pow(c4.U, 4))));

    for (const Graph& g : {complete(4), fixtures::petersen(), fixtures::figure1(), random_connected(7, 0.4, 5)}) {
        const auto w = build_grover_walk(g);
        CHECK(is_identity(mat_mul(w.R, w.R)));
        CHECK(mat_mul(w.K, w.K) == w.K);
        CHECK(is_symmetric(w.K));
        CHECK(w.U == mat_mul(w.R, reflection(w.K)));
        CHECK(is_orthogonal(w.U));
        for (std::size_t a = 0; a < w.arcs.size(); ++a) {
            const Arc rev = w.arcs[a].reversed();
            CHECK(std::find(w.arcs.begin(), w.arcs.end(), rev) != w.arcs.end());
            CHECK(g.has_edge(w.arcs[a].head, w.arcs[a].tail));
        }
    }
}

TEST_CASE("Grover walk equals the bipartite walk on the subdivision") {
    CHECK(grover_equals_bipartite_on_subdivision(complete_bipartite(1, 1)).equal);
    CHECK(grover_equals_bipartite_on_subdivision(fixtures::figure4a()).equal);
    CHECK(grover_equals_bipartite_on_subdivision(cycle(4)).equal);
    CHECK(grover_equals_bipartite_on_subdivision(complete(4)).equal);
    CHECK(grover_equals_bipartite_on_subdivision(fixtures::petersen()).equal);
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const Graph g = random_connected(3 + static_cast<int>(seed % 6), 0.4, seed);
        const auto eq = grover_equals_bipartite_on_subdivision(g);
        CHECK(eq.equal);
        CHECK(eq.arc_to_edge.size() == 2 * static_cast<std::size_t>(g.edge_count()));
    }
}

TEST_CASE("block identity") {
    CHECK(block_identity_check(complete_bipartite(2, 2), 1).holds);
    CHECK(block_identity_check(complete_bipartite(1, 1), 1).holds);

    const auto c6 = block_identity_check(cycle(6), 3);
    CHECK(c6.holds);
    CHECK(is_identity(mat_pow(build_bipartite_walk(cycle(6)).U, 3)));
    CHECK(is_identity(mat_pow(build_grover_walk(cycle(6)).U, 6)));

    for (const Graph& g : {fixtures::figure1(), fixtures::figure4a(), fixtures::heawood(), complete_bipartite(2, 3)})
        for (int k = 1; k <= 4; ++k) {
            const auto b = block_identity_check(g, k);
            CHECK(b.holds);
            CHECK(b.upper_block);
            CHECK(b.lower_block);
            CHECK(b.off_diagonal);
        }
    CHECK_THROWS_AS(block_identity_check(cycle(5), 1), NotBipartiteError);
    CHECK_THROWS(block_identity_check(cycle(4), 0));
}

}
