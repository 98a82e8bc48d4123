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

#include "catalog.hpp"
#include "qwalk/serialize.hpp"

using namespace qwalk;

TEST_SUITE("serialize") {

TEST_CASE("matrices serialize as exact strings") {
    const RationalMatrix u = build_bipartite_walk(fixtures::figure1()).U;
    const json j = matrix_to_json(u);
    CHECK(j["rows"] == 7);
    CHECK(j["cols"] == 7);
    CHECK(j["entries"][7] == "-1/3");
    CHECK(matrix_from_json(j) == u);
    CHECK(matrix_from_json(json::parse(j.dump())) == u);
    CHECK_THROWS(matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":["1"]})")));
    CHECK_THROWS(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":["x"]})")));
}

TEST_CASE("walk operators round-trip") {
    for (const Graph& g : {fixtures::figure1(), cycle(6), fixtures::heawood()}) {
        const auto w = build_bipartite_walk(g);
        const auto back = walk_from_json(json::parse(to_json(w).dump()));
        CHECK(back.graph == w.graph);
        CHECK(back.parts == w.parts);
        CHECK(back.P == w.P);
        CHECK(back.Q == w.Q);
        CHECK(back.U == w.U);
        CHECK(back.profile.d0 == w.profile.d0);
    }
    const auto gw = build_grover_walk(fixtures::petersen());
    const auto back = arc_walk_from_json(json::parse(to_json(gw).dump()));
    CHECK(back.U == gw.U);
    CHECK(back.R == gw.R);
    CHECK(back.K == gw.K);
    CHECK(back.arcs == gw.arcs);
}

TEST_CASE("analysis reports round-trip") {
    for (const Graph& g : {fixtures::figure1(), catalog::cayley10_subdivision(), fixtures::heawood()}) {
        AnalysisReport r;
        r.input = "fixture";
        r.graph_hash = g.hash();
        r.vertices = g.vertex_count();
        r.edges = g.edge_count();
        const auto w = build_bipartite_walk(g);
        r.dimension = w.dimension();
        r.spectrum.numeric = numeric_walk_spectrum(to_real(w.U));
        r.verdict = analyze(g, AnalysisOptions{});
        r.seconds = 0.25;
        const json j = to_json(r);
        const json again = to_json(report_from_json(json::parse(j.dump())));
        CHECK(again == j);
        CHECK(j["graph_hash"] == hash_hex(g.hash()));
        CHECK(j["graph_hash"].get<std::string>().size() == 16);
    }
}

TEST_CASE("reports carry exact root strings") {
    AnalysisReport r;
    const Graph g = catalog::figure7_double_cover();
    r.verdict = analyze(g, AnalysisOptions{});
    const json j = to_json(r);
    bool found = false;
    for (const auto& root : j["result"]["spectral"]["roots"]) found = found || root["value"] == "6+2*sqrt(5)";
    CHECK(found);
    CHECK(j["result"]["verdict"] == "periodic");
    CHECK_FALSE(j.contains("seconds"));
}

}
