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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk::fixtures {

/// Bipartite 8-vertex tree with 7 edges whose walk has trace -1/3.
Graph figure1();
/// 5-vertex bipartite graph {0,1} x {2,3,4} minus the edge (1,4).
Graph figure4a();
/// 4-regular graph on 8 vertices with spectrum {-(1+sqrt5), -2, 0^4, sqrt5-1, 4}.
Graph figure7();
Graph heawood();
Graph petersen();
/// Cayley(Z_10, {+-1, +-4}).
Graph cayley10();

/// Embedded edge-list documents, keyed by fixture name.
std::string_view document(std::string_view name);
std::vector<std::string> names();

/// Resolves a fixture name or shorthand: the named fixtures above plus
/// cN (cycle), kN (complete, one digit), kAB (K_{A,B}, two digits),
/// kA_B (K_{A,B}), starN. Returns nullopt when nothing matches.
std::optional<Graph> resolve(std::string_view name);

}  // namespace qwalk::fixtures
