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

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "qwalk/periodicity.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

using json = nlohmann::ordered_json;

/// {"rows": r, "cols": c, "entries": ["num/den", ...]} row-major.
json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

json to_json(const WalkOperator& w);
json to_json(const ArcWalkOperator& w);
/// Rebuilds the stored fields without recomputation; throws
/// std::invalid_argument on malformed documents.
WalkOperator walk_from_json(const json& j);
ArcWalkOperator arc_walk_from_json(const json& j);

/// Numeric spectrum of the operator and exact classifications when known.
struct SpectralSummary {
    EigenphaseSet numeric;
};

struct AnalysisReport {
    std::string input;
    std::string transform = "none";
    WalkKind kind = WalkKind::bipartite;
    std::uint64_t graph_hash = 0;
    int vertices = 0;
    int edges = 0;
    std::size_t dimension = 0;
    SpectralSummary spectrum;
    PeriodicityVerdict verdict;
    std::optional<double> seconds;
};

json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const json& j);

/// Hex rendering of a graph hash, 16 digits.
std::string hash_hex(std::uint64_t h);

}  // namespace qwalk
