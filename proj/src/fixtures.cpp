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

#include "qwalk/fixtures.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace qwalk::fixtures {
namespace {

constexpr std::string_view kFigure1 =
    "# bipartite tree on 8 vertices\n"
    "8\n0 1\n0 5\n1 2\n1 4\n2 3\n5 6\n6 7\n";

constexpr std::string_view kFigure4a =
    "# parts {0,1} and {2,3,4}\n"
    "5\n0 2\n0 3\n0 4\n1 2\n1 3\n";

constexpr std::string_view kFigure7 =
    "# 4-regular, spectrum {-(1+sqrt5), -2, 0^4, sqrt5-1, 4}\n"
    "8\n"
    "0 3\n0 4\n0 5\n0 6\n1 4\n1 5\n1 6\n1 7\n"
    "2 4\n2 5\n2 6\n2 7\n3 5\n3 6\n3 7\n4 7\n";

constexpr std::string_view kHeawood =
    "# Heawood graph, LCF [5,-5]^7\n"
    "14\n"
    "0 1\n0 5\n0 13\n1 2\n1 10\n2 3\n2 7\n3 4\n3 12\n4 5\n4 9\n5 6\n"
    "6 7\n6 11\n7 8\n8 9\n8 13\n9 10\n10 11\n11 12\n12 13\n";

constexpr std::string_view kPetersen =
    "# Petersen graph: outer 5-cycle, spokes, inner pentagram\n"
    "10\n"
    "0 1\n0 4\n0 5\n1 2\n1 6\n2 3\n2 7\n3 4\n3 8\n4 9\n5 7\n5 8\n6 8\n6 9\n7 9\n";

constexpr std::string_view kCayley10 =
    "# Cayley(Z_10, {+-1, +-4})\n"
    "10\n"
    "0 1\n0 4\n0 6\n0 9\n1 2\n1 5\n1 7\n2 3\n2 6\n2 8\n"
    "3 4\n3 7\n3 9\n4 5\n4 8\n5 6\n5 9\n6 7\n7 8\n8 9\n";

constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kDocuments{{
    {"figure1", kFigure1},
    {"figure4a", kFigure4a},
    {"figure7", kFigure7},
    {"heawood", kHeawood},
    {"petersen", kPetersen},
    {"cayley10", kCayley10},
}};

std::optional<int> to_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return value;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

std::string_view document(std::string_view name) {
    for (const auto& [key, doc] : kDocuments)
        if (key == name) return doc;
    throw std::invalid_argument("unknown fixture: " + std::string(name));
}

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& [key, doc] : kDocuments) out.emplace_back(key);
    return out;
}

Graph figure1() { return parse_graph(kFigure1); }
Graph figure4a() { return parse_graph(kFigure4a); }
Graph figure7() { return parse_graph(kFigure7); }
Graph heawood() { return parse_graph(kHeawood); }
Graph petersen() { return parse_graph(kPetersen); }
Graph cayley10() { return parse_graph(kCayley10); }

std::optional<Graph> resolve(std::string_view name) {
    for (const auto& [key, doc] : kDocuments)
        if (key == name) return parse_graph(doc);

    if (name.starts_with("star") && all_digits(name.substr(4))) return star(*to_int(name.substr(4)));
    if (name.size() >= 2 && name[0] == 'c' && all_digits(name.substr(1))) return cycle(*to_int(name.substr(1)));
    if (name.size() >= 2 && name[0] == 'k') {
        const auto rest = name.substr(1);
        if (const auto us = rest.find('_'); us != std::string_view::npos) {
            const auto a = rest.substr(0, us);
            const auto b = rest.substr(us + 1);
            if (all_digits(a) && all_digits(b)) return complete_bipartite(*to_int(a), *to_int(b));
            return std::nullopt;
        }
        if (rest.size() == 1 && all_digits(rest)) return complete(*to_int(rest));
        if (rest.size() == 2 && all_digits(rest))
            return complete_bipartite(rest[0] - '0', rest[1] - '0');
    }
    return std::nullopt;
}

}  // namespace qwalk::fixtures
