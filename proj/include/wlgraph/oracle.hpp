// Copyright 2026 The wlgraph Authors
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
#include <span>
#include <utility>
#include <vector>

#include "wlgraph/graph.hpp"

namespace wlgraph {

using Permutation = std::vector<Vertex>;

/// WLG_ORACLE_CAP if set, else 12. Applies to orbits and group order.
int default_oracle_cap();
/// WLG_ISO_ORACLE_CAP if set, else 40.
int default_iso_oracle_cap();

/// perm maps V(g) bijectively onto V(h) preserving colors and edge colors.
bool is_isomorphism(const ColoredGraph& g, const ColoredGraph& h, std::span<const Vertex> map);
bool is_automorphism(const ColoredGraph& g, std::span<const Vertex> perm);

/// Backtracking isomorphism search that uses only colors, degrees and
/// adjacency. Returns a map g -> h or nullopt when none exists. Throws
/// ResourceError above `cap` vertices (0 selects the default).
std::optional<Permutation> iso_oracle(const ColoredGraph& g, const ColoredGraph& h,
                                      int cap = 0);

/// Isomorphism g -> h extending the prescribed pairs, if any.
std::optional<Permutation> iso_extending(const ColoredGraph& g, const ColoredGraph& h,
                                         std::span<const std::pair<Vertex, Vertex>> fixed);

/// Orbits of Aut(g) on vertices, each ascending, ordered by smallest member.
std::vector<std::vector<Vertex>> orbits_oracle(const ColoredGraph& g, int cap = 0);

/// |Aut(g)| as the product of orbit lengths along a stabilizer chain.
std::uint64_t aut_order_oracle(const ColoredGraph& g, int cap = 0);

/// Order of the group generated by `gens` on n points, by closure. Throws
/// ResourceError once more than `cap` elements are found.
std::uint64_t generated_group_order(int n, const std::vector<Permutation>& gens,
                                    std::uint64_t cap = 2'000'000);

}  // namespace wlgraph
