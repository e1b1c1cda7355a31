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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wlgraph/graph.hpp"
#include "wlgraph/refine.hpp"

namespace wlgraph {

/// Partition of V x V into basis relations 0..s-1.
struct CoherentConfig {
  int n = 0;
  int s = 0;
  /// rel_of[x * n + y]
  std::vector<int> rel_of;
  /// c^k_{ij} at (i * s + j) * s + k; filled by validate().
  std::vector<std::uint32_t> intersection;

  int rel(int x, int y) const { return rel_of[static_cast<std::size_t>(x) * n + y]; }
  std::uint32_t c(int i, int j, int k) const {
    return intersection[(static_cast<std::size_t>(i) * s + j) * s + k];
  }
  /// Fibres cut out by the diagonal relations, ordered by relation id.
  std::vector<std::vector<int>> fibres() const;
  /// Points of each relation, as (x, y) pairs in row-major order.
  std::vector<std::vector<std::pair<int, int>>> relations() const;

  friend bool operator==(const CoherentConfig& a, const CoherentConfig& b) {
    return a.n == b.n && a.s == b.s && a.rel_of == b.rel_of;
  }
};

struct Violation {
  /// 1 diagonal, 2 transpose, 3 regularity, 0 malformed.
  int axiom = 0;
  std::string message;
  /// Relation ids (i, j, k) involved; unused entries are -1.
  std::array<int, 3> relations{-1, -1, -1};
  /// Offending pairs; for axiom 3 two pairs of relation k with different counts.
  std::vector<std::pair<int, int>> pairs;
};

/// Checks the three axioms by direct counting. On success fills
/// c.intersection and returns nullopt.
std::optional<Violation> validate(CoherentConfig& c);

/// Relation ids reassigned by first occurrence in row-major order.
CoherentConfig canonical_ids(const CoherentConfig& c);

/// Same partition of V x V, ignoring relation ids.
bool same_partition(const std::vector<int>& a, const std::vector<int>& b);

/// Seed labels for [G]: diagonal split by vertex color, off-diagonal pairs by
/// edge code. Labels are ranks of those keys, so isomorphic graphs get
/// matching labels.
std::vector<int> graph_seed(const ColoredGraph& g);

/// Coarsest coherent configuration refining `labels` (n * n entries), by
/// splitting relations on transposes and on non-uniform product counts.
/// Relation ids are ranks of the splitting data; equal seeds up to a point
/// permutation give equal relation ids on corresponding pairs.
CoherentConfig cellular_closure(int n, const std::vector<int>& labels);
/// Seed given as a list of pair sets that must partition V x V.
CoherentConfig cellular_closure(int n, const std::vector<std::vector<std::pair<int, int>>>& seed);

/// Pair coloring of a 2-dim stable coloring viewed as a configuration.
CoherentConfig from_pair_coloring(const TupleColoring& tc);

/// Port labeling: ports[i][t] in {1,2,3} is the label of i's t-th neighbor in
/// ascending order.
using PortLabeling = std::vector<std::array<int, 3>>;
PortLabeling default_ports(const ColoredGraph& g);

/// Klein scheme of a cubic graph on 4 s points; fibre i is 4i..4i+3.
CoherentConfig klein_scheme(const ColoredGraph& g, const PortLabeling& ports = {});

/// Swaps the two relations of every two-relation block touching fibre i.
CoherentConfig psi_twist(const CoherentConfig& c, int fibre);

/// Colored di-graph K(G): pairs in blocks of non-adjacent fibres dropped,
/// everything else off the diagonal becomes an edge colored by relation id.
ColoredGraph scheme_graph(const CoherentConfig& c, const ColoredGraph& g);

/// Merges each group of relation ids into one label; other relations stay
/// separate. Returns seed labels with dense ids.
std::vector<int> merge_relations(const CoherentConfig& c,
                                 const std::vector<std::vector<int>>& groups);

/// Groups for the uncolored variant of K(G): all R1, all R2, all non-edge
/// blocks, E1, E2 and E3 across fibres, and the diagonal.
std::vector<std::vector<int>> klein_merge_groups(const CoherentConfig& c, const ColoredGraph& g);

/// Complete colored di-graph of a labeling: vertex color label(x,x), edge
/// (x,y) colored label(x,y).
ColoredGraph config_graph(int n, const std::vector<int>& labels);

/// `p cc <n> <s>` then `r <x> <y> <rel>` per pair in row-major order.
std::string serialize_scheme(const CoherentConfig& c);
CoherentConfig parse_scheme(std::string_view text);

}  // namespace wlgraph
