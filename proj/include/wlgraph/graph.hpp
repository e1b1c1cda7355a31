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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wlgraph {

using Vertex = int;
using Color = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex- and edge-colored simple graph, optionally directed.
///
/// Vertices are 0..n-1. Undirected edges are stored once with u < v; directed
/// edges keep their orientation. Self-loops and parallel edges are rejected at
/// construction. Instances are immutable.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Validates and normalizes. Throws InvalidArgument on self-loops, duplicate
  /// edges or out-of-range endpoints.
  ColoredGraph(int n, bool directed, std::vector<Color> vertex_colors,
               std::vector<Edge> edges);

  /// Uncolored convenience constructor.
  ColoredGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges,
               bool directed = false);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool directed() const { return directed_; }

  Color vertex_color(Vertex v) const { return vertex_colors_[v]; }
  std::span<const Color> vertex_colors() const { return vertex_colors_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// 0 when there is no edge u->v (u-v if undirected), otherwise color + 1.
  std::uint32_t edge_code(Vertex u, Vertex v) const {
    return codes_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool adjacent(Vertex u, Vertex v) const { return edge_code(u, v) != 0; }
  std::optional<Color> edge_color(Vertex u, Vertex v) const;

  /// Vertices joined to v by an edge in either direction, ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }

  Color max_vertex_color() const;
  /// Largest edge color, or nullopt for an edgeless graph.
  std::optional<Color> max_edge_color() const;

  ColoredGraph with_vertex_colors(std::vector<Color> colors) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ &&
           a.vertex_colors_ == b.vertex_colors_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  bool directed_ = false;
  std::vector<Color> vertex_colors_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> codes_;
  std::vector<std::vector<Vertex>> neighbors_;
};

// WLG text format ------------------------------------------------------------

ColoredGraph parse_graph(std::string_view text);
ColoredGraph parse_graph(std::istream& in);
ColoredGraph read_graph_file(const std::string& path);

/// Canonical serialization: header, nonzero `v` lines ascending, then `e`
/// lines ascending. parse_graph(serialize(g)) == g.
std::string serialize(const ColoredGraph& g);

// Combinators ----------------------------------------------------------------

/// Edges and non-edges switched. Requires an undirected graph whose edges all
/// share one color; the complement reuses that color.
ColoredGraph complement(const ColoredGraph& g);

/// Disjoint union plus every cross edge, colored with a fresh edge color.
ColoredGraph join(const ColoredGraph& g1, const ColoredGraph& g2);

/// Vertex-disjoint union; g2's vertices are shifted by g1.order().
ColoredGraph disjoint_union(const ColoredGraph& g1, const ColoredGraph& g2);

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> vertices);

/// Relabels vertex v as perm[v]. `perm` must be a permutation of 0..n-1.
ColoredGraph permute(const ColoredGraph& g, std::span<const Vertex> perm);

struct Relabeling {
  ColoredGraph graph;
  std::vector<Vertex> perm;  // old index -> new index
};

/// Uniform seed-deterministic relabeling.
Relabeling random_relabel(const ColoredGraph& g, std::uint64_t seed);

/// Components as ascending vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& g);
bool is_connected(const ColoredGraph& g);

/// Smallest |S| such that every component of G - S has fewer than |V|/2
/// vertices, by exhaustive subset search. Returns nullopt when no separator of
/// size <= bound exists. Throws ResourceError when the number of subsets to
/// examine exceeds `max_subsets`.
std::optional<int> min_separator_size(const ColoredGraph& g, int bound,
                                      std::uint64_t max_subsets = 50'000'000);

}  // namespace wlgraph
