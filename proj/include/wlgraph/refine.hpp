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
#include <span>
#include <string>
#include <vector>

#include "wlgraph/digest.hpp"
#include "wlgraph/graph.hpp"

namespace wlgraph {

using ColorId = std::uint32_t;

struct RefineOptions {
  /// Worker threads for signature computation; results do not depend on it.
  int threads = 1;
  /// Keep the color table of every round in TupleColoring::history.
  bool keep_history = false;
  /// Byte budget; 0 means default_memory_budget().
  std::uint64_t memory_budget = 0;
};

/// WLG_MEMORY_BUDGET if set, else 4 GiB.
std::uint64_t default_memory_budget();

/// Stable coloring of ordered k-tuples.
///
/// Tuples are ranked in mixed radix with the last position varying fastest:
/// (x_0, ..., x_{k-1}) -> ((x_0 * n) + x_1) * n + ... .
struct TupleColoring {
  int k = 0;
  int n = 0;
  std::vector<ColorId> color_of;
  ColorId num_colors = 0;
  /// Refinement rounds that strictly split the partition.
  int rounds = 0;
  /// decode[r][c] is the data abbreviated by color c in round r. Round 0 holds
  /// iso-type keys; later rounds hold (previous color, sorted neighbor data).
  std::vector<std::vector<std::vector<std::uint32_t>>> decode;
  /// Per-round color tables when RefineOptions::keep_history is set.
  std::vector<std::vector<ColorId>> history;

  std::size_t index(std::span<const Vertex> tuple) const;
  ColorId color(std::span<const Vertex> tuple) const { return color_of[index(tuple)]; }
  std::vector<Vertex> tuple(std::size_t index) const;
};

struct ProjectedColoring {
  int t = 0;
  int n = 0;
  std::vector<ColorId> color_of;
  ColorId num_colors = 0;
};

/// Canonical key of the iso-type of `tuple`: vertex colors, equality pattern
/// and edge codes in both directions.
std::vector<std::uint32_t> iso_type(const ColoredGraph& g, std::span<const Vertex> tuple);

/// Stable k-dimensional coloring. Throws ResourceError when the estimated
/// footprint exceeds the memory budget.
TupleColoring refine(const ColoredGraph& g, int k, const RefineOptions& opts = {});

/// Bytes refine(g with n vertices, k) is expected to need.
double refine_memory_estimate(int n, int k);

/// Colors of t-tuples (1 <= t <= k) obtained by repeatedly ranking the sorted
/// block of colors of (x, i) over i.
ProjectedColoring project(const TupleColoring& tc, int t);

/// Vertex coloring induced by tc (tc itself when k = 1).
std::vector<ColorId> vertex_partition(const TupleColoring& tc);

/// Colors of the given t-tuples (t > k), built recursively from the iso-type of
/// the tuple and the colors of the sub-tuples obtained by deleting one
/// position. `samples` holds t entries per tuple. Ids are ranks among samples.
std::vector<ColorId> lift(const ColoredGraph& g, const TupleColoring& tc, int t,
                          std::span<const Vertex> samples);

/// True iff G and H have equal multisets of stable k-tuple colors, computed on
/// the disjoint union so that ids are shared.
bool similar(const ColoredGraph& g, const ColoredGraph& h, int k,
             const RefineOptions& opts = {});

/// Isomorphism-invariant digest of a coloring: decode tables and class sizes.
Digest invariant_digest(const TupleColoring& tc);

/// Number of simple paths with `length` edges from u to v. If `character` is
/// non-empty it gives the required color of every vertex along the path
/// (length + 1 entries) under `coloring`.
std::uint64_t count_paths(const ColoredGraph& g, Vertex u, Vertex v, int length,
                          std::span<const ColorId> coloring = {},
                          std::span<const ColorId> character = {},
                          std::uint64_t cap = 100'000'000);

/// One line per tuple: `t <v1> ... <vk> <color>`.
std::string export_coloring(const TupleColoring& tc);

/// Dense ids for an arbitrary vector of keys, ranked lexicographically.
template <class Key>
std::vector<ColorId> rank_keys(const std::vector<Key>& keys);

}  // namespace wlgraph

#include "wlgraph/detail/rank.hpp"
