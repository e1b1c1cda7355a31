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
#include <utility>
#include <vector>

#include "wlgraph/graph.hpp"

namespace wlgraph {

enum class CfiRole { A, B, M };

struct CfiVertexInfo {
  Vertex origin = 0;
  CfiRole role = CfiRole::A;
  /// Edge slot for A/B vertices (index into the ascending neighbor list).
  int slot = 0;
  /// Even subset of slots for M vertices, as a bitmask.
  std::uint32_t subset = 0;
};

/// Bookkeeping for a CFI graph: which gadget and role every vertex has.
struct CFIMap {
  std::vector<CfiVertexInfo> info;
  /// First CFI vertex of each original vertex's gadget.
  std::vector<Vertex> offset;
  /// Original neighbor lists; slot i of v is neighbors[v][i].
  std::vector<std::vector<Vertex>> neighbors;
  /// Twisted original edges, normalized u < v and sorted.
  std::vector<std::pair<Vertex, Vertex>> twisted;

  Vertex a(Vertex v, int slot) const { return offset[v] + slot; }
  Vertex b(Vertex v, int slot) const {
    return offset[v] + static_cast<Vertex>(neighbors[v].size()) + slot;
  }
  /// Gadget members of original vertex v.
  std::vector<Vertex> fibre(Vertex v) const;
  /// `m <cfi-vertex> <orig> <role>` lines.
  std::string sidecar() const;
};

/// Role label used in the sidecar: A<slot>, B<slot> or M<subset bitmask>.
std::string role_label(const CfiVertexInfo& info);

struct CfiGraph {
  ColoredGraph graph;
  CFIMap map;
};

/// Gadget graph of G with the given original edges twisted. A/B vertices of v
/// are colored 2*color(v), middle vertices 2*color(v)+1. Throws
/// UnsupportedInput for directed or disconnected graphs, vertices of degree
/// < 2 and cycles, InvalidArgument for twists that are not edges of G.
CfiGraph cfi_build(const ColoredGraph& g,
                   std::span<const std::pair<Vertex, Vertex>> twisted = {});

/// Original vertex whose gadget contains x.
Vertex lambda_inverse(const CFIMap& map, Vertex x);

/// cfi_build with no twists, applied `depth` times. Throws ResourceError when
/// an intermediate graph would exceed `max_vertices`.
ColoredGraph iterate_lambda(const ColoredGraph& g, int depth, int max_vertices = 100'000);

/// Vertex count of cfi_build(g): sum over v of 2^(d(v)-1) + 2 d(v).
std::uint64_t cfi_order(const ColoredGraph& g);

/// A single isolated gadget. With `pin_slots` every pair {a_i, b_i} gets its
/// own color, so only the even flips of pairs survive as automorphisms.
ColoredGraph cfi_gadget(int degree, bool pin_slots);

}  // namespace wlgraph
