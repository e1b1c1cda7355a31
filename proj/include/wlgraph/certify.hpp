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
#include <string>
#include <string_view>
#include <vector>

#include "wlgraph/digest.hpp"
#include "wlgraph/graph.hpp"
#include "wlgraph/oracle.hpp"
#include "wlgraph/refine.hpp"

namespace wlgraph {

enum class Mode { fast, verified, canonical };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view s);

/// WLG_BRANCH_CAP if set, else 200000 search nodes.
std::uint64_t default_branch_cap();

struct CertifyOptions {
  Mode mode = Mode::canonical;
  RefineOptions refine;
  std::uint64_t node_cap = 0;  // 0 selects default_branch_cap()
  bool automorphism_pruning = true;
};

struct TraceLevel {
  /// Vertex partition at this level before individualizing.
  std::vector<ColorId> partition;
  ColorId target_cell = 0;
  int width = 0;
  Vertex individualized = -1;
  /// Verified mode: fast-path digests of the other members of the cell.
  std::vector<Vertex> siblings;
  std::vector<Digest> sibling_digests;
  std::vector<Permutation> sibling_labelings;
};

struct Certificate {
  Digest digest{};
  int k = 0;
  Mode mode = Mode::canonical;
  /// (target cell, width) per individualization level of the returned leaf.
  std::vector<std::pair<ColorId, int>> trace;
  /// Levels along the fast path (fast and verified modes).
  std::vector<TraceLevel> levels;
  /// labeling[v] is the position of v in the leaf order.
  Permutation labeling;
  bool orbit_assumption_failed = false;
  std::uint64_t nodes = 0;
  /// Canonical mode: automorphisms discovered from equal leaves.
  std::vector<Permutation> automorphisms;

  std::string hex() const { return to_hex(digest); }
  std::string trace_text() const;
};

/// v receives color max_vertex_color + 1.
ColoredGraph individualize(const ColoredGraph& g, Vertex v);

/// Individualization-refinement certificate.
Certificate certify(const ColoredGraph& g, int k, const CertifyOptions& opts = {});

/// Automorphisms read off equal-digest sibling leaves in verified mode. Every
/// returned permutation is checked with is_automorphism.
std::vector<Permutation> aut_generators_via_recursion(const ColoredGraph& g, int k,
                                                      const RefineOptions& ropts = {});

/// Invariant of the depth-d variant of 1-dim WL: every d-tuple is
/// individualized in turn and the refined invariants are aggregated sorted.
Digest depth_d_1dim(const ColoredGraph& g, int d, const RefineOptions& ropts = {},
                    std::uint64_t cap = 1'000'000);

}  // namespace wlgraph
