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
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wlgraph/certify.hpp"
#include "wlgraph/digest.hpp"
#include "wlgraph/graph.hpp"
#include "wlgraph/refine.hpp"

namespace wlgraph {

/// A vertex subset together with what is known about it.
struct CWSRecord {
  std::vector<Vertex> vertices;  // ascending
  bool prime = false;
  /// Generating pair when built by closure, else (-1, -1).
  std::pair<Vertex, Vertex> source{-1, -1};
};

/// Same-colored members of S attach identically (edge codes in both
/// directions) to every vertex outside S.
bool is_cws(const ColoredGraph& g, std::span<const ColorId> coloring,
            std::span<const Vertex> s);

/// Smallest CWS superset of S, ascending.
std::vector<Vertex> closure(const ColoredGraph& g, std::span<const ColorId> coloring,
                            std::span<const Vertex> s);

/// S is a CWS set with 2 <= |S| < n, holds a same-colored pair, and every
/// same-colored pair inside it closes to all of S.
bool is_prime(const ColoredGraph& g, std::span<const ColorId> coloring,
              std::span<const Vertex> s);

/// Closure of {v, w} for every other member w of v's class, in order of w.
std::vector<CWSRecord> cws_spectrum(const ColoredGraph& g, std::span<const ColorId> coloring,
                                    Vertex v);

/// Outcome of checking a supplied pair R, S with map theta[i] = image of R[i].
struct MutualCWS {
  bool disjoint = false;
  /// R[i] and theta[i] share a color when R and S are refined side by side.
  bool equivalent = false;
  /// Vertices of R equal within R stay equal in G; same for S.
  bool r_cws = false;
  bool s_cws = false;
  /// R[i] and theta[i] share their color in G.
  bool matched = false;

  bool holds() const { return disjoint && equivalent && r_cws && s_cws && matched; }
};

/// Checks the mutual CWS conditions for explicitly given R, S and theta.
/// Throws InvalidArgument if theta is not a bijection onto S.
MutualCWS mutually_cws(const ColoredGraph& g, std::span<const Vertex> r,
                       std::span<const Vertex> s, std::span<const Vertex> theta, int k,
                       const RefineOptions& ropts = {});

/// Result of contracting disjoint CWS sets.
struct Contraction {
  ColoredGraph graph;
  /// Old vertex -> new vertex.
  std::vector<Vertex> vertex_map;
  /// Certificate digest -> vertex color of the contracted vertex.
  std::map<Digest, Color> vertex_colors;
  /// Attachment profile -> edge color.
  std::map<std::vector<std::uint32_t>, Color> edge_colors;
};

/// Replaces each set by one vertex colored by its certificate and joins it to
/// the rest by edges colored by the attachment profile. Kept vertices come
/// first in ascending order, then one vertex per set. Throws InvalidArgument if
/// a set is not CWS under `coloring` or sets overlap.
Contraction contract_all(const ColoredGraph& g, const std::vector<std::vector<Vertex>>& sets,
                         std::span<const ColorId> coloring, const std::vector<Digest>& certs);

/// Single-set contraction using a canonical certificate of dimension k.
ColoredGraph contract(const ColoredGraph& g, std::span<const ColorId> coloring,
                      const CWSRecord& s, int k);

struct ReduceOptions {
  int k = 2;
  RefineOptions refine;
  std::uint64_t node_cap = 0;
  /// Largest union of overlapping prime closures examined.
  int overlap_cap = 64;
  /// Highest dimension used when escalating subgraph certificates.
  int max_dimension = 4;
};

/// Sets contracted by one normalization pass.
struct NormalizeStep {
  ColoredGraph before;
  std::vector<std::vector<Vertex>> sets;
  std::vector<Digest> certificates;
  Contraction result;
};

/// Maximal same-colored twin classes (every subset CWS), contracted until none
/// remain.
ColoredGraph normalize_cliques(const ColoredGraph& g, const ReduceOptions& opts = {},
                               std::vector<NormalizeStep>* steps = nullptr);

/// Overlapping prime closures grouped into a region R whose blocks R_x are
/// contracted; alternates with normalize_cliques until stable.
ColoredGraph normalize_overlaps(const ColoredGraph& g, const ReduceOptions& opts = {},
                                std::vector<NormalizeStep>* steps = nullptr);

/// Both normalizations to a fixpoint.
ColoredGraph normalize(const ColoredGraph& g, const ReduceOptions& opts = {},
                       std::vector<NormalizeStep>* steps = nullptr);

/// Unique prime closures found by scanning color classes in id order. Throws
/// Error when a vertex has two different prime closures.
std::vector<CWSRecord> decompose(const ColoredGraph& g, int k, const RefineOptions& ropts = {});

struct DecompositionLevel {
  ColoredGraph graph;
  std::vector<NormalizeStep> normalization;
  ColoredGraph normalized;
  std::vector<CWSRecord> pieces;
  std::vector<Digest> certificates;
  std::vector<int> dimensions;
  Contraction contraction;
  bool changed = false;
};

struct DecompositionTree {
  std::vector<DecompositionLevel> levels;
  ColoredGraph terminal;
  Certificate terminal_certificate;
  int depth = 0;
  Digest digest{};

  std::string text() const;
};

/// Certificate of a subgraph: canonical mode at k, or at a higher dimension
/// when verified mode at k reports that the orbit assumption fails.
std::pair<Certificate, int> subgraph_certificate(const ColoredGraph& h, int k,
                                                 const ReduceOptions& opts);

DecompositionTree reduce(const ColoredGraph& g, const ReduceOptions& opts = {});

}  // namespace wlgraph
