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

#include "wlgraph/cfi.hpp"

#include <algorithm>
#include <bit>

#include "wlgraph/errors.hpp"

namespace wlgraph {

namespace {

constexpr int kMaxGadgetDegree = 20;

std::vector<std::uint32_t> even_subsets(int degree) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << degree); ++s)
    if (std::popcount(s) % 2 == 0) out.push_back(s);
  return out;
}

}  // namespace

std::vector<Vertex> CFIMap::fibre(Vertex v) const {
  const Vertex end = v + 1 < static_cast<Vertex>(offset.size())
                         ? offset[v + 1]
                         : static_cast<Vertex>(info.size());
  std::vector<Vertex> out;
  for (Vertex x = offset[v]; x < end; ++x) out.push_back(x);
  return out;
}

std::string role_label(const CfiVertexInfo& info) {
  switch (info.role) {
    case CfiRole::A: return "A" + std::to_string(info.slot);
    case CfiRole::B: return "B" + std::to_string(info.slot);
    case CfiRole::M: return "M" + std::to_string(info.subset);
  }
  return "?";
}

std::string CFIMap::sidecar() const {
  std::string out;
  for (std::size_t x = 0; x < info.size(); ++x) {
    out += "m " + std::to_string(x) + " " + std::to_string(info[x].origin) + " " +
           role_label(info[x]) + "\n";
  }
  return out;
}

std::uint64_t cfi_order(const ColoredGraph& g) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d < 1 || d > kMaxGadgetDegree) return UINT64_MAX;
    total += (std::uint64_t{1} << (d - 1)) + 2u * d;
  }
  return total;
}

CfiGraph cfi_build(const ColoredGraph& g, std::span<const std::pair<Vertex, Vertex>> twisted) {
  if (g.directed()) throw UnsupportedInput("CFI construction needs an undirected graph");
  const int n = g.order();
  bool all_two = n > 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) {
      throw UnsupportedInput("vertex " + std::to_string(v) + " has degree " +
                             std::to_string(g.degree(v)) + " < 2");
    }
    if (g.degree(v) > kMaxGadgetDegree) throw ResourceError("gadget degree too large", g.degree(v));
    all_two = all_two && g.degree(v) == 2;
  }
  if (all_two) throw UnsupportedInput("CFI construction is trivial on cycles");
  if (!is_connected(g)) throw UnsupportedInput("CFI construction needs a connected graph");

  CfiGraph out;
  CFIMap& map = out.map;
  map.offset.resize(n);
  map.neighbors.resize(n);
  std::vector<Color> colors;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    map.neighbors[v] = g.neighbors(v);
    const int d = g.degree(v);
    map.offset[v] = static_cast<Vertex>(map.info.size());
    const Color ab = 2 * g.vertex_color(v);
    for (int i = 0; i < d; ++i) {
      map.info.push_back({v, CfiRole::A, i, 0});
      colors.push_back(ab);
    }
    for (int i = 0; i < d; ++i) {
      map.info.push_back({v, CfiRole::B, i, 0});
      colors.push_back(ab);
    }
    for (std::uint32_t s : even_subsets(d)) {
      const Vertex m = static_cast<Vertex>(map.info.size());
      map.info.push_back({v, CfiRole::M, 0, s});
      colors.push_back(ab + 1);
      for (int i = 0; i < d; ++i) {
        const Vertex end = (s >> i & 1) ? map.offset[v] + i : map.offset[v] + d + i;
        edges.push_back({std::min(m, end), std::max(m, end), 0});
      }
    }
  }

  for (auto [u, v] : twisted) {
    if (u < 0 || v < 0 || u >= n || v >= n || !g.adjacent(u, v)) {
      throw InvalidArgument("twisted pair " + std::to_string(u) + "-" + std::to_string(v) +
                            " is not an edge");
    }
    map.twisted.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(map.twisted.begin(), map.twisted.end());
  if (std::adjacent_find(map.twisted.begin(), map.twisted.end()) != map.twisted.end()) {
    throw InvalidArgument("edge twisted twice");
  }

  auto slot_of = [&](Vertex v, Vertex w) {
    const auto& nb = map.neighbors[v];
    return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
  };
  for (const Edge& e : g.edges()) {
    const int i = slot_of(e.u, e.v);
    const int j = slot_of(e.v, e.u);
    const bool twist =
        std::binary_search(map.twisted.begin(), map.twisted.end(), std::make_pair(e.u, e.v));
    if (twist) {
      edges.push_back({map.a(e.u, i), map.b(e.v, j), e.color});
      edges.push_back({map.b(e.u, i), map.a(e.v, j), e.color});
    } else {
      edges.push_back({map.a(e.u, i), map.a(e.v, j), e.color});
      edges.push_back({map.b(e.u, i), map.b(e.v, j), e.color});
    }
  }
  const int order = static_cast<int>(map.info.size());
  out.graph = ColoredGraph(order, false, std::move(colors), std::move(edges));
  return out;
}

Vertex lambda_inverse(const CFIMap& map, Vertex x) {
  if (x < 0 || x >= static_cast<Vertex>(map.info.size())) {
    throw InvalidArgument("CFI vertex out of range");
  }
  return map.info[x].origin;
}

ColoredGraph iterate_lambda(const ColoredGraph& g, int depth, int max_vertices) {
  if (depth < 1) throw InvalidArgument("depth must be at least 1");
  ColoredGraph cur = g;
  for (int i = 0; i < depth; ++i) {
    const std::uint64_t next = cfi_order(cur);
    if (next > static_cast<std::uint64_t>(max_vertices)) {
      throw ResourceError("iterated CFI graph would have " + std::to_string(next) +
                              " vertices",
                          static_cast<double>(next));
    }
    cur = cfi_build(cur).graph;
  }
  return cur;
}

ColoredGraph cfi_gadget(int degree, bool pin_slots) {
  if (degree < 1 || degree > kMaxGadgetDegree) throw InvalidArgument("gadget degree");
  std::vector<Color> colors;
  std::vector<Edge> edges;
  for (int i = 0; i < degree; ++i) colors.push_back(pin_slots ? 2 + i : 0);
  for (int i = 0; i < degree; ++i) colors.push_back(pin_slots ? 2 + i : 0);
  for (std::uint32_t s : even_subsets(degree)) {
    const Vertex m = static_cast<Vertex>(colors.size());
    colors.push_back(1);
    for (int i = 0; i < degree; ++i) edges.push_back({(s >> i & 1) ? i : degree + i, m, 0});
  }
  const int n = static_cast<int>(colors.size());
  return ColoredGraph(n, false, std::move(colors), std::move(edges));
}

}  // namespace wlgraph
