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

#include "wlgraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "wlgraph/errors.hpp"

namespace wlgraph {

ColoredGraph::ColoredGraph(int n, bool directed, std::vector<Color> vertex_colors,
                           std::vector<Edge> edges)
    : n_(n), directed_(directed), vertex_colors_(std::move(vertex_colors)) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  if (vertex_colors_.empty()) vertex_colors_.assign(n, 0);
  if (static_cast<int>(vertex_colors_.size()) != n) {
    throw InvalidArgument("vertex color table has " +
                          std::to_string(vertex_colors_.size()) + " entries, expected " +
                          std::to_string(n));
  }
  codes_.assign(static_cast<std::size_t>(n) * n, 0);
  neighbors_.assign(n, {});
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") out of range");
    }
    if (e.u == e.v) throw InvalidArgument("self-loop at " + std::to_string(e.u));
    if (!directed && e.u > e.v) std::swap(e.u, e.v);
    auto& slot = codes_[static_cast<std::size_t>(e.u) * n + e.v];
    if (slot != 0) {
      throw InvalidArgument("duplicate edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ")");
    }
    slot = e.color + 1;
    if (!directed) codes_[static_cast<std::size_t>(e.v) * n + e.u] = e.color + 1;
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    neighbors_[e.u].push_back(e.v);
    neighbors_[e.v].push_back(e.u);
  }
  for (auto& nb : neighbors_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

ColoredGraph::ColoredGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges,
                           bool directed)
    : ColoredGraph(n, directed, {}, [&] {
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (auto [u, v] : edges) out.push_back({u, v, 0});
        return out;
      }()) {}

std::optional<Color> ColoredGraph::edge_color(Vertex u, Vertex v) const {
  const auto code = edge_code(u, v);
  if (code == 0) return std::nullopt;
  return code - 1;
}

Color ColoredGraph::max_vertex_color() const {
  return vertex_colors_.empty()
             ? 0
             : *std::max_element(vertex_colors_.begin(), vertex_colors_.end());
}

std::optional<Color> ColoredGraph::max_edge_color() const {
  if (edges_.empty()) return std::nullopt;
  Color best = 0;
  for (const Edge& e : edges_) best = std::max(best, e.color);
  return best;
}

ColoredGraph ColoredGraph::with_vertex_colors(std::vector<Color> colors) const {
  return ColoredGraph(n_, directed_, std::move(colors), edges_);
}

// ---------------------------------------------------------------------------

namespace {

bool parse_uint(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  std::uint64_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + static_cast<unsigned>(c - '0');
    if (value > 0xffffffffull) return false;
  }
  out = value;
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

ColoredGraph parse_graph(std::string_view text) {
  bool have_header = false;
  std::uint64_t n = 0, m = 0, directed = 0;
  std::vector<Color> vertex_colors;
  std::vector<bool> color_seen;
  std::vector<Edge> edges;
  std::vector<std::uint8_t> seen;  // dense duplicate check
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto need = [&](bool ok, const char* what) {
      if (!ok) throw ParseError(line_no, what);
    };
    if (tok[0] == "p") {
      need(!have_header, "duplicate header");
      need(tok.size() == 5 && tok[1] == "wlg", "expected 'p wlg <n> <m> <directed>'");
      need(parse_uint(tok[2], n) && parse_uint(tok[3], m) && parse_uint(tok[4], directed) &&
               directed <= 1,
           "malformed header");
      need(n <= 1u << 15, "vertex count too large");
      have_header = true;
      vertex_colors.assign(n, 0);
      color_seen.assign(n, false);
      seen.assign(n * n, 0);
    } else if (tok[0] == "v") {
      need(have_header, "vertex line before header");
      std::uint64_t v = 0, c = 0;
      need(tok.size() == 3 && parse_uint(tok[1], v) && parse_uint(tok[2], c),
           "expected 'v <index> <color>'");
      need(v < n, "vertex index out of range");
      need(!color_seen[v], "duplicate vertex line");
      color_seen[v] = true;
      vertex_colors[v] = static_cast<Color>(c);
    } else if (tok[0] == "e") {
      need(have_header, "edge line before header");
      std::uint64_t u = 0, v = 0, c = 0;
      need((tok.size() == 3 || tok.size() == 4) && parse_uint(tok[1], u) &&
               parse_uint(tok[2], v) && (tok.size() == 3 || parse_uint(tok[3], c)),
           "expected 'e <u> <v> [color]'");
      need(u < n && v < n, "edge endpoint out of range");
      need(u != v, "self-loop");
      if (!directed && u > v) std::swap(u, v);
      need(!seen[u * n + v], "duplicate edge");
      seen[u * n + v] = 1;
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Color>(c)});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(0, "missing 'p wlg' header");
  if (edges.size() != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return ColoredGraph(static_cast<int>(n), directed == 1, std::move(vertex_colors),
                      std::move(edges));
}

ColoredGraph parse_graph(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

ColoredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_graph(in);
}

std::string serialize(const ColoredGraph& g) {
  std::string out;
  out.reserve(32 + 16 * (g.size() + g.order()));
  out += "p wlg " + std::to_string(g.order()) + " " + std::to_string(g.size()) + " " +
         (g.directed() ? "1" : "0") + "\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.vertex_color(v) != 0) {
      out += "v " + std::to_string(v) + " " + std::to_string(g.vertex_color(v)) + "\n";
    }
  }
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           std::to_string(e.color) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------

ColoredGraph complement(const ColoredGraph& g) {
  if (g.directed()) throw UnsupportedInput("complement requires an undirected graph");
  Color color = 0;
  if (!g.edges().empty()) {
    color = g.edges().front().color;
    for (const Edge& e : g.edges()) {
      if (e.color != color) throw UnsupportedInput("complement requires uncolored edges");
    }
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.push_back({u, v, color});
    }
  }
  return ColoredGraph(g.order(), false, {g.vertex_colors().begin(), g.vertex_colors().end()},
                      std::move(edges));
}

ColoredGraph disjoint_union(const ColoredGraph& g1, const ColoredGraph& g2) {
  if (g1.directed() != g2.directed()) {
    throw UnsupportedInput("disjoint_union of directed and undirected graphs");
  }
  const int shift = g1.order();
  std::vector<Color> colors(g1.vertex_colors().begin(), g1.vertex_colors().end());
  colors.insert(colors.end(), g2.vertex_colors().begin(), g2.vertex_colors().end());
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.push_back({e.u + shift, e.v + shift, e.color});
  return ColoredGraph(g1.order() + g2.order(), g1.directed(), std::move(colors),
                      std::move(edges));
}

ColoredGraph join(const ColoredGraph& g1, const ColoredGraph& g2) {
  if (g1.directed() || g2.directed()) throw UnsupportedInput("join requires undirected graphs");
  const auto m1 = g1.max_edge_color();
  const auto m2 = g2.max_edge_color();
  Color fresh = 0;
  if (m1 || m2) fresh = std::max(m1.value_or(0), m2.value_or(0)) + 1;
  ColoredGraph u = disjoint_union(g1, g2);
  std::vector<Edge> edges = u.edges();
  for (Vertex a = 0; a < g1.order(); ++a) {
    for (Vertex b = 0; b < g2.order(); ++b) edges.push_back({a, g1.order() + b, fresh});
  }
  return ColoredGraph(u.order(), false, {u.vertex_colors().begin(), u.vertex_colors().end()},
                      std::move(edges));
}

ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  std::vector<Color> colors;
  colors.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= g.order()) throw InvalidArgument("vertex out of range");
    if (index[v] != -1) throw InvalidArgument("repeated vertex in induced_subgraph");
    index[v] = static_cast<int>(i);
    colors.push_back(g.vertex_color(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v], e.color});
  }
  return ColoredGraph(static_cast<int>(vertices.size()), g.directed(), std::move(colors),
                      std::move(edges));
}

ColoredGraph permute(const ColoredGraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InvalidArgument("permutation size");
  std::vector<bool> hit(g.order(), false);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || hit[p]) throw InvalidArgument("not a permutation");
    hit[p] = true;
  }
  std::vector<Color> colors(g.order());
  for (Vertex v = 0; v < g.order(); ++v) colors[perm[v]] = g.vertex_color(v);
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.color});
  return ColoredGraph(g.order(), g.directed(), std::move(colors), std::move(edges));
}

Relabeling random_relabel(const ColoredGraph& g, std::uint64_t seed) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return {permute(g, perm), std::move(perm)};
}

std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<Vertex> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex w : g.neighbors(members[i])) {
        if (comp[w] == -1) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const ColoredGraph& g) { return connected_components(g).size() <= 1; }

namespace {

// Largest component of g - removed, measured with an explicit stack.
int largest_component_without(const ColoredGraph& g, const std::vector<char>& removed) {
  std::vector<char> seen(removed);
  std::vector<Vertex> stack;
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    int count = 0;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++count;
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    best = std::max(best, count);
  }
  return best;
}

}  // namespace

std::optional<int> min_separator_size(const ColoredGraph& g, int bound,
                                      std::uint64_t max_subsets) {
  if (g.directed()) throw UnsupportedInput("separator search requires an undirected graph");
  const int n = g.order();
  bound = std::min(bound, n);
  // Total work is the number of subsets of size <= bound.
  double total = 0, binom = 1;
  for (int s = 0; s <= bound; ++s) {
    total += binom;
    binom = binom * (n - s) / (s + 1);
  }
  if (total > static_cast<double>(max_subsets)) {
    throw ResourceError("separator search over " + std::to_string(total) +
                            " subsets exceeds cap " + std::to_string(max_subsets),
                        total);
  }
  std::vector<char> removed(n, 0);
  for (int s = 0; s <= bound; ++s) {
    std::vector<int> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::fill(removed.begin(), removed.end(), 0);
      for (int p : pick) removed[p] = 1;
      if (2 * largest_component_without(g, removed) < n) return s;
      int i = s - 1;
      while (i >= 0 && pick[i] == n - s + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace wlgraph
