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

#include "wlgraph/certify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "wlgraph/errors.hpp"

namespace wlgraph {

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::fast: return "fast";
    case Mode::verified: return "verified";
    case Mode::canonical: return "canonical";
  }
  return "?";
}

Mode parse_mode(std::string_view s) {
  if (s == "fast") return Mode::fast;
  if (s == "verified") return Mode::verified;
  if (s == "canonical") return Mode::canonical;
  throw InvalidArgument("unknown mode '" + std::string(s) + "'");
}

std::uint64_t default_branch_cap() {
  if (const char* env = std::getenv("WLG_BRANCH_CAP")) {
    const unsigned long long v = std::strtoull(env, nullptr, 10);
    if (v > 0) return v;
  }
  return 200'000;
}

ColoredGraph individualize(const ColoredGraph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw InvalidArgument("individualize: vertex out of range");
  std::vector<Color> colors(g.vertex_colors().begin(), g.vertex_colors().end());
  colors[v] = g.max_vertex_color() + 1;
  return g.with_vertex_colors(std::move(colors));
}

std::string Certificate::trace_text() const {
  std::ostringstream out;
  out << "mode " << to_string(mode) << " k " << k << " nodes " << nodes << "\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << "  level " << i << " cell " << trace[i].first << " width " << trace[i].second;
    if (i < levels.size()) out << " pick " << levels[i].individualized;
    out << "\n";
    if (i < levels.size()) {
      const TraceLevel& L = levels[i];
      for (std::size_t s = 0; s < L.siblings.size() && s < L.sibling_digests.size(); ++s) {
        out << "    sibling " << L.siblings[s] << " " << to_hex(L.sibling_digests[s]) << "\n";
      }
    }
  }
  if (mode == Mode::verified) {
    out << "  orbit-assumption " << (orbit_assumption_failed ? "failed" : "held") << "\n";
  }
  return out.str();
}

namespace {

struct NodeView {
  std::vector<ColorId> partition;
  bool discrete = false;
  ColorId target = 0;
  std::vector<Vertex> cell;
};

NodeView inspect(const TupleColoring& tc) {
  NodeView view;
  view.partition = vertex_partition(tc);
  const int n = tc.n;
  std::vector<int> sizes(n + 1, 0);
  ColorId top = 0;
  for (ColorId c : view.partition) {
    ++sizes[c];
    top = std::max(top, c);
  }
  view.discrete = true;
  for (ColorId c = 0; c <= top && n > 0; ++c) {
    if (sizes[c] >= 2) {
      view.discrete = false;
      view.target = c;
      break;
    }
  }
  if (!view.discrete) {
    for (Vertex v = 0; v < n; ++v)
      if (view.partition[v] == view.target) view.cell.push_back(v);
  }
  return view;
}

class Searcher {
 public:
  Searcher(const ColoredGraph& g, int k, const CertifyOptions& opts)
      : g_(g), k_(k), opts_(opts),
        cap_(opts.node_cap ? opts.node_cap : default_branch_cap()) {}

  struct Leaf {
    Digest digest{};
    Permutation labeling;
    std::string serialized;
  };

  TupleColoring refine_node(const ColoredGraph& h) {
    if (++nodes_ > cap_) {
      throw ResourceError("individualization search exceeded " + std::to_string(cap_) +
                              " nodes",
                          static_cast<double>(nodes_));
    }
    return refine(h, k_, opts_.refine);
  }

  Leaf make_leaf(const std::vector<ColorId>& partition) {
    Leaf leaf;
    leaf.labeling.assign(partition.begin(), partition.end());
    leaf.serialized = serialize(permute(g_, leaf.labeling));
    leaf.digest = sha256(leaf.serialized);
    return leaf;
  }

  // Follows the smallest vertex of each target cell.
  Leaf fast_leaf(ColoredGraph h, std::vector<TraceLevel>* levels,
                 std::vector<std::pair<ColorId, int>>* trace) {
    while (true) {
      NodeView view = inspect(refine_node(h));
      if (view.discrete) return make_leaf(view.partition);
      const Vertex pick = view.cell.front();
      if (trace) trace->emplace_back(view.target, static_cast<int>(view.cell.size()));
      if (levels) {
        TraceLevel level;
        level.target_cell = view.target;
        level.width = static_cast<int>(view.cell.size());
        level.individualized = pick;
        level.partition = std::move(view.partition);
        level.siblings.assign(view.cell.begin() + 1, view.cell.end());
        levels->push_back(std::move(level));
      }
      h = individualize(h, pick);
    }
  }

  Certificate run_fast(bool verify) {
    Certificate cert;
    cert.k = k_;
    cert.mode = verify ? Mode::verified : Mode::fast;
    Leaf main = fast_leaf(g_, &cert.levels, &cert.trace);
    cert.digest = main.digest;
    cert.labeling = main.labeling;
    if (verify) {
      ColoredGraph h = g_;
      for (TraceLevel& level : cert.levels) {
        for (Vertex s : level.siblings) {
          Leaf other = fast_leaf(individualize(h, s), nullptr, nullptr);
          if (other.digest != main.digest) cert.orbit_assumption_failed = true;
          level.sibling_digests.push_back(other.digest);
          level.sibling_labelings.push_back(std::move(other.labeling));
        }
        h = individualize(h, level.individualized);
      }
    }
    cert.nodes = nodes_;
    return cert;
  }

  // Canonical search -------------------------------------------------------

  struct Best {
    bool set = false;
    std::vector<Digest> path;
    std::vector<std::pair<ColorId, int>> trace;
    Leaf leaf;
  };

  // -1: path precedes best, 0: undecided, 1: path is worse than best.
  int compare_prefix(const std::vector<Digest>& path) const {
    if (!best_.set) return 0;
    const std::size_t common = std::min(path.size(), best_.path.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (path[i] != best_.path[i]) return path[i] < best_.path[i] ? -1 : 1;
    }
    if (best_.path.size() < path.size()) return 1;
    return 0;
  }

  void record_automorphism(const Permutation& labeling) {
    // labeling maps to the same serialized graph as best_.leaf.labeling.
    const int n = g_.order();
    Permutation inverse(n);
    for (Vertex v = 0; v < n; ++v) inverse[best_.leaf.labeling[v]] = v;
    Permutation gamma(n);
    for (Vertex v = 0; v < n; ++v) gamma[v] = inverse[labeling[v]];
    bool identity = true;
    for (Vertex v = 0; v < n && identity; ++v) identity = gamma[v] == v;
    if (!identity && is_automorphism(g_, gamma)) automorphisms_.push_back(std::move(gamma));
  }

  // Orbit of each cell member under stored automorphisms fixing `prefix`.
  std::vector<int> stabilizer_orbits(const std::vector<Vertex>& prefix) const {
    const int n = g_.order();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Permutation& a : automorphisms_) {
      bool fixes = true;
      for (Vertex p : prefix) fixes = fixes && a[p] == p;
      if (!fixes) continue;
      for (Vertex v = 0; v < n; ++v) {
        const int x = find(v), y = find(a[v]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
    std::vector<int> root(n);
    for (Vertex v = 0; v < n; ++v) root[v] = find(v);
    return root;
  }

  void dfs(const ColoredGraph& h, std::vector<Digest>& path, std::vector<Vertex>& prefix,
           std::vector<std::pair<ColorId, int>>& trace) {
    const TupleColoring tc = refine_node(h);
    path.push_back(invariant_digest(tc));
    const int verdict = compare_prefix(path);
    if (verdict > 0) {
      path.pop_back();
      return;
    }
    NodeView view = inspect(tc);
    if (view.discrete) {
      Leaf leaf = make_leaf(view.partition);
      const bool better = !best_.set || verdict < 0 || path < best_.path ||
                          (path == best_.path && leaf.serialized < best_.leaf.serialized);
      if (better) {
        best_.set = true;
        best_.path = path;
        best_.trace = trace;
        best_.leaf = std::move(leaf);
      } else if (path == best_.path && leaf.serialized == best_.leaf.serialized) {
        record_automorphism(leaf.labeling);
      }
      path.pop_back();
      return;
    }
    trace.emplace_back(view.target, static_cast<int>(view.cell.size()));
    std::vector<Vertex> explored;
    for (Vertex c : view.cell) {
      if (opts_.automorphism_pruning && !explored.empty() && !automorphisms_.empty()) {
        const auto orbit = stabilizer_orbits(prefix);
        bool covered = false;
        for (Vertex e : explored) covered = covered || orbit[e] == orbit[c];
        if (covered) continue;
      }
      explored.push_back(c);
      prefix.push_back(c);
      dfs(individualize(h, c), path, prefix, trace);
      prefix.pop_back();
    }
    trace.pop_back();
    path.pop_back();
  }

  Certificate run_canonical() {
    std::vector<Digest> path;
    std::vector<Vertex> prefix;
    std::vector<std::pair<ColorId, int>> trace;
    dfs(g_, path, prefix, trace);
    Certificate cert;
    cert.k = k_;
    cert.mode = Mode::canonical;
    cert.digest = best_.leaf.digest;
    cert.labeling = best_.leaf.labeling;
    cert.trace = best_.trace;
    cert.nodes = nodes_;
    cert.automorphisms = std::move(automorphisms_);
    return cert;
  }

 private:
  const ColoredGraph& g_;
  int k_;
  CertifyOptions opts_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  Best best_;
  std::vector<Permutation> automorphisms_;
};

}  // namespace

Certificate certify(const ColoredGraph& g, int k, const CertifyOptions& opts) {
  if (k < 1 || k > 4) throw InvalidArgument("dimension must be in [1, 4]");
  Searcher s(g, k, opts);
  switch (opts.mode) {
    case Mode::fast: return s.run_fast(false);
    case Mode::verified: return s.run_fast(true);
    case Mode::canonical: return s.run_canonical();
  }
  throw InvalidArgument("unknown mode");
}

std::vector<Permutation> aut_generators_via_recursion(const ColoredGraph& g, int k,
                                                      const RefineOptions& ropts) {
  CertifyOptions opts;
  opts.mode = Mode::verified;
  opts.refine = ropts;
  const Certificate cert = certify(g, k, opts);
  const int n = g.order();
  Permutation inverse(n);
  for (Vertex v = 0; v < n; ++v) inverse[cert.labeling[v]] = v;
  std::vector<Permutation> out;
  for (const TraceLevel& level : cert.levels) {
    for (std::size_t s = 0; s < level.siblings.size(); ++s) {
      if (level.sibling_digests[s] != cert.digest) continue;
      const Permutation& other = level.sibling_labelings[s];
      Permutation gamma(n);
      for (Vertex v = 0; v < n; ++v) gamma[v] = inverse[other[v]];
      if (is_automorphism(g, gamma)) out.push_back(std::move(gamma));
    }
  }
  return out;
}

Digest depth_d_1dim(const ColoredGraph& g, int d, const RefineOptions& ropts,
                    std::uint64_t cap) {
  if (d < 0) throw InvalidArgument("depth must be non-negative");
  const int n = g.order();
  double count = 1;
  for (int i = 0; i < d; ++i) count *= n;
  if (count > static_cast<double>(cap)) {
    throw ResourceError("depth-" + std::to_string(d) + " stabilisation needs " +
                            std::to_string(static_cast<std::uint64_t>(count)) + " runs",
                        count);
  }
  std::vector<Digest> parts;
  std::vector<Vertex> tuple(d, 0);
  const std::size_t total = static_cast<std::size_t>(count);
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t r = t;
    for (int j = d - 1; j >= 0; --j) {
      tuple[j] = static_cast<Vertex>(r % n);
      r /= n;
    }
    ColoredGraph h = g;
    for (Vertex v : tuple) h = individualize(h, v);
    parts.push_back(invariant_digest(refine(h, 1, ropts)));
  }
  std::sort(parts.begin(), parts.end());
  Hasher hasher;
  hasher.update("wlg-depth-1dim").update_u64(d).update_u64(n);
  for (const Digest& p : parts) hasher.update(p);
  return hasher.finish();
}

}  // namespace wlgraph
