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

#include "wlgraph/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "wlgraph/errors.hpp"

namespace wlgraph {

namespace {

int env_int(const char* name, int fallback) {
  if (const char* s = std::getenv(name)) {
    const int v = std::atoi(s);
    if (v > 0) return v;
  }
  return fallback;
}

void check_cap(const ColoredGraph& g, int cap, const char* what) {
  if (g.order() > cap) {
    throw ResourceError(std::string(what) + ": " + std::to_string(g.order()) +
                            " vertices exceeds oracle cap " + std::to_string(cap),
                        g.order());
  }
}

class Matcher {
 public:
  Matcher(const ColoredGraph& g, const ColoredGraph& h) : g_(g), h_(h), n_(g.order()) {}

  std::optional<Permutation> run(std::span<const std::pair<Vertex, Vertex>> fixed) {
    if (!compatible()) return std::nullopt;
    map_.assign(n_, -1);
    used_.assign(n_, 0);
    order_.clear();
    parent_.assign(n_, -1);
    std::vector<char> placed(n_, 0);
    std::vector<Vertex> forced;
    for (auto [a, b] : fixed) {
      if (a < 0 || a >= n_ || b < 0 || b >= n_) throw InvalidArgument("fixed pair out of range");
      if (placed[a]) throw InvalidArgument("vertex fixed twice");
      placed[a] = 1;
      order_.push_back(a);
      forced.push_back(b);
    }
    // BFS order seeded from the prescribed vertices, then from each new root.
    std::size_t head = 0;
    for (Vertex root = -1;;) {
      while (head < order_.size()) {
        const Vertex x = order_[head++];
        for (Vertex y : g_.neighbors(x)) {
          if (!placed[y]) {
            placed[y] = 1;
            parent_[y] = x;
            order_.push_back(y);
          }
        }
      }
      while (++root < n_ && placed[root]) {
      }
      if (root >= n_) break;
      placed[root] = 1;
      order_.push_back(root);
    }
    forced_ = std::move(forced);
    if (!search(0)) return std::nullopt;
    return map_;
  }

 private:
  bool compatible() const {
    if (g_.order() != h_.order() || g_.size() != h_.size() || g_.directed() != h_.directed()) {
      return false;
    }
    auto profile = [](const ColoredGraph& x) {
      std::vector<std::pair<Color, int>> p;
      for (Vertex v = 0; v < x.order(); ++v) p.emplace_back(x.vertex_color(v), x.degree(v));
      std::sort(p.begin(), p.end());
      std::vector<Color> ec;
      for (const Edge& e : x.edges()) ec.push_back(e.color);
      std::sort(ec.begin(), ec.end());
      return std::make_pair(p, ec);
    };
    return profile(g_) == profile(h_);
  }

  bool consistent(std::size_t depth, Vertex x, Vertex y) const {
    if (used_[y] || g_.vertex_color(x) != h_.vertex_color(y) || g_.degree(x) != h_.degree(y)) {
      return false;
    }
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex a = order_[i];
      const Vertex b = map_[a];
      if (g_.edge_code(x, a) != h_.edge_code(y, b) || g_.edge_code(a, x) != h_.edge_code(b, y)) {
        return false;
      }
    }
    return true;
  }

  bool try_assign(std::size_t depth, Vertex x, Vertex y) {
    if (!consistent(depth, x, y)) return false;
    map_[x] = y;
    used_[y] = 1;
    if (search(depth + 1)) return true;
    map_[x] = -1;
    used_[y] = 0;
    return false;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex x = order_[depth];
    if (depth < forced_.size()) return try_assign(depth, x, forced_[depth]);
    if (parent_[x] >= 0) {
      for (Vertex y : h_.neighbors(map_[parent_[x]])) {
        if (try_assign(depth, x, y)) return true;
      }
      return false;
    }
    for (Vertex y = 0; y < n_; ++y) {
      if (try_assign(depth, x, y)) return true;
    }
    return false;
  }

  const ColoredGraph& g_;
  const ColoredGraph& h_;
  int n_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> forced_;
  Permutation map_;
  std::vector<char> used_;
};

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

int default_oracle_cap() { return env_int("WLG_ORACLE_CAP", 12); }
int default_iso_oracle_cap() { return env_int("WLG_ISO_ORACLE_CAP", 40); }

bool is_isomorphism(const ColoredGraph& g, const ColoredGraph& h, std::span<const Vertex> map) {
  const int n = g.order();
  if (h.order() != n || static_cast<int>(map.size()) != n || g.size() != h.size() ||
      g.directed() != h.directed()) {
    return false;
  }
  std::vector<char> hit(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex w = map[v];
    if (w < 0 || w >= n || hit[w]) return false;
    hit[w] = 1;
    if (g.vertex_color(v) != h.vertex_color(w)) return false;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && g.edge_code(u, v) != h.edge_code(map[u], map[v])) return false;
    }
  }
  return true;
}

bool is_automorphism(const ColoredGraph& g, std::span<const Vertex> perm) {
  return is_isomorphism(g, g, perm);
}

std::optional<Permutation> iso_oracle(const ColoredGraph& g, const ColoredGraph& h, int cap) {
  cap = cap > 0 ? cap : default_iso_oracle_cap();
  check_cap(g, cap, "iso_oracle");
  check_cap(h, cap, "iso_oracle");
  return Matcher(g, h).run({});
}

std::optional<Permutation> iso_extending(const ColoredGraph& g, const ColoredGraph& h,
                                         std::span<const std::pair<Vertex, Vertex>> fixed) {
  return Matcher(g, h).run(fixed);
}

std::vector<std::vector<Vertex>> orbits_oracle(const ColoredGraph& g, int cap) {
  cap = cap > 0 ? cap : default_oracle_cap();
  check_cap(g, cap, "orbits_oracle");
  const int n = g.order();
  UnionFind uf(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uf.find(u) == uf.find(v)) continue;
      const std::pair<Vertex, Vertex> pin{u, v};
      if (auto perm = iso_extending(g, g, {&pin, 1})) {
        for (Vertex x = 0; x < n; ++x) uf.unite(x, (*perm)[x]);
      }
    }
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<int> slot(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    const int r = uf.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

std::uint64_t aut_order_oracle(const ColoredGraph& g, int cap) {
  cap = cap > 0 ? cap : default_oracle_cap();
  check_cap(g, cap, "aut_order_oracle");
  const int n = g.order();
  std::vector<std::pair<Vertex, Vertex>> pinned;
  std::uint64_t order = 1;
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t orbit = 0;
    for (Vertex w = 0; w < n; ++w) {
      pinned.emplace_back(v, w);
      if (iso_extending(g, g, pinned)) ++orbit;
      pinned.pop_back();
    }
    order *= orbit;
    pinned.emplace_back(v, v);
  }
  return order;
}

std::uint64_t generated_group_order(int n, const std::vector<Permutation>& gens,
                                    std::uint64_t cap) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& s : gens) {
        Permutation q(n);
        for (int i = 0; i < n; ++i) q[i] = s[p[i]];
        if (seen.insert(q).second) {
          if (seen.size() > cap) throw ResourceError("group closure exceeded cap", seen.size());
          next.push_back(std::move(q));
        }
      }
    }
    frontier.swap(next);
  }
  return seen.size();
}

}  // namespace wlgraph
