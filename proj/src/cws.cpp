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

#include "wlgraph/cws.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "wlgraph/errors.hpp"

namespace wlgraph {

namespace {

bool same_attachment(const ColoredGraph& g, Vertex x, Vertex y, Vertex w) {
  return g.edge_code(x, w) == g.edge_code(y, w) && g.edge_code(w, x) == g.edge_code(w, y);
}

void check_coloring(const ColoredGraph& g, std::span<const ColorId> coloring) {
  if (static_cast<int>(coloring.size()) != g.order()) {
    throw InvalidArgument("coloring must have one entry per vertex");
  }
}

std::vector<char> membership(const ColoredGraph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw InvalidArgument("subset vertex out of range");
    in[v] = 1;
  }
  return in;
}

bool has_same_colored_pair(std::span<const ColorId> coloring, std::span<const Vertex> s) {
  std::set<ColorId> seen;
  for (Vertex v : s)
    if (!seen.insert(coloring[v]).second) return true;
  return false;
}

std::vector<std::vector<Vertex>> classes_of(std::span<const ColorId> coloring) {
  ColorId top = 0;
  for (ColorId c : coloring) top = std::max(top, c);
  std::vector<std::vector<Vertex>> out(coloring.empty() ? 0 : top + 1);
  for (std::size_t v = 0; v < coloring.size(); ++v) out[coloring[v]].push_back(static_cast<Vertex>(v));
  return out;
}

class PrimeMemo {
 public:
  PrimeMemo(const ColoredGraph& g, std::span<const ColorId> coloring)
      : g_(g), coloring_(coloring) {}
  bool operator()(const std::vector<Vertex>& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    const bool p = is_prime(g_, coloring_, s);
    memo_.emplace(s, p);
    return p;
  }

 private:
  const ColoredGraph& g_;
  std::span<const ColorId> coloring_;
  std::map<std::vector<Vertex>, bool> memo_;
};

std::vector<ColorId> stable_vertex_coloring(const ColoredGraph& g, const ReduceOptions& opts) {
  return vertex_partition(refine(g, opts.k, opts.refine));
}

}  // namespace

bool is_cws(const ColoredGraph& g, std::span<const ColorId> coloring,
            std::span<const Vertex> s) {
  check_coloring(g, coloring);
  const auto in = membership(g, s);
  std::map<ColorId, Vertex> rep;
  for (Vertex v : s) {
    auto [it, fresh] = rep.emplace(coloring[v], v);
    if (fresh) continue;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (!in[w] && !same_attachment(g, it->second, v, w)) return false;
    }
  }
  return true;
}

std::vector<Vertex> closure(const ColoredGraph& g, std::span<const ColorId> coloring,
                            std::span<const Vertex> s) {
  check_coloring(g, coloring);
  const int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Vertex> members;
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw InvalidArgument("subset vertex out of range");
    if (!in[v]) {
      in[v] = 1;
      members.push_back(v);
    }
  }
  // A difference between same-colored x, y at w implies one between the
  // class representative and x or y, so comparing against it suffices.
  std::map<ColorId, Vertex> rep;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Vertex v = members[i];
    auto [it, fresh] = rep.emplace(coloring[v], v);
    if (fresh) continue;
    for (Vertex w = 0; w < n; ++w) {
      if (!in[w] && !same_attachment(g, it->second, v, w)) {
        in[w] = 1;
        members.push_back(w);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_prime(const ColoredGraph& g, std::span<const ColorId> coloring,
              std::span<const Vertex> s) {
  check_coloring(g, coloring);
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 2 || static_cast<int>(sorted.size()) >= g.order()) return false;
  if (!has_same_colored_pair(coloring, sorted) || !is_cws(g, coloring, sorted)) return false;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (coloring[sorted[i]] != coloring[sorted[j]]) continue;
      const Vertex pair[2] = {sorted[i], sorted[j]};
      if (closure(g, coloring, pair).size() != sorted.size()) return false;
    }
  }
  return true;
}

std::vector<CWSRecord> cws_spectrum(const ColoredGraph& g, std::span<const ColorId> coloring,
                                    Vertex v) {
  check_coloring(g, coloring);
  if (v < 0 || v >= g.order()) throw InvalidArgument("vertex out of range");
  std::vector<CWSRecord> out;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == v || coloring[w] != coloring[v]) continue;
    const Vertex pair[2] = {v, w};
    CWSRecord r;
    r.vertices = closure(g, coloring, pair);
    r.prime = is_prime(g, coloring, r.vertices);
    r.source = {v, w};
    out.push_back(std::move(r));
  }
  return out;
}

MutualCWS mutually_cws(const ColoredGraph& g, std::span<const Vertex> r,
                       std::span<const Vertex> s, std::span<const Vertex> theta, int k,
                       const RefineOptions& ropts) {
  const int n = g.order();
  if (theta.size() != r.size() || s.size() != r.size()) {
    throw InvalidArgument("theta must map R onto S");
  }
  const auto in_r = membership(g, r);
  const auto in_s = membership(g, s);
  std::vector<Vertex> image(theta.begin(), theta.end());
  std::sort(image.begin(), image.end());
  std::vector<Vertex> sorted_s(s.begin(), s.end());
  std::sort(sorted_s.begin(), sorted_s.end());
  if (image != sorted_s || std::adjacent_find(image.begin(), image.end()) != image.end()) {
    throw InvalidArgument("theta must map R onto S");
  }

  MutualCWS out;
  out.disjoint = true;
  for (Vertex v = 0; v < n; ++v) out.disjoint = out.disjoint && !(in_r[v] && in_s[v]);

  const std::size_t m = r.size();
  const ColoredGraph rg = induced_subgraph(g, r);
  const ColoredGraph sg = induced_subgraph(g, s);
  const auto side = vertex_partition(refine(disjoint_union(rg, sg), k, ropts));
  std::vector<int> pos_s(n, -1);
  for (std::size_t i = 0; i < m; ++i) pos_s[s[i]] = static_cast<int>(i);
  out.equivalent = true;
  for (std::size_t i = 0; i < m; ++i)
    out.equivalent = out.equivalent && side[i] == side[m + pos_s[theta[i]]];

  const auto whole = vertex_partition(refine(g, k, ropts));
  auto stays = [&](const ColoredGraph& h, std::span<const Vertex> verts) {
    const auto local = vertex_partition(refine(h, k, ropts));
    std::map<ColorId, ColorId> seen;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      auto [it, fresh] = seen.emplace(local[i], whole[verts[i]]);
      if (!fresh && it->second != whole[verts[i]]) return false;
    }
    return true;
  };
  out.r_cws = stays(rg, r);
  out.s_cws = stays(sg, s);
  out.matched = true;
  for (std::size_t i = 0; i < m; ++i) out.matched = out.matched && whole[r[i]] == whole[theta[i]];
  return out;
}

Contraction contract_all(const ColoredGraph& g, const std::vector<std::vector<Vertex>>& sets,
                         std::span<const ColorId> coloring, const std::vector<Digest>& certs) {
  check_coloring(g, coloring);
  if (certs.size() != sets.size()) throw InvalidArgument("one certificate per set required");
  const int n = g.order();
  std::vector<int> set_of(n, -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw InvalidArgument("empty contraction set");
    for (Vertex v : sets[i]) {
      if (v < 0 || v >= n) throw InvalidArgument("contraction vertex out of range");
      if (set_of[v] != -1) throw InvalidArgument("contraction sets overlap");
      set_of[v] = static_cast<int>(i);
    }
    if (!is_cws(g, coloring, sets[i])) throw InvalidArgument("contraction set is not CWS");
  }

  Contraction out;
  out.vertex_map.assign(n, -1);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (set_of[v] == -1) out.vertex_map[v] = next++;
  const Vertex first_set = next;
  for (Vertex v = 0; v < n; ++v)
    if (set_of[v] != -1) out.vertex_map[v] = first_set + set_of[v];
  const int order = first_set + static_cast<int>(sets.size());

  const Color base_vertex = g.max_vertex_color() + 1;
  for (const Digest& d : certs) out.vertex_colors.emplace(d, 0);
  {
    Color c = base_vertex;
    for (auto& [d, color] : out.vertex_colors) color = c++;
  }
  std::vector<Color> colors(order);
  for (Vertex v = 0; v < n; ++v)
    if (set_of[v] == -1) colors[out.vertex_map[v]] = g.vertex_color(v);
  std::vector<int> cert_rank(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    colors[first_set + i] = out.vertex_colors[certs[i]];
    cert_rank[i] = static_cast<int>(out.vertex_colors[certs[i]] - base_vertex);
  }

  // Attachment profiles, deduplicated per color class.
  struct Pending {
    Vertex a, b;
    std::vector<std::uint32_t> key;
  };
  std::vector<Pending> pending;
  for (Vertex w = 0; w < n; ++w) {
    if (set_of[w] != -1) continue;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::set<std::array<std::uint32_t, 3>> triples;
      for (Vertex x : sets[i]) {
        const auto out_code = g.edge_code(w, x), in_code = g.edge_code(x, w);
        if (out_code || in_code) triples.insert({coloring[x], out_code, in_code});
      }
      if (triples.empty()) continue;
      std::vector<std::uint32_t> key{0};
      for (const auto& t : triples) key.insert(key.end(), t.begin(), t.end());
      pending.push_back({out.vertex_map[w], first_set + static_cast<Vertex>(i), std::move(key)});
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::set<std::array<std::uint32_t, 4>> fwd, bwd;
      for (Vertex x : sets[i]) {
        for (Vertex y : sets[j]) {
          const auto xy = g.edge_code(x, y), yx = g.edge_code(y, x);
          if (!xy && !yx) continue;
          fwd.insert({coloring[x], coloring[y], xy, yx});
          bwd.insert({coloring[y], coloring[x], yx, xy});
        }
      }
      if (fwd.empty()) continue;
      std::vector<std::uint32_t> kf{1, static_cast<std::uint32_t>(cert_rank[i]),
                                    static_cast<std::uint32_t>(cert_rank[j])};
      std::vector<std::uint32_t> kb{1, static_cast<std::uint32_t>(cert_rank[j]),
                                    static_cast<std::uint32_t>(cert_rank[i])};
      for (const auto& t : fwd) kf.insert(kf.end(), t.begin(), t.end());
      for (const auto& t : bwd) kb.insert(kb.end(), t.begin(), t.end());
      pending.push_back({first_set + static_cast<Vertex>(i), first_set + static_cast<Vertex>(j),
                         std::min(kf, kb)});
    }
  }
  const auto max_edge = g.max_edge_color();
  const Color base_edge = max_edge ? *max_edge + 1 : 0;
  for (const Pending& p : pending) out.edge_colors.emplace(p.key, 0);
  {
    Color c = base_edge;
    for (auto& [key, color] : out.edge_colors) color = c++;
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (set_of[e.u] == -1 && set_of[e.v] == -1) {
      edges.push_back({out.vertex_map[e.u], out.vertex_map[e.v], e.color});
    }
  }
  for (const Pending& p : pending) {
    const Color c = out.edge_colors[p.key];
    edges.push_back({p.a, p.b, c});
    if (g.directed()) edges.push_back({p.b, p.a, c});
  }
  out.graph = ColoredGraph(order, g.directed(), std::move(colors), std::move(edges));
  return out;
}

std::pair<Certificate, int> subgraph_certificate(const ColoredGraph& h, int k,
                                                 const ReduceOptions& opts) {
  CertifyOptions copts;
  copts.refine = opts.refine;
  copts.node_cap = opts.node_cap;
  copts.mode = Mode::canonical;
  Certificate canon = certify(h, k, copts);
  if (k >= opts.max_dimension) return {std::move(canon), k};
  // Verified mode on the canonical form keeps the escalation decision
  // independent of the input labeling.
  copts.mode = Mode::verified;
  const Certificate check = certify(permute(h, canon.labeling), k, copts);
  if (!check.orbit_assumption_failed) return {std::move(canon), k};
  copts.mode = Mode::canonical;
  return {certify(h, k + 1, copts), k + 1};
}

ColoredGraph contract(const ColoredGraph& g, std::span<const ColorId> coloring,
                      const CWSRecord& s, int k) {
  ReduceOptions opts;
  opts.k = k;
  const auto cert = subgraph_certificate(induced_subgraph(g, s.vertices), k, opts).first;
  return contract_all(g, {s.vertices}, coloring, {cert.digest}).graph;
}

namespace {

NormalizeStep contract_sets(const ColoredGraph& g, std::vector<std::vector<Vertex>> sets,
                            std::span<const ColorId> coloring, const ReduceOptions& opts) {
  NormalizeStep step;
  step.before = g;
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  for (const auto& s : sets) {
    step.certificates.push_back(
        subgraph_certificate(induced_subgraph(g, s), opts.k, opts).first.digest);
  }
  step.sets = std::move(sets);
  step.result = contract_all(g, step.sets, coloring, step.certificates);
  return step;
}

bool twins(const ColoredGraph& g, Vertex x, Vertex y) {
  if (g.edge_code(x, y) != g.edge_code(y, x)) return false;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w != x && w != y && !same_attachment(g, x, y, w)) return false;
  }
  return true;
}

}  // namespace

ColoredGraph normalize_cliques(const ColoredGraph& g, const ReduceOptions& opts,
                               std::vector<NormalizeStep>* steps) {
  ColoredGraph cur = g;
  while (true) {
    const auto coloring = stable_vertex_coloring(cur, opts);
    std::vector<std::vector<Vertex>> sets;
    for (const auto& cls : classes_of(coloring)) {
      std::vector<char> used(cls.size(), 0);
      for (std::size_t i = 0; i < cls.size(); ++i) {
        if (used[i]) continue;
        std::vector<Vertex> group{cls[i]};
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          if (!used[j] && twins(cur, cls[i], cls[j])) {
            used[j] = 1;
            group.push_back(cls[j]);
          }
        }
        // Twins of a common vertex are twins of each other; keep the check
        // explicit since edge colors are involved.
        bool clique = group.size() >= 2;
        for (std::size_t a = 1; a < group.size() && clique; ++a)
          for (std::size_t b = a + 1; b < group.size() && clique; ++b)
            clique = twins(cur, group[a], group[b]);
        if (clique) sets.push_back(std::move(group));
      }
    }
    if (sets.empty()) return cur;
    NormalizeStep step = contract_sets(cur, std::move(sets), coloring, opts);
    cur = step.result.graph;
    if (steps) steps->push_back(std::move(step));
  }
}

ColoredGraph normalize_overlaps(const ColoredGraph& g, const ReduceOptions& opts,
                                std::vector<NormalizeStep>* steps) {
  ColoredGraph cur = g;
  while (true) {
    cur = normalize_cliques(cur, opts, steps);
    const auto coloring = stable_vertex_coloring(cur, opts);
    PrimeMemo prime(cur, coloring);
    std::set<std::vector<Vertex>> found;
    for (const auto& cls : classes_of(coloring)) {
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          const Vertex pair[2] = {cls[i], cls[j]};
          auto cl = closure(cur, coloring, pair);
          if (static_cast<int>(cl.size()) <= opts.overlap_cap && prime(cl)) found.insert(cl);
        }
      }
    }
    std::vector<std::vector<Vertex>> primes(found.begin(), found.end());
    // Group primes that overlap.
    std::vector<int> parent(primes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<int> owner(cur.order(), -1);
    for (std::size_t p = 0; p < primes.size(); ++p) {
      for (Vertex v : primes[p]) {
        if (owner[v] == -1) {
          owner[v] = static_cast<int>(p);
        } else {
          const int a = find(owner[v]), b = find(static_cast<int>(p));
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    std::map<int, std::vector<int>> groups;
    for (std::size_t p = 0; p < primes.size(); ++p) groups[find(static_cast<int>(p))].push_back(p);

    std::vector<std::vector<Vertex>> blocks_to_contract;
    for (const auto& [root, members] : groups) {
      if (members.size() < 2) continue;
      std::set<Vertex> region_set;
      for (int p : members) region_set.insert(primes[p].begin(), primes[p].end());
      std::vector<Vertex> region(region_set.begin(), region_set.end());
      if (static_cast<int>(region.size()) > opts.overlap_cap) continue;
      if (!is_cws(cur, coloring, region)) continue;

      // R_x: intersection of the primes containing x.
      std::map<Vertex, std::vector<Vertex>> block;
      for (Vertex x : region) {
        std::vector<Vertex> acc;
        bool first = true;
        for (int p : members) {
          if (!std::binary_search(primes[p].begin(), primes[p].end(), x)) continue;
          if (first) {
            acc = primes[p];
            first = false;
          } else {
            std::vector<Vertex> tmp;
            std::set_intersection(acc.begin(), acc.end(), primes[p].begin(), primes[p].end(),
                                  std::back_inserter(tmp));
            acc.swap(tmp);
          }
        }
        block[x] = std::move(acc);
      }
      bool partition = true;
      for (Vertex x : region)
        for (Vertex y : block[x]) partition = partition && block[y] == block[x];
      if (!partition) continue;

      // Degree profile conditions within R.
      std::map<ColorId, std::vector<Vertex>> by_class;
      for (Vertex v : region) by_class[coloring[v]].push_back(v);
      bool degrees = true;
      for (Vertex v : region) {
        for (const auto& [c, members_c] : by_class) {
          int hits = 0;
          for (Vertex u : members_c) {
            if (u != v && (cur.adjacent(u, v) || cur.adjacent(v, u))) ++hits;
          }
          const int size = static_cast<int>(members_c.size());
          if (c == coloring[v]) {
            degrees = degrees && (hits == 0 || hits == size - 1);
          } else {
            degrees = degrees && (hits == 0 || hits == 1 || hits == size - 1 || hits == size);
          }
        }
      }
      if (!degrees) continue;
      std::set<std::vector<Vertex>> distinct;
      for (Vertex x : region)
        if (block[x].size() >= 2 && block[x].size() < region.size()) distinct.insert(block[x]);
      blocks_to_contract.insert(blocks_to_contract.end(), distinct.begin(), distinct.end());
    }
    if (blocks_to_contract.empty()) return cur;
    NormalizeStep step = contract_sets(cur, std::move(blocks_to_contract), coloring, opts);
    cur = step.result.graph;
    if (steps) steps->push_back(std::move(step));
  }
}

ColoredGraph normalize(const ColoredGraph& g, const ReduceOptions& opts,
                       std::vector<NormalizeStep>* steps) {
  return normalize_overlaps(g, opts, steps);
}

std::vector<CWSRecord> decompose(const ColoredGraph& g, int k, const RefineOptions& ropts) {
  const auto coloring = vertex_partition(refine(g, k, ropts));
  PrimeMemo prime(g, coloring);
  std::vector<char> covered(g.order(), 0);
  std::vector<CWSRecord> out;
  for (const auto& cls : classes_of(coloring)) {
    while (true) {
      Vertex u = -1;
      for (Vertex v : cls) {
        if (!covered[v]) {
          u = v;
          break;
        }
      }
      if (u < 0) break;
      std::map<std::vector<Vertex>, Vertex> candidates;
      for (Vertex v : cls) {
        if (v == u || covered[v]) continue;
        const Vertex pair[2] = {u, v};
        auto cl = closure(g, coloring, pair);
        bool overlaps = false;
        for (Vertex x : cl) overlaps = overlaps || covered[x];
        if (overlaps || !prime(cl)) continue;
        candidates.emplace(std::move(cl), v);
      }
      if (candidates.empty()) break;
      if (candidates.size() > 1) {
        std::ostringstream msg;
        msg << "vertex " << u << " has " << candidates.size() << " distinct prime closures:";
        for (const auto& [set, v] : candidates) {
          msg << " {";
          for (std::size_t i = 0; i < set.size(); ++i) msg << (i ? "," : "") << set[i];
          msg << "}";
        }
        throw Error(msg.str());
      }
      CWSRecord r;
      r.vertices = candidates.begin()->first;
      r.prime = true;
      r.source = {u, candidates.begin()->second};
      for (Vertex x : r.vertices) covered[x] = 1;
      out.push_back(std::move(r));
    }
  }
  return out;
}

DecompositionTree reduce(const ColoredGraph& g, const ReduceOptions& opts) {
  DecompositionTree tree;
  ColoredGraph cur = g;
  const int max_levels = 64;
  for (int level = 0;; ++level) {
    if (level >= max_levels) throw ResourceError("reduction did not stabilise", level);
    DecompositionLevel L;
    L.graph = cur;
    L.normalized = normalize(cur, opts, &L.normalization);
    L.pieces = decompose(L.normalized, opts.k, opts.refine);
    ColoredGraph next = L.normalized;
    if (!L.pieces.empty()) {
      std::vector<std::vector<Vertex>> sets;
      for (const CWSRecord& r : L.pieces) {
        auto [cert, dim] =
            subgraph_certificate(induced_subgraph(L.normalized, r.vertices), opts.k, opts);
        L.certificates.push_back(cert.digest);
        L.dimensions.push_back(dim);
        sets.push_back(r.vertices);
      }
      const auto coloring = stable_vertex_coloring(L.normalized, opts);
      L.contraction = contract_all(L.normalized, sets, coloring, L.certificates);
      next = L.contraction.graph;
    }
    L.changed = !L.normalization.empty() || !L.pieces.empty();
    const bool changed = L.changed;
    tree.levels.push_back(std::move(L));
    if (!changed) break;
    ++tree.depth;
    cur = std::move(next);
  }
  tree.terminal = cur;
  CertifyOptions copts;
  copts.refine = opts.refine;
  copts.node_cap = opts.node_cap;
  tree.terminal_certificate = certify(cur, opts.k, copts);

  Hasher h;
  h.update("wlg-reduce-1").update_u64(opts.k);
  for (const DecompositionLevel& L : tree.levels) {
    if (!L.changed) continue;
    std::vector<std::string> certs;
    for (const NormalizeStep& s : L.normalization)
      for (const Digest& d : s.certificates) certs.push_back("n" + to_hex(d));
    for (const Digest& d : L.certificates) certs.push_back("p" + to_hex(d));
    std::sort(certs.begin(), certs.end());
    h.update_u64(certs.size());
    for (const auto& c : certs) h.update(c);
  }
  h.update(tree.terminal_certificate.digest);
  tree.digest = h.finish();
  return tree;
}

std::string DecompositionTree::text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const DecompositionLevel& L = levels[i];
    out << "level " << i << " vertices " << L.graph.order() << " normalized "
        << L.normalized.order() << (L.changed ? "" : " stable") << "\n";
    for (const NormalizeStep& s : L.normalization) {
      for (std::size_t j = 0; j < s.sets.size(); ++j) {
        out << "  normalize";
        for (Vertex v : s.sets[j]) out << " " << v;
        out << " cert " << to_hex(s.certificates[j]) << "\n";
      }
    }
    for (std::size_t j = 0; j < L.pieces.size(); ++j) {
      out << "  prime";
      for (Vertex v : L.pieces[j].vertices) out << " " << v;
      out << " k " << L.dimensions[j] << " cert " << to_hex(L.certificates[j]) << "\n";
    }
  }
  out << "depth " << depth << "\n";
  out << "terminal\n" << serialize(terminal);
  out << "digest " << to_hex(digest) << "\n";
  return out.str();
}

}  // namespace wlgraph
