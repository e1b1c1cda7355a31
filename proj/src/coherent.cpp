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

#include "wlgraph/coherent.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "wlgraph/errors.hpp"

namespace wlgraph {

namespace {

std::size_t at(int n, int x, int y) { return static_cast<std::size_t>(x) * n + y; }

int dense(std::vector<int>& labels) {
  std::map<int, int> ids;
  for (int l : labels) ids.emplace(l, 0);
  int next = 0;
  for (auto& [l, id] : ids) id = next++;
  for (int& l : labels) l = ids[l];
  return next;
}

std::vector<int> point_fibre(const CoherentConfig& c) {
  const auto fib = c.fibres();
  std::vector<int> of(c.n, -1);
  for (std::size_t f = 0; f < fib.size(); ++f)
    for (int x : fib[f]) of[x] = static_cast<int>(f);
  return of;
}

// Distinct relation ids per ordered fibre block, ascending.
std::vector<std::vector<int>> block_relations(const CoherentConfig& c,
                                              const std::vector<int>& fibre_of, int fibres) {
  std::vector<std::set<int>> sets(static_cast<std::size_t>(fibres) * fibres);
  for (int x = 0; x < c.n; ++x)
    for (int y = 0; y < c.n; ++y) sets[at(fibres, fibre_of[x], fibre_of[y])].insert(c.rel(x, y));
  std::vector<std::vector<int>> out;
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace

std::vector<std::vector<int>> CoherentConfig::fibres() const {
  std::map<int, std::vector<int>> by_rel;
  for (int x = 0; x < n; ++x) by_rel[rel(x, x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [r, pts] : by_rel) out.push_back(std::move(pts));
  return out;
}

std::vector<std::vector<std::pair<int, int>>> CoherentConfig::relations() const {
  std::vector<std::vector<std::pair<int, int>>> out(s);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[rel(x, y)].emplace_back(x, y);
  return out;
}

std::optional<Violation> validate(CoherentConfig& c) {
  const int n = c.n;
  const int s = c.s;
  if (n < 0 || s < 0 || c.rel_of.size() != static_cast<std::size_t>(n) * n) {
    return Violation{0, "relation table has wrong size", {-1, -1, -1}, {}};
  }
  std::vector<char> used(s, 0);
  for (int r : c.rel_of) {
    if (r < 0 || r >= s) return Violation{0, "relation id out of range", {r, -1, -1}, {}};
    used[r] = 1;
  }
  for (int r = 0; r < s; ++r) {
    if (!used[r]) return Violation{0, "empty relation", {r, -1, -1}, {}};
  }

  // Axiom 1: each relation lies on or off the diagonal.
  std::vector<int> side(s, -1);
  std::vector<std::pair<int, int>> first(s, {-1, -1});
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int r = c.rel(x, y);
      const int d = x == y;
      if (side[r] == -1) {
        side[r] = d;
        first[r] = {x, y};
      } else if (side[r] != d) {
        return Violation{1, "relation meets the diagonal and its complement", {r, -1, -1},
                         {first[r], {x, y}}};
      }
    }
  }

  // Axiom 2: transposes are relations.
  std::vector<int> transpose(s, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int r = c.rel(x, y);
      const int t = c.rel(y, x);
      if (transpose[r] == -1) {
        transpose[r] = t;
      } else if (transpose[r] != t) {
        return Violation{2, "transpose of a relation is split", {r, transpose[r], t},
                         {first[r], {x, y}}};
      }
    }
  }
  for (int r = 0; r < s; ++r) {
    if (transpose[transpose[r]] != r) {
      return Violation{2, "transpose of a relation is not a relation", {r, transpose[r], -1},
                       {first[r]}};
    }
  }

  // Axiom 3: c^k_{ij}(x, y) depends only on k.
  const std::size_t cells = static_cast<std::size_t>(s) * s * s;
  if (cells > 400'000'000ull) throw ResourceError("intersection table too large", cells * 4.0);
  std::vector<std::uint32_t> table(cells, 0);
  std::vector<char> seen(s, 0);
  std::vector<std::uint32_t> scratch(static_cast<std::size_t>(s) * s, 0);
  std::vector<std::size_t> touched;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int k = c.rel(x, y);
      touched.clear();
      for (int z = 0; z < n; ++z) {
        const std::size_t ij = static_cast<std::size_t>(c.rel(x, z)) * s + c.rel(z, y);
        if (scratch[ij]++ == 0) touched.push_back(ij);
      }
      if (!seen[k]) {
        seen[k] = 1;
        for (std::size_t ij : touched) table[ij * s + k] = scratch[ij];
      } else {
        for (std::size_t ij : touched) {
          if (table[ij * s + k] != scratch[ij]) {
            const int i = static_cast<int>(ij / s), j = static_cast<int>(ij % s);
            for (std::size_t t : touched) scratch[t] = 0;
            return Violation{3, "intersection number differs between pairs of one relation",
                             {i, j, k}, {first[k], {x, y}}};
          }
        }
      }
      for (std::size_t t : touched) scratch[t] = 0;
    }
  }
  c.intersection = std::move(table);
  return std::nullopt;
}

CoherentConfig canonical_ids(const CoherentConfig& c) {
  CoherentConfig out;
  out.n = c.n;
  out.rel_of.resize(c.rel_of.size());
  std::map<int, int> ids;
  for (std::size_t p = 0; p < c.rel_of.size(); ++p) {
    auto [it, fresh] = ids.emplace(c.rel_of[p], static_cast<int>(ids.size()));
    out.rel_of[p] = it->second;
  }
  out.s = static_cast<int>(ids.size());
  return out;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  std::map<int, int> ab, ba;
  for (std::size_t p = 0; p < a.size(); ++p) {
    auto [i, f1] = ab.emplace(a[p], b[p]);
    auto [j, f2] = ba.emplace(b[p], a[p]);
    if (i->second != b[p] || j->second != a[p]) return false;
  }
  return true;
}

std::vector<int> graph_seed(const ColoredGraph& g) {
  const int n = g.order();
  std::vector<int> labels(static_cast<std::size_t>(n) * n);
  std::map<std::pair<int, std::uint32_t>, int> ids;
  auto key = [&](int x, int y) {
    return x == y ? std::make_pair(0, g.vertex_color(x)) : std::make_pair(1, g.edge_code(x, y));
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) ids.emplace(key(x, y), 0);
  int next = 0;
  for (auto& [k, id] : ids) id = next++;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) labels[at(n, x, y)] = ids[key(x, y)];
  return labels;
}

CoherentConfig cellular_closure(int n, const std::vector<int>& seed) {
  if (seed.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidArgument("seed labels must cover V x V");
  }
  std::vector<int> lab = seed;
  int classes = dense(lab);
  while (true) {
    // Split on the diagonal and on transposes.
    std::map<std::array<int, 3>, int> split_ids;
    std::vector<std::array<int, 3>> keys(lab.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        keys[at(n, x, y)] = {lab[at(n, x, y)], x == y, lab[at(n, y, x)]};
    for (const auto& k : keys) split_ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : split_ids) id = next++;
    for (std::size_t p = 0; p < lab.size(); ++p) lab[p] = split_ids[keys[p]];

    // Split each relation by the count map (i, j) -> #{z : (x,z) in i, (z,y) in j}.
    std::map<std::pair<int, std::vector<std::uint64_t>>, int> count_ids;
    std::vector<std::map<std::pair<int, std::vector<std::uint64_t>>, int>::iterator> where(
        lab.size());
    std::map<std::uint64_t, std::uint64_t> counts;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        counts.clear();
        for (int z = 0; z < n; ++z) {
          ++counts[(static_cast<std::uint64_t>(lab[at(n, x, z)]) << 32) | lab[at(n, z, y)]];
        }
        std::vector<std::uint64_t> profile;
        profile.reserve(2 * counts.size());
        for (auto [ij, cnt] : counts) {
          profile.push_back(ij);
          profile.push_back(cnt);
        }
        where[at(n, x, y)] =
            count_ids.emplace(std::make_pair(lab[at(n, x, y)], std::move(profile)), 0).first;
      }
    }
    next = 0;
    for (auto& [k, id] : count_ids) id = next++;
    for (std::size_t p = 0; p < lab.size(); ++p) lab[p] = where[p]->second;
    if (next == classes) break;
    classes = next;
  }
  CoherentConfig out;
  out.n = n;
  out.s = classes;
  out.rel_of = std::move(lab);
  if (auto v = validate(out)) throw Error("cellular closure failed to validate: " + v->message);
  return out;
}

CoherentConfig cellular_closure(int n,
                                const std::vector<std::vector<std::pair<int, int>>>& seed) {
  std::vector<int> labels(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t r = 0; r < seed.size(); ++r) {
    for (auto [x, y] : seed[r]) {
      if (x < 0 || y < 0 || x >= n || y >= n) throw InvalidArgument("seed pair out of range");
      if (labels[at(n, x, y)] != -1) throw InvalidArgument("seed relations overlap");
      labels[at(n, x, y)] = static_cast<int>(r);
    }
  }
  for (int l : labels) {
    if (l == -1) throw InvalidArgument("seed relations do not cover V x V");
  }
  return cellular_closure(n, labels);
}

CoherentConfig from_pair_coloring(const TupleColoring& tc) {
  if (tc.k != 2) throw InvalidArgument("pair coloring needs k = 2");
  CoherentConfig c;
  c.n = tc.n;
  c.s = static_cast<int>(tc.num_colors);
  c.rel_of.assign(tc.color_of.begin(), tc.color_of.end());
  return c;
}

PortLabeling default_ports(const ColoredGraph& g) {
  return PortLabeling(g.order(), std::array<int, 3>{1, 2, 3});
}

CoherentConfig klein_scheme(const ColoredGraph& g, const PortLabeling& given) {
  if (g.directed()) throw UnsupportedInput("Klein scheme needs an undirected graph");
  const int s = g.order();
  for (Vertex v = 0; v < s; ++v) {
    if (g.degree(v) != 3) throw UnsupportedInput("Klein scheme needs a cubic graph");
  }
  const PortLabeling ports = given.empty() ? default_ports(g) : given;
  if (static_cast<int>(ports.size()) != s) throw InvalidArgument("port labeling size");
  for (const auto& p : ports) {
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{1, 2, 3}) {
      throw InvalidArgument("port labels must be a permutation of 1,2,3");
    }
  }
  auto port = [&](int i, int j) {
    const auto& nb = g.neighbors(i);
    return ports[i][std::lower_bound(nb.begin(), nb.end(), j) - nb.begin()];
  };

  CoherentConfig c;
  c.n = 4 * s;
  c.rel_of.assign(static_cast<std::size_t>(c.n) * c.n, -1);
  for (int i = 0; i < s; ++i) {
    for (int x = 0; x < 4; ++x) {
      for (int y = 0; y < 4; ++y) {
        c.rel_of[at(c.n, 4 * i + x, 4 * i + y)] = x == y ? i : s + 3 * i + ((x ^ y) - 1);
      }
    }
  }
  int next = 4 * s;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      if (i == j) continue;
      const bool edge = g.adjacent(i, j);
      const int ci = edge ? port(i, j) : 0;
      const int cj = edge ? port(j, i) : 0;
      for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) {
          int r = next;
          if (edge) {
            const bool in_x = x == 0 || x == ci;
            const bool in_y = y == 0 || y == cj;
            r = in_x == in_y ? next : next + 1;
          }
          c.rel_of[at(c.n, 4 * i + x, 4 * j + y)] = r;
        }
      }
      next += edge ? 2 : 1;
    }
  }
  c.s = next;
  if (auto v = validate(c)) throw Error("Klein scheme failed to validate: " + v->message);
  return c;
}

CoherentConfig psi_twist(const CoherentConfig& c, int fibre) {
  const auto fibre_of = point_fibre(c);
  const int f = static_cast<int>(c.fibres().size());
  if (fibre < 0 || fibre >= f) throw InvalidArgument("fibre out of range");
  const auto blocks = block_relations(c, fibre_of, f);
  CoherentConfig out = c;
  out.intersection.clear();
  for (int x = 0; x < c.n; ++x) {
    for (int y = 0; y < c.n; ++y) {
      const int fx = fibre_of[x], fy = fibre_of[y];
      if (fx == fy || (fx != fibre && fy != fibre)) continue;
      const auto& ids = blocks[at(f, fx, fy)];
      if (ids.size() != 2) continue;
      const int r = c.rel(x, y);
      out.rel_of[at(c.n, x, y)] = r == ids[0] ? ids[1] : ids[0];
    }
  }
  return out;
}

ColoredGraph scheme_graph(const CoherentConfig& c, const ColoredGraph& g) {
  const auto fibre_of = point_fibre(c);
  const int f = static_cast<int>(c.fibres().size());
  if (f != g.order()) {
    throw InvalidArgument("scheme has " + std::to_string(f) + " fibres but graph has " +
                          std::to_string(g.order()) + " vertices");
  }
  std::vector<Edge> edges;
  for (int x = 0; x < c.n; ++x) {
    for (int y = 0; y < c.n; ++y) {
      if (x == y) continue;
      const int fx = fibre_of[x], fy = fibre_of[y];
      if (fx != fy && !g.adjacent(fx, fy)) continue;
      edges.push_back({x, y, static_cast<Color>(c.rel(x, y))});
    }
  }
  return ColoredGraph(c.n, true, {}, std::move(edges));
}

std::vector<int> merge_relations(const CoherentConfig& c,
                                 const std::vector<std::vector<int>>& groups) {
  std::vector<int> label(c.s);
  for (int r = 0; r < c.s; ++r) label[r] = r;
  std::vector<char> claimed(c.s, 0);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    if (groups[gi].empty()) continue;
    for (int r : groups[gi]) {
      if (r < 0 || r >= c.s) throw InvalidArgument("unknown relation " + std::to_string(r));
      if (claimed[r]) throw InvalidArgument("relation " + std::to_string(r) + " merged twice");
      claimed[r] = 1;
      label[r] = c.s + static_cast<int>(gi);
    }
  }
  std::vector<int> out(c.rel_of.size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = label[c.rel_of[p]];
  dense(out);
  return out;
}

std::vector<std::vector<int>> klein_merge_groups(const CoherentConfig& c, const ColoredGraph& g) {
  const auto fibre_of = point_fibre(c);
  const int f = static_cast<int>(c.fibres().size());
  if (f != g.order()) throw InvalidArgument("scheme does not match graph");
  const auto blocks = block_relations(c, fibre_of, f);
  const auto fibres = c.fibres();
  std::vector<std::vector<int>> groups(7);  // S1 S2 T E1 E2 E3 diagonal
  for (int i = 0; i < f; ++i) {
    for (int j = 0; j < f; ++j) {
      const auto& ids = blocks[at(f, i, j)];
      if (i == j) {
        if (ids.size() != 4) throw InvalidArgument("fibre is not a Klein fibre");
        const int diag = c.rel(fibres[i].front(), fibres[i].front());
        groups[6].push_back(diag);
        int m = 0;
        for (int r : ids)
          if (r != diag) groups[3 + m++].push_back(r);
      } else if (ids.size() == 2) {
        groups[0].push_back(ids[0]);
        groups[1].push_back(ids[1]);
      } else {
        groups[2].push_back(ids[0]);
      }
    }
  }
  return groups;
}

ColoredGraph config_graph(int n, const std::vector<int>& labels) {
  if (labels.size() != static_cast<std::size_t>(n) * n) throw InvalidArgument("label size");
  std::vector<Color> colors(n);
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    colors[x] = static_cast<Color>(labels[at(n, x, x)]);
    for (int y = 0; y < n; ++y)
      if (x != y) edges.push_back({x, y, static_cast<Color>(labels[at(n, x, y)])});
  }
  return ColoredGraph(n, true, std::move(colors), std::move(edges));
}

std::string serialize_scheme(const CoherentConfig& c) {
  std::string out = "p cc " + std::to_string(c.n) + " " + std::to_string(c.s) + "\n";
  for (int x = 0; x < c.n; ++x)
    for (int y = 0; y < c.n; ++y)
      out += "r " + std::to_string(x) + " " + std::to_string(y) + " " +
             std::to_string(c.rel(x, y)) + "\n";
  return out;
}

CoherentConfig parse_scheme(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  CoherentConfig c;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "p") {
      std::string kind;
      if (header || !(ls >> kind >> c.n >> c.s) || kind != "cc" || c.n < 0 || c.s < 0) {
        throw ParseError(line_no, "expected 'p cc <n> <s>'");
      }
      header = true;
      c.rel_of.assign(static_cast<std::size_t>(c.n) * c.n, -1);
    } else if (tag == "r") {
      int x, y, r;
      if (!header || !(ls >> x >> y >> r)) throw ParseError(line_no, "expected 'r <x> <y> <rel>'");
      if (x < 0 || y < 0 || x >= c.n || y >= c.n || r < 0 || r >= c.s) {
        throw ParseError(line_no, "index out of range");
      }
      if (c.rel_of[at(c.n, x, y)] != -1) throw ParseError(line_no, "duplicate pair");
      c.rel_of[at(c.n, x, y)] = r;
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!header) throw ParseError(0, "missing 'p cc' header");
  for (int r : c.rel_of) {
    if (r == -1) throw ParseError(line_no, "not every pair has a relation");
  }
  return c;
}

}  // namespace wlgraph
