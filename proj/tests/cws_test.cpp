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

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "wlgraph/certify.hpp"
#include "wlgraph/cfi.hpp"
#include "wlgraph/cws.hpp"
#include "wlgraph/errors.hpp"
#include "wlgraph/generators.hpp"
#include "wlgraph/oracle.hpp"
#include "wlgraph/refine.hpp"

using namespace wlgraph;

namespace {

using Set = std::vector<Vertex>;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

std::vector<ColorId> colors_of(const ColoredGraph& g, int k = 2) {
  return vertex_partition(refine(g, k));
}

// Same-colored members have equal neighbour sets outside S.
bool cws_by_definition(const ColoredGraph& g, const std::vector<ColorId>& col, std::uint32_t mask) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    if (!(mask >> u & 1)) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (!(mask >> v & 1) || col[u] != col[v]) continue;
      for (Vertex w = 0; w < n; ++w)
        if (!(mask >> w & 1) && g.adjacent(u, w) != g.adjacent(v, w)) return false;
    }
  }
  return true;
}

Set members(std::uint32_t mask, int n) {
  Set s;
  for (Vertex v = 0; v < n; ++v)
    if (mask >> v & 1) s.push_back(v);
  return s;
}

std::uint32_t mask_of(const Set& s) {
  std::uint32_t m = 0;
  for (Vertex v : s) m |= 1u << v;
  return m;
}

const ColoredGraph& cfi_plain() {
  static const ColoredGraph g = cfi_build(gen::complete(4)).graph;
  return g;
}

const ColoredGraph& cfi_twisted() {
  static const ColoredGraph g = cfi_build(gen::complete(4), EdgeList{{0, 1}}).graph;
  return g;
}

// Classes A = {0,1,2}, B = {3,4,5}, edges a_i b_i, hub 6 joined to A. Every
// pair of A closes to a prime {a_i, a_j, b_i, b_j}, and these overlap.
ColoredGraph overlap_witness() {
  return ColoredGraph(7, {{0, 3}, {1, 4}, {2, 5}, {6, 0}, {6, 1}, {6, 2}});
}

// Two 5-cycles and a vertex joined to all ten.
ColoredGraph hubbed_cycles() {
  const ColoredGraph two = disjoint_union(gen::cycle(5), gen::cycle(5));
  EdgeList edges;
  for (const Edge& e : two.edges()) edges.emplace_back(e.u, e.v);
  for (Vertex v = 0; v < 10; ++v) edges.emplace_back(10, v);
  return ColoredGraph(11, edges);
}

// Q attached to S: every vertex of S is joined to vertices 0 and 1 of Q.
ColoredGraph attach(const ColoredGraph& q, const ColoredGraph& s) {
  const ColoredGraph u = disjoint_union(q, s);
  EdgeList edges;
  for (const Edge& e : u.edges()) edges.emplace_back(e.u, e.v);
  for (Vertex v = q.order(); v < u.order(); ++v) {
    edges.emplace_back(0, v);
    edges.emplace_back(1, v);
  }
  return ColoredGraph(u.order(), edges);
}

// Same-colored vertices in a shared prime closure have no other prime closure.
void check_unique_primes(const ColoredGraph& g, const std::vector<ColorId>& col) {
  const int n = g.order();
  for (Vertex x = 0; x < n; ++x) {
    std::set<Set> primes;
    for (Vertex y = 0; y < n; ++y) {
      if (y == x || col[y] != col[x]) continue;
      const Vertex pair[2] = {x, y};
      const Set cl = closure(g, col, pair);
      if (is_prime(g, col, cl)) primes.insert(cl);
    }
    CAPTURE(x);
    CHECK(primes.size() <= 1);
  }
}

}  // namespace

TEST_CASE("Hamming shells of the cube") {
  // Relative to ({x}, rest) the middle shell of the square is CWS.
  const ColoredGraph q2 = gen::hypercube(2);
  std::vector<ColorId> pi(4, 1);
  pi[0] = 0;
  CHECK(is_cws(q2, pi, Set{1, 2}));
  CHECK(cws_by_definition(q2, pi, mask_of({1, 2})));

  for (int d : {3, 4}) {
    const ColoredGraph q = gen::hypercube(d);
    const int n = q.order();
    std::vector<ColorId> rest(n, 1);
    rest[0] = 0;
    const std::vector<ColorId> shells = colors_of(individualize(q, 0), 1);
    std::map<int, Set> by_weight;
    for (Vertex v = 0; v < n; ++v) by_weight[std::popcount(static_cast<unsigned>(v))].push_back(v);
    for (const auto& [w, s] : by_weight) {
      CAPTURE(w);
      // Refinement after individualizing recovers the shells.
      for (Vertex v : s) CHECK(shells[v] == shells[s.front()]);
      const bool trivial = s.size() == 1;
      CHECK(is_cws(q, rest, s) == trivial);
      CHECK(cws_by_definition(q, rest, mask_of(s)) == trivial);
    }
    // The union of the middle shells only meets the two poles.
    Set middle;
    for (Vertex v = 1; v < n - 1; ++v) middle.push_back(v);
    CHECK(is_cws(q, shells, middle));
    CHECK_FALSE(is_cws(q, rest, middle));
  }
}

TEST_CASE("CWS membership") {
  const ColoredGraph p = gen::petersen();
  const auto col = colors_of(p);
  std::vector<Vertex> all(10);
  std::iota(all.begin(), all.end(), 0);
  CHECK(is_cws(p, col, all));
  for (Vertex v = 0; v < 10; ++v) CHECK(is_cws(p, col, Set{v}));
  CHECK(is_cws(p, col, Set{}));
  CHECK_FALSE(is_cws(p, col, Set{0, 1}));
  CHECK_THROWS_AS(is_cws(p, col, Set{10}), InvalidArgument);
  CHECK_THROWS_AS(is_cws(p, std::vector<ColorId>(3), Set{0}), InvalidArgument);

  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const ColoredGraph g = gen::random_graph(7, 0.45, seed);
    const auto c = colors_of(g, 1);
    for (std::uint32_t m = 0; m < (1u << 7); ++m) CHECK(is_cws(g, c, members(m, 7)) == cws_by_definition(g, c, m));
  }
}

TEST_CASE("closure is the least CWS superset") {
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const int n = 6 + static_cast<int>(seed % 3);
    const ColoredGraph g = gen::random_graph(n, 0.4, seed + 50);
    const auto col = colors_of(g, 1 + static_cast<int>(seed % 2));
    std::vector<std::uint32_t> cws;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
      if (cws_by_definition(g, col, m)) cws.push_back(m);
    for (std::uint32_t s = 1; s < (1u << n); s += 3) {
      const Set cl = closure(g, col, members(s, n));
      const std::uint32_t got = mask_of(cl);
      CHECK(std::is_sorted(cl.begin(), cl.end()));
      CHECK((got & s) == s);
      CHECK(cws_by_definition(g, col, got));
      for (std::uint32_t t : cws)
        if ((t & s) == s) CHECK((t & got) == got);
      CHECK(closure(g, col, cl) == cl);
    }
  }
}

TEST_CASE("closure examples and lattice laws") {
  const ColoredGraph c4 = gen::cycle(4);
  const auto col = colors_of(c4);
  CHECK(closure(c4, col, Set{0, 2}) == Set{0, 2});
  CHECK(closure(c4, col, Set{0, 1}) == Set{0, 1, 2, 3});
  CHECK(closure(c4, col, Set{2, 2, 0}) == Set{0, 2});
  CHECK_THROWS_AS(closure(c4, col, Set{4}), InvalidArgument);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ColoredGraph g = gen::random_graph(9, 0.35, seed + 7);
    const auto c = colors_of(g);
    for (std::uint32_t a = 1; a < 512; a += 37) {
      for (std::uint32_t b = 1; b < 512; b += 53) {
        const Set ca = closure(g, c, members(a, 9)), cb = closure(g, c, members(b, 9));
        const Set cab = closure(g, c, members(a | b, 9));
        CHECK((mask_of(ca) & mask_of(cab)) == mask_of(ca));
        Set joined = ca;
        joined.insert(joined.end(), cb.begin(), cb.end());
        CHECK(closure(g, c, joined) == cab);
      }
    }
  }
}

TEST_CASE("primality") {
  const ColoredGraph c4 = gen::cycle(4);
  const auto col = colors_of(c4);
  CHECK(is_prime(c4, col, Set{0, 2}));
  CHECK_FALSE(is_prime(c4, col, Set{0, 1}));
  CHECK_FALSE(is_prime(c4, col, Set{0, 1, 2, 3}));
  CHECK_FALSE(is_prime(c4, col, Set{0}));

  // The pair closure across the two cycles is everything but the hub, and
  // pairs inside one cycle close to less.
  const ColoredGraph h = hubbed_cycles();
  const auto hc = colors_of(h);
  const Set across = closure(h, hc, Set{0, 5});
  CHECK(across.size() == 10);
  CHECK(is_cws(h, hc, across));
  CHECK_FALSE(is_prime(h, hc, across));
  CHECK(is_prime(h, hc, closure(h, hc, Set{0, 1})));
  CHECK(closure(h, hc, Set{0, 1}) == Set{0, 1, 2, 3, 4});

  const ColoredGraph mixed = disjoint_union(cfi_plain(), cfi_twisted());
  const auto mc = colors_of(mixed);
  std::vector<Vertex> all(mixed.order());
  std::iota(all.begin(), all.end(), 0);
  CHECK_FALSE(is_prime(mixed, mc, all));
  const int half = cfi_plain().order();
  Set first(all.begin(), all.begin() + half);
  CHECK(is_cws(mixed, mc, first));
  Set pair;
  for (Vertex v = half; v < mixed.order() && pair.empty(); ++v)
    if (mc[v] == mc[0]) pair = {0, v};
  REQUIRE_FALSE(pair.empty());
  CHECK(closure(mixed, mc, pair) == all);

  const ColoredGraph w = overlap_witness();
  const auto wc = colors_of(w);
  CHECK(is_prime(w, wc, Set{0, 1, 3, 4}));
  CHECK(is_prime(w, wc, Set{0, 2, 3, 5}));
}

TEST_CASE("prime closures are unique after normalization") {
  std::vector<ColoredGraph> graphs{hubbed_cycles(), cfi_plain(), gen::petersen(),
                                   disjoint_union(gen::cycle(5), gen::cycle(5))};
  for (std::uint64_t seed = 0; seed < 8; ++seed) graphs.push_back(gen::random_graph(9, 0.3, seed + 300));
  for (const ColoredGraph& g : graphs) {
    const ColoredGraph h = normalize(g);
    check_unique_primes(h, colors_of(h));
  }
}

TEST_CASE("CWS spectrum") {
  const ColoredGraph g = individualize(gen::cycle(6), 0);
  const auto col = colors_of(g);
  CHECK(cws_spectrum(g, col, 0).empty());
  CHECK(cws_spectrum(g, col, 3).empty());
  const auto s1 = cws_spectrum(g, col, 1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].source == std::pair<Vertex, Vertex>{1, 5});
  CHECK(s1[0].vertices == closure(g, col, Set{1, 5}));
  CHECK_THROWS_AS(cws_spectrum(g, col, 6), InvalidArgument);

  // Vertex-transitive graph: every spectrum has the same profile.
  const ColoredGraph c6 = gen::cycle(6);
  const auto cc = colors_of(c6);
  auto profile = [&](Vertex v) {
    std::multiset<std::pair<std::size_t, bool>> out;
    for (const CWSRecord& r : cws_spectrum(c6, cc, v)) out.insert({r.vertices.size(), r.prime});
    return out;
  };
  for (Vertex v = 1; v < 6; ++v) CHECK(profile(v) == profile(0));
  CHECK(profile(0).size() == 5);

  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const ColoredGraph r = gen::random_graph(9, 0.4, seed + 900);
    const auto rc = colors_of(r);
    auto sizes = [&](Vertex v) {
      std::multiset<std::size_t> out;
      for (const CWSRecord& rec : cws_spectrum(r, rc, v)) out.insert(rec.vertices.size());
      return out;
    };
    for (Vertex u = 0; u < 9; ++u)
      for (Vertex v = u + 1; v < 9; ++v)
        if (rc[u] == rc[v]) CHECK(sizes(u) == sizes(v));
  }
}

TEST_CASE("contraction") {
  // A whole component becomes an isolated vertex.
  const ColoredGraph mixed = disjoint_union(cfi_plain(), cfi_twisted());
  const auto mc = colors_of(mixed);
  CWSRecord comp;
  comp.vertices.resize(cfi_plain().order());
  std::iota(comp.vertices.begin(), comp.vertices.end(), 0);
  const ColoredGraph left = contract(mixed, mc, comp, 2);
  const int rest = cfi_twisted().order();
  REQUIRE(left.order() == rest + 1);
  CHECK(left.degree(rest) == 0);
  Set kept(rest);
  std::iota(kept.begin(), kept.end(), 0);
  CHECK(induced_subgraph(left, kept) == cfi_twisted());

  // Equal pieces attached the same way give isomorphic results and equal
  // certificates; unequal pieces give different certificates.
  const ColoredGraph q = gen::path(4);
  auto contracted = [&](const ColoredGraph& piece, std::uint64_t seed) {
    const ColoredGraph whole = random_relabel(attach(q, piece), seed).graph;
    const Relabeling inner = random_relabel(attach(q, piece), seed);
    Set s;
    for (Vertex v = q.order(); v < q.order() + piece.order(); ++v) s.push_back(inner.perm[v]);
    std::sort(s.begin(), s.end());
    const auto c = colors_of(whole);
    const Digest d = certify(induced_subgraph(whole, s), 2).digest;
    return std::pair{contract_all(whole, {s}, c, {d}), d};
  };
  const auto [a, da] = contracted(gen::cycle(4), 1);
  const auto [b, db] = contracted(random_relabel(gen::cycle(4), 5).graph, 2);
  const auto [c, dc] = contracted(gen::path(4), 3);
  CHECK(da == db);
  CHECK(da != dc);
  CHECK(a.graph.order() == 5);
  CHECK(iso_oracle(a.graph, b.graph).has_value());
  CHECK(a.vertex_colors == b.vertex_colors);
  CHECK(a.vertex_colors != c.vertex_colors);

  const ColoredGraph c4 = gen::cycle(4);
  const auto col = colors_of(c4);
  const Digest zero{};
  CHECK_THROWS_AS(contract_all(c4, {{0, 1}}, col, {zero}), InvalidArgument);
  CHECK_THROWS_AS(contract_all(c4, {{0, 2}, {2}}, col, {zero, zero}), InvalidArgument);
  CHECK_THROWS_AS(contract_all(c4, {{0, 2}}, col, {}), InvalidArgument);
  CHECK_THROWS_AS(contract_all(c4, {{}}, col, {zero}), InvalidArgument);

  // Two antipodal pairs of C4 contract to one edge.
  const Contraction both = contract_all(c4, {{0, 2}, {1, 3}}, col, {zero, zero});
  CHECK(both.graph.order() == 2);
  CHECK(both.graph.adjacent(0, 1));
  CHECK(both.vertex_map == std::vector<Vertex>{0, 1, 0, 1});
}

TEST_CASE("clique normalization") {
  // Triangle of true twins on a path tail.
  const ColoredGraph g(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 4}});
  std::vector<NormalizeStep> steps;
  const ColoredGraph h = normalize_cliques(g, {}, &steps);
  CHECK(h.order() == 3);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].sets == std::vector<Set>{{0, 1, 2}});
  CHECK(normalize_cliques(h) == h);

  const ColoredGraph star = gen::complete_bipartite(1, 3);
  CHECK(normalize_cliques(star).order() == 2);

  CHECK(normalize_cliques(cfi_plain()) == cfi_plain());
  CHECK(normalize_cliques(gen::petersen()) == gen::petersen());
  const ColoredGraph r = gen::random_graph(10, 0.5, 4);
  const ColoredGraph once = normalize_cliques(r);
  CHECK(normalize_cliques(once) == once);
}

TEST_CASE("overlap normalization") {
  for (const ColoredGraph& g : {gen::petersen(), cfi_plain(), hubbed_cycles()}) {
    CHECK(normalize_overlaps(g) == normalize_cliques(g));
  }

  const ColoredGraph w = overlap_witness();
  std::vector<NormalizeStep> steps;
  const ColoredGraph h = normalize_overlaps(w, {}, &steps);
  REQUIRE_FALSE(steps.empty());
  CHECK(steps[0].sets == std::vector<Set>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(h.order() < w.order());
  check_unique_primes(h, colors_of(h));
  CHECK(normalize_overlaps(h) == h);
  CHECK_THROWS_AS(decompose(w, 2), Error);
  CHECK_NOTHROW(decompose(h, 2));
}

TEST_CASE("decomposition") {
  const ColoredGraph mixed = normalize(disjoint_union(cfi_plain(), cfi_twisted()));
  const int k = 2;
  const auto col = colors_of(mixed, k);
  const auto pieces = decompose(mixed, k);
  REQUIRE_FALSE(pieces.empty());
  std::vector<int> owner(mixed.order(), -1);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    CHECK(pieces[i].prime);
    CHECK(is_prime(mixed, col, pieces[i].vertices));
    CHECK(closure(mixed, col, std::vector<Vertex>{pieces[i].source.first, pieces[i].source.second}) ==
          pieces[i].vertices);
    for (Vertex v : pieces[i].vertices) {
      CHECK(owner[v] == -1);
      owner[v] = static_cast<int>(i);
    }
  }
  // Each touched class is covered.
  std::set<ColorId> touched;
  for (Vertex v = 0; v < mixed.order(); ++v)
    if (owner[v] != -1) touched.insert(col[v]);
  for (Vertex v = 0; v < mixed.order(); ++v)
    if (touched.count(col[v])) CHECK(owner[v] != -1);

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      std::set<ColorId> ci, cj;
      for (Vertex v : pieces[i].vertices) ci.insert(col[v]);
      for (Vertex v : pieces[j].vertices) cj.insert(col[v]);
      std::vector<ColorId> common;
      std::set_intersection(ci.begin(), ci.end(), cj.begin(), cj.end(), std::back_inserter(common));
      if (common.empty()) continue;
      CHECK(similar(induced_subgraph(mixed, pieces[i].vertices),
                    induced_subgraph(mixed, pieces[j].vertices), k));
    }
  }

  const ColoredGraph c4 = gen::cycle(4);
  const auto c4_pieces = decompose(c4, 2);
  REQUIRE(c4_pieces.size() == 2);
  CHECK(c4_pieces[0].vertices == Set{0, 2});
  CHECK(c4_pieces[1].vertices == Set{1, 3});
  CHECK(decompose(gen::petersen(), 2).empty());
}

TEST_CASE("reduction") {
  const DecompositionTree pet = reduce(gen::petersen());
  CHECK(pet.depth <= 1);
  CHECK(pet.terminal == gen::petersen());
  CHECK_FALSE(pet.text().empty());

  std::vector<ColoredGraph> graphs{
      disjoint_union(gen::cycle(5), gen::cycle(5)), hubbed_cycles(), overlap_witness(),
      disjoint_union(gen::cycle(6), disjoint_union(gen::complete(3), gen::complete(3))),
      gen::cycle(4), gen::random_graph(10, 0.3, 21)};
  for (const ColoredGraph& g : graphs) {
    const DecompositionTree t = reduce(g);
    REQUIRE_FALSE(t.levels.empty());
    CHECK_FALSE(t.levels.back().changed);
    CHECK(t.levels.back().graph == t.terminal);
    CHECK(static_cast<int>(t.levels.size()) == t.depth + 1);
    for (std::uint64_t seed : {1u, 2u}) CHECK(reduce(random_relabel(g, seed).graph).digest == t.digest);
  }
  CHECK(reduce(gen::cycle(5)).digest != reduce(gen::path(5)).digest);
  CHECK(reduce(disjoint_union(gen::cycle(6), gen::cycle(6))).digest !=
        reduce(disjoint_union(gen::cycle(4), gen::cycle(8))).digest);
}

TEST_CASE("mutually CWS pairs") {
  const ColoredGraph mixed = disjoint_union(cfi_plain(), cfi_twisted());
  const int half = cfi_plain().order();
  Set r(half), s(half);
  std::iota(r.begin(), r.end(), 0);
  std::iota(s.begin(), s.end(), half);
  for (int k : {1, 2}) CHECK(mutually_cws(mixed, r, s, s, k).holds());

  // A hexagon next to two triangles passes at k = 1 and fails the side by
  // side comparison at k = 2.
  const ColoredGraph six = disjoint_union(gen::cycle(6), disjoint_union(gen::complete(3), gen::complete(3)));
  const Set hex{0, 1, 2, 3, 4, 5}, tri{6, 7, 8, 9, 10, 11};
  CHECK(mutually_cws(six, hex, tri, tri, 1).holds());
  const MutualCWS two = mutually_cws(six, hex, tri, tri, 2);
  CHECK_FALSE(two.equivalent);
  CHECK_FALSE(two.matched);
  CHECK(two.disjoint);

  // An end edge of P5 looks uniform inside but not in the path.
  const ColoredGraph p5 = gen::path(5);
  const MutualCWS ends = mutually_cws(p5, Set{0, 1}, Set{4, 3}, Set{4, 3}, 1);
  CHECK(ends.equivalent);
  CHECK(ends.matched);
  CHECK_FALSE(ends.r_cws);
  CHECK_FALSE(ends.s_cws);
  CHECK_FALSE(mutually_cws(p5, Set{0, 1}, Set{4, 3}, Set{3, 4}, 1).matched);
  CHECK_FALSE(mutually_cws(p5, Set{0, 1}, Set{1, 2}, Set{1, 2}, 1).disjoint);

  CHECK_THROWS_AS(mutually_cws(p5, Set{0, 1}, Set{3, 4}, Set{3, 3}, 1), InvalidArgument);
  CHECK_THROWS_AS(mutually_cws(p5, Set{0, 1}, Set{3, 4}, Set{3}, 1), InvalidArgument);
}
