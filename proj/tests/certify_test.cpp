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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "wlgraph/certify.hpp"
#include "wlgraph/cfi.hpp"
#include "wlgraph/coherent.hpp"
#include "wlgraph/errors.hpp"
#include "wlgraph/generators.hpp"
#include "wlgraph/oracle.hpp"

using namespace wlgraph;

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Certificate run(const ColoredGraph& g, int k, Mode mode) {
  CertifyOptions o;
  o.mode = mode;
  return certify(g, k, o);
}

std::set<std::vector<Vertex>> blocks(std::span<const ColorId> col) {
  std::map<ColorId, std::vector<Vertex>> m;
  for (Vertex v = 0; v < static_cast<Vertex>(col.size()); ++v) m[col[v]].push_back(v);
  std::set<std::vector<Vertex>> out;
  for (auto& [c, vs] : m) out.insert(vs);
  return out;
}

std::set<std::vector<Vertex>> sorted_orbits(std::vector<std::vector<Vertex>> orbits) {
  std::set<std::vector<Vertex>> out;
  for (auto& o : orbits) {
    std::sort(o.begin(), o.end());
    out.insert(o);
  }
  return out;
}

ColoredGraph asymmetric_graph() {
  for (std::uint64_t seed = 0;; ++seed) {
    const ColoredGraph g = gen::random_graph(7, 0.45, seed);
    if (aut_order_oracle(g) == 1) return g;
  }
}

const ColoredGraph& cfi_plain() {
  static const ColoredGraph g = cfi_build(gen::complete(4)).graph;
  return g;
}

const ColoredGraph& cfi_twisted() {
  static const ColoredGraph g = cfi_build(gen::complete(4), EdgeList{{0, 1}}).graph;
  return g;
}

}  // namespace

TEST_CASE("individualizing a C4 vertex") {
  const ColoredGraph c4 = gen::cycle(4);
  const ColoredGraph g = individualize(c4, 0);
  const TupleColoring tc = refine(g, 1);
  CHECK(blocks(tc.color_of) == std::set<std::vector<Vertex>>{{0}, {1, 3}, {2}});

  // A vertex that is already alone in its class changes nothing.
  const ColoredGraph again = individualize(g, 0);
  CHECK(blocks(refine(again, 1).color_of) == blocks(tc.color_of));
  CHECK(refine(g, 1).num_colors > refine(c4, 1).num_colors);
  CHECK_THROWS_AS(individualize(c4, 4), InvalidArgument);
}

TEST_CASE("mode names") {
  for (Mode m : {Mode::fast, Mode::verified, Mode::canonical}) CHECK(parse_mode(to_string(m)) == m);
  CHECK_THROWS_AS(parse_mode("exhaustive"), InvalidArgument);
}

TEST_CASE("canonical certificates are relabel invariant") {
  std::vector<ColoredGraph> graphs{gen::cycle(6), gen::petersen(), gen::hypercube(3),
                                   gen::complete_bipartite(2, 4), gen::path(5)};
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    graphs.push_back(gen::random_graph(6 + static_cast<int>(seed % 5), 0.4, seed));
  for (const ColoredGraph& g : graphs) {
    for (int k : {1, 2}) {
      const Certificate c = run(g, k, Mode::canonical);
      CHECK(c.k == k);
      CHECK(c.hex().size() == 64);
      for (std::uint64_t seed : {3u, 8u}) CHECK(run(random_relabel(g, seed).graph, k, Mode::canonical).digest == c.digest);
    }
  }
}

TEST_CASE("canonical digest equality matches the isomorphism oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 5 + static_cast<int>(seed % 4);
    const ColoredGraph g = gen::random_graph(n, 0.5, seed / 2);
    const ColoredGraph h = seed % 2 ? random_relabel(g, seed).graph : gen::random_graph(n, 0.5, seed + 1000);
    const bool iso = iso_oracle(g, h).has_value();
    for (int k : {1, 2}) {
      CAPTURE(seed);
      CHECK((run(g, k, Mode::canonical).digest == run(h, k, Mode::canonical).digest) == iso);
    }
  }
}

TEST_CASE("labeling is a canonical form") {
  const ColoredGraph g = gen::random_graph(9, 0.4, 12);
  const Relabeling r = random_relabel(g, 5);
  const Certificate a = run(g, 2, Mode::canonical), b = run(r.graph, 2, Mode::canonical);
  CHECK(permute(g, a.labeling) == permute(r.graph, b.labeling));
}

TEST_CASE("trace partitions refine toward a discrete leaf") {
  for (const ColoredGraph& g : {gen::cycle(6), gen::petersen(), gen::random_graph(10, 0.3, 4)}) {
    const Certificate c = run(g, 1, Mode::fast);
    CHECK(c.trace.size() == c.levels.size());
    std::size_t prev = 0;
    for (const TraceLevel& L : c.levels) {
      const std::size_t classes = blocks(L.partition).size();
      CHECK(classes > prev);
      CHECK(L.width >= 2);
      prev = classes;
    }
    std::vector<Vertex> sorted = c.labeling;
    std::sort(sorted.begin(), sorted.end());
    for (Vertex v = 0; v < g.order(); ++v) CHECK(sorted[v] == v);
    CHECK_FALSE(c.trace_text().empty());
  }
}

TEST_CASE("CFI pair is separated by 2-dim certificates") {
  CHECK(run(cfi_plain(), 2, Mode::verified).digest != run(cfi_twisted(), 2, Mode::verified).digest);
  CHECK(run(cfi_plain(), 2, Mode::canonical).digest != run(cfi_twisted(), 2, Mode::canonical).digest);
  CHECK(run(cfi_plain(), 1, Mode::canonical).digest != run(cfi_twisted(), 1, Mode::canonical).digest);
}

TEST_CASE("verified mode flags the Shrikhande and rook union") {
  const ColoredGraph u = disjoint_union(gen::shrikhande(), gen::rook(4));
  for (int k : {1, 2}) CHECK(run(u, k, Mode::verified).orbit_assumption_failed);
  for (const ColoredGraph& g : {gen::cycle(5), gen::cycle(6), gen::complete(4), gen::petersen(),
                                gen::hypercube(3), gen::shrikhande(), gen::rook(4)}) {
    for (int k : {1, 2}) CHECK_FALSE(run(g, k, Mode::verified).orbit_assumption_failed);
  }
}

TEST_CASE("branch cap") {
  CertifyOptions o;
  o.node_cap = 2;
  o.automorphism_pruning = false;
  CHECK_THROWS_AS(certify(gen::empty(8), 1, o), ResourceError);
  CHECK(default_branch_cap() > 0);
  CHECK_THROWS_AS(certify(gen::cycle(4), 0), InvalidArgument);
}

TEST_CASE("automorphism generators") {
  const auto gens = aut_generators_via_recursion(gen::cycle(4), 1);
  for (const auto& p : gens) CHECK(is_automorphism(gen::cycle(4), p));
  CHECK(generated_group_order(4, gens) == 8);
  CHECK(generated_group_order(4, gens) == aut_order_oracle(gen::cycle(4)));

  CHECK(aut_generators_via_recursion(asymmetric_graph(), 1).empty());

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ColoredGraph g = gen::random_graph(5 + static_cast<int>(seed % 5), 0.35, seed);
    const auto found = aut_generators_via_recursion(g, 2);
    for (const auto& p : found) CHECK(is_automorphism(g, p));
    CHECK(aut_order_oracle(g) % generated_group_order(g.order(), found) == 0);
  }
  const auto pet = aut_generators_via_recursion(gen::petersen(), 2);
  CHECK(120 % generated_group_order(10, pet) == 0);
}

TEST_CASE("canonical mode discovers automorphisms") {
  const Certificate c = run(gen::cycle(6), 1, Mode::canonical);
  for (const auto& p : c.automorphisms) CHECK(is_automorphism(gen::cycle(6), p));
  CHECK_FALSE(c.automorphisms.empty());
}

TEST_CASE("depth-d stabilisation") {
  const ColoredGraph c6 = gen::cycle(6);
  const ColoredGraph two_triangles = disjoint_union(gen::complete(3), gen::complete(3));
  CHECK(depth_d_1dim(c6, 0) == depth_d_1dim(two_triangles, 0));
  CHECK(depth_d_1dim(c6, 1) != depth_d_1dim(two_triangles, 1));
  CHECK(depth_d_1dim(c6, 1) == depth_d_1dim(random_relabel(c6, 2).graph, 1));
  CHECK_THROWS_AS(depth_d_1dim(gen::cycle(50), 3, {}, 1000), ResourceError);
}

TEST_CASE("depth k-1 stabilisation agrees with k-dim similarity on suite pairs") {
  const ColoredGraph k4 = gen::complete(4);
  const std::vector<std::pair<ColoredGraph, ColoredGraph>> pairs{
      {gen::cycle(6), disjoint_union(gen::complete(3), gen::complete(3))},
      {gen::shrikhande(), gen::rook(4)},
      {cfi_plain(), cfi_twisted()},
      {gen::petersen(), random_relabel(gen::petersen(), 3).graph},
      {gen::hypercube(3), gen::complete_bipartite(4, 4)},
  };
  for (const auto& [a, b] : pairs) {
    for (int k : {1, 2, 3}) {
      if (k == 3 && a.order() > 20) continue;
      CHECK(similar(a, b, k) == (depth_d_1dim(a, k - 1) == depth_d_1dim(b, k - 1)));
    }
  }
}

TEST_CASE("Klein scheme graph under 1-dim certification") {
  for (const ColoredGraph& g : {gen::complete(4), gen::complete_bipartite(3, 3), gen::petersen()}) {
    const CoherentConfig s = klein_scheme(g);
    const ColoredGraph kg = scheme_graph(s, g);
    // The first refinement already separates the fibres.
    const TupleColoring tc = refine(kg, 1);
    std::set<std::vector<Vertex>> fibres;
    for (const auto& f : s.fibres()) fibres.insert(std::vector<Vertex>(f.begin(), f.end()));
    CHECK(blocks(tc.color_of) == fibres);

    // One individualization reaches the orbits of the point stabilizer,
    // which is not trivial.
    const ColoredGraph one = individualize(kg, 0);
    CHECK(blocks(refine(one, 1).color_of) == sorted_orbits(orbits_oracle(one, 40)));
    CHECK(aut_order_oracle(one, 40) > 1);

    const Certificate c = run(kg, 1, Mode::verified);
    CHECK_FALSE(c.orbit_assumption_failed);
    CHECK(run(random_relabel(kg, 4).graph, 1, Mode::canonical).digest == run(kg, 1, Mode::canonical).digest);
  }
}
