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

#include "wlgraph/generators.hpp"

#include <random>

#include "wlgraph/errors.hpp"

namespace wlgraph::gen {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

ColoredGraph complete(int n) {
  Pairs e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return ColoredGraph(n, e);
}

ColoredGraph empty(int n) { return ColoredGraph(n, Pairs{}); }

ColoredGraph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  Pairs e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return ColoredGraph(n, e);
}

ColoredGraph path(int n) {
  Pairs e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return ColoredGraph(n, e);
}

ColoredGraph complete_bipartite(int a, int b) {
  Pairs e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return ColoredGraph(a + b, e);
}

ColoredGraph petersen() {
  Pairs e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer
    e.emplace_back(i, i + 5);                // spoke
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return ColoredGraph(10, e);
}

ColoredGraph shrikhande() {
  const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  Pairs e;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (const auto& s : steps) {
        e.emplace_back(4 * x + y, 4 * ((x + s[0]) % 4) + (y + s[1]) % 4);
      }
    }
  }
  return ColoredGraph(16, e);
}

ColoredGraph rook(int r) {
  Pairs e;
  for (int a = 0; a < r * r; ++a) {
    for (int b = a + 1; b < r * r; ++b) {
      if (a / r == b / r || a % r == b % r) e.emplace_back(a, b);
    }
  }
  return ColoredGraph(r * r, e);
}

ColoredGraph hypercube(int dim) {
  const int n = 1 << dim;
  Pairs e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v >> b & 1)) e.emplace_back(v, v | 1 << b);
  return ColoredGraph(n, e);
}

ColoredGraph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Pairs e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return ColoredGraph(n, e);
}

}  // namespace wlgraph::gen
