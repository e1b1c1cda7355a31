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

#include "wlgraph/graph.hpp"

namespace wlgraph::gen {

ColoredGraph complete(int n);
ColoredGraph empty(int n);
ColoredGraph cycle(int n);
ColoredGraph path(int n);
ColoredGraph complete_bipartite(int a, int b);
ColoredGraph petersen();
/// Shrikhande graph: Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
ColoredGraph shrikhande();
/// Rook's graph on an r x r board (K_r x K_r).
ColoredGraph rook(int r);
ColoredGraph hypercube(int dim);
/// Erdos-Renyi G(n, p), deterministic in `seed`.
ColoredGraph random_graph(int n, double p, std::uint64_t seed);

}  // namespace wlgraph::gen
