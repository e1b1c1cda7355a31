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

#include "wlgraph/refine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

#include "wlgraph/errors.hpp"

namespace wlgraph {

namespace {

using u128 = unsigned __int128;

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (threads <= 1 || count < 2048) {
    body(0, count);
    return;
  }
  const std::size_t parts = std::min<std::size_t>(threads, count / 1024);
  std::vector<std::thread> pool;
  pool.reserve(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t lo = count * p / parts;
    const std::size_t hi = count * (p + 1) / parts;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

struct Layout {
  int n = 0;
  int k = 0;
  std::size_t tuples = 0;
  std::vector<std::size_t> stride;  // stride[j] = n^(k-1-j)

  Layout(int n_, int k_) : n(n_), k(k_), tuples(ipow(n_, k_)), stride(k_) {
    for (int j = 0; j < k; ++j) stride[j] = ipow(n, k - 1 - j);
  }

  void digits(std::size_t index, Vertex* out) const {
    for (int j = k - 1; j >= 0; --j) {
      out[j] = static_cast<Vertex>(index % n);
      index /= n;
    }
  }
};

// One refinement round. Fills `next` with dense ids and appends the decode
// table. Returns the number of classes.
ColorId refine_round(const ColoredGraph& g, const Layout& L, const std::vector<ColorId>& prev,
                     std::vector<ColorId>& next,
                     std::vector<std::vector<std::uint32_t>>& decode, int threads) {
  const int n = L.n;
  const int k = L.k;
  const std::size_t entries = k == 1 ? n - 1 : n;
  const int words = k == 1 ? 3 : k;
  std::vector<u128> sig(L.tuples * entries);

  parallel_for(L.tuples, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<Vertex> x(k);
    for (std::size_t I = lo; I < hi; ++I) {
      u128* out = sig.data() + I * entries;
      if (k == 1) {
        const Vertex v = static_cast<Vertex>(I);
        std::size_t e = 0;
        for (Vertex u = 0; u < n; ++u) {
          if (u == v) continue;
          out[e++] = (u128{g.edge_code(v, u)} << 64) | (u128{g.edge_code(u, v)} << 32) |
                     u128{prev[u]};
        }
      } else {
        L.digits(I, x.data());
        for (Vertex w = 0; w < n; ++w) {
          u128 packed = 0;
          for (int j = k - 1; j >= 0; --j) {
            const std::size_t J = I + (static_cast<std::ptrdiff_t>(w) - x[j]) *
                                          static_cast<std::ptrdiff_t>(L.stride[j]);
            packed = (packed << 32) | u128{prev[J]};
          }
          out[w] = packed;
        }
      }
      std::sort(out, out + entries);
    }
  });

  std::vector<std::size_t> order(L.tuples);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto less = [&](std::size_t a, std::size_t b) {
    if (prev[a] != prev[b]) return prev[a] < prev[b];
    const u128* pa = sig.data() + a * entries;
    const u128* pb = sig.data() + b * entries;
    for (std::size_t e = 0; e < entries; ++e) {
      if (pa[e] != pb[e]) return pa[e] < pb[e];
    }
    return false;
  };
  std::sort(order.begin(), order.end(), less);

  next.assign(L.tuples, 0);
  decode.clear();
  ColorId id = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t I = order[i];
    if (i > 0 && less(order[i - 1], I)) ++id;
    next[I] = id;
    if (decode.size() == id) {
      std::vector<std::uint32_t> row;
      row.reserve(1 + entries * words);
      row.push_back(prev[I]);
      const u128* p = sig.data() + I * entries;
      for (std::size_t e = 0; e < entries; ++e) {
        for (int j = words - 1; j >= 0; --j) {
          row.push_back(static_cast<std::uint32_t>(p[e] >> (32 * j)));
        }
      }
      decode.push_back(std::move(row));
    }
  }
  return L.tuples == 0 ? 0 : id + 1;
}

}  // namespace

std::uint64_t default_memory_budget() {
  if (const char* env = std::getenv("WLG_MEMORY_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 4ull << 30;
}

double refine_memory_estimate(int n, int k) {
  const double tuples = std::pow(static_cast<double>(n), k);
  return tuples * (16.0 * n + 16.0);
}

std::size_t TupleColoring::index(std::span<const Vertex> tuple) const {
  std::size_t r = 0;
  for (Vertex v : tuple) r = r * n + static_cast<std::size_t>(v);
  return r;
}

std::vector<Vertex> TupleColoring::tuple(std::size_t index) const {
  std::vector<Vertex> out(k);
  for (int j = k - 1; j >= 0; --j) {
    out[j] = static_cast<Vertex>(index % n);
    index /= n;
  }
  return out;
}

std::vector<std::uint32_t> iso_type(const ColoredGraph& g, std::span<const Vertex> tuple) {
  const std::size_t k = tuple.size();
  std::vector<std::uint32_t> key;
  key.reserve(k + 3 * k * (k - 1) / 2);
  for (Vertex v : tuple) key.push_back(g.vertex_color(v));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      key.push_back(tuple[i] == tuple[j]);
      key.push_back(tuple[i] == tuple[j] ? 0 : g.edge_code(tuple[i], tuple[j]));
      key.push_back(tuple[i] == tuple[j] ? 0 : g.edge_code(tuple[j], tuple[i]));
    }
  }
  return key;
}

TupleColoring refine(const ColoredGraph& g, int k, const RefineOptions& opts) {
  if (k < 1 || k > 4) throw InvalidArgument("dimension must be in [1, 4]");
  const int n = g.order();
  const std::uint64_t budget = opts.memory_budget ? opts.memory_budget : default_memory_budget();
  const double need = refine_memory_estimate(n, k);
  if (need > static_cast<double>(budget)) {
    throw ResourceError("refine with n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                            " needs about " + std::to_string(static_cast<std::uint64_t>(need)) +
                            " bytes, budget is " + std::to_string(budget),
                        need);
  }
  Layout L(n, k);
  TupleColoring tc;
  tc.k = k;
  tc.n = n;

  // Round 0: iso-types.
  std::vector<std::vector<std::uint32_t>> keys(L.tuples);
  parallel_for(L.tuples, opts.threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<Vertex> x(k);
    for (std::size_t I = lo; I < hi; ++I) {
      L.digits(I, x.data());
      keys[I] = iso_type(g, x);
    }
  });
  std::vector<ColorId> cur = rank_keys(keys);
  ColorId classes = L.tuples == 0 ? 0 : *std::max_element(cur.begin(), cur.end()) + 1;
  {
    std::vector<std::vector<std::uint32_t>> table(classes);
    for (std::size_t I = 0; I < L.tuples; ++I) {
      if (table[cur[I]].empty()) table[cur[I]] = std::move(keys[I]);
    }
    tc.decode.push_back(std::move(table));
  }
  keys.clear();
  keys.shrink_to_fit();
  if (opts.keep_history) tc.history.push_back(cur);

  std::vector<ColorId> next;
  while (L.tuples > 0) {
    std::vector<std::vector<std::uint32_t>> table;
    const ColorId split = refine_round(g, L, cur, next, table, opts.threads);
    tc.decode.push_back(std::move(table));
    if (opts.keep_history) tc.history.push_back(next);
    cur.swap(next);
    if (split == classes) break;
    classes = split;
    ++tc.rounds;
  }
  tc.color_of = std::move(cur);
  tc.num_colors = classes;
  return tc;
}

ProjectedColoring project(const TupleColoring& tc, int t) {
  if (t < 1 || t > tc.k) throw InvalidArgument("projection arity out of range");
  ProjectedColoring out;
  out.t = tc.k;
  out.n = tc.n;
  out.color_of = tc.color_of;
  out.num_colors = tc.num_colors;
  const std::size_t n = tc.n;
  for (int level = tc.k; level > t; --level) {
    const std::size_t prefixes = ipow(n, level - 1);
    std::vector<std::vector<ColorId>> blocks(prefixes);
    for (std::size_t p = 0; p < prefixes; ++p) {
      blocks[p].assign(out.color_of.begin() + p * n, out.color_of.begin() + (p + 1) * n);
      std::sort(blocks[p].begin(), blocks[p].end());
    }
    out.color_of = rank_keys(blocks);
    out.num_colors = out.color_of.empty()
                         ? 0
                         : *std::max_element(out.color_of.begin(), out.color_of.end()) + 1;
    out.t = level - 1;
  }
  return out;
}

std::vector<ColorId> vertex_partition(const TupleColoring& tc) {
  if (tc.k == 1) return tc.color_of;
  return project(tc, 1).color_of;
}

namespace {

void lift_key(const ColoredGraph& g, const TupleColoring& tc, std::vector<Vertex>& z,
              std::vector<std::uint32_t>& out) {
  if (static_cast<int>(z.size()) == tc.k) {
    out.push_back(tc.color(z));
    return;
  }
  const auto iso = iso_type(g, z);
  out.insert(out.end(), iso.begin(), iso.end());
  for (std::size_t j = 0; j < z.size(); ++j) {
    std::vector<Vertex> sub;
    sub.reserve(z.size() - 1);
    for (std::size_t i = 0; i < z.size(); ++i)
      if (i != j) sub.push_back(z[i]);
    lift_key(g, tc, sub, out);
  }
}

}  // namespace

std::vector<ColorId> lift(const ColoredGraph& g, const TupleColoring& tc, int t,
                          std::span<const Vertex> samples) {
  if (t <= tc.k) throw InvalidArgument("lift arity must exceed k");
  if (t > 8 || t - tc.k > 4) throw ResourceError("lift arity too large", t);
  if (samples.size() % t != 0) throw InvalidArgument("sample length not a multiple of t");
  const std::size_t count = samples.size() / t;
  std::vector<std::vector<std::uint32_t>> keys(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Vertex> z(samples.begin() + s * t, samples.begin() + (s + 1) * t);
    for (Vertex v : z) {
      if (v < 0 || v >= tc.n) throw InvalidArgument("sample vertex out of range");
    }
    lift_key(g, tc, z, keys[s]);
  }
  return rank_keys(keys);
}

bool similar(const ColoredGraph& g, const ColoredGraph& h, int k, const RefineOptions& opts) {
  if (g.order() != h.order() || g.directed() != h.directed()) return false;
  const ColoredGraph u = disjoint_union(g, h);
  const TupleColoring tc = refine(u, k, opts);
  const int n = g.order();
  std::vector<ColorId> left, right;
  std::vector<Vertex> x(k);
  for (std::size_t I = 0; I < tc.color_of.size(); ++I) {
    std::size_t r = I;
    int below = 0, above = 0;
    for (int j = 0; j < k; ++j) {
      (static_cast<int>(r % u.order()) < n ? below : above)++;
      r /= u.order();
    }
    if (below == k) left.push_back(tc.color_of[I]);
    if (above == k) right.push_back(tc.color_of[I]);
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return left == right;
}

Digest invariant_digest(const TupleColoring& tc) {
  Hasher h;
  h.update("wlg-invariant-1");
  h.update_u64(tc.k).update_u64(tc.n).update_u64(tc.rounds).update_u64(tc.num_colors);
  for (const auto& table : tc.decode) {
    h.update_u64(table.size());
    for (const auto& row : table) {
      h.update_u64(row.size());
      h.update({reinterpret_cast<const std::uint8_t*>(row.data()), row.size() * 4});
    }
  }
  std::vector<std::uint64_t> sizes(tc.num_colors, 0);
  for (ColorId c : tc.color_of) ++sizes[c];
  for (auto s : sizes) h.update_u64(s);
  return h.finish();
}

std::uint64_t count_paths(const ColoredGraph& g, Vertex u, Vertex v, int length,
                          std::span<const ColorId> coloring, std::span<const ColorId> character,
                          std::uint64_t cap) {
  const int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidArgument("vertex out of range");
  if (length < 0) throw InvalidArgument("negative path length");
  if (!character.empty()) {
    if (static_cast<int>(character.size()) != length + 1 ||
        static_cast<int>(coloring.size()) != n) {
      throw InvalidArgument("character needs length+1 entries and a full coloring");
    }
  }
  std::vector<char> on_path(n, 0);
  std::uint64_t steps = 0, found = 0;
  auto fits = [&](Vertex x, int depth) {
    return character.empty() || coloring[x] == character[depth];
  };
  std::function<void(Vertex, int)> walk = [&](Vertex x, int depth) {
    if (++steps > cap) throw ResourceError("path enumeration exceeded cap", steps);
    if (depth == length) {
      found += x == v;
      return;
    }
    on_path[x] = 1;
    for (Vertex y = 0; y < n; ++y) {
      if (!on_path[y] && g.edge_code(x, y) != 0 && fits(y, depth + 1)) walk(y, depth + 1);
    }
    on_path[x] = 0;
  };
  if (fits(u, 0)) walk(u, 0);
  return found;
}

std::string export_coloring(const TupleColoring& tc) {
  std::string out;
  for (std::size_t I = 0; I < tc.color_of.size(); ++I) {
    out += "t";
    for (Vertex v : tc.tuple(I)) out += " " + std::to_string(v);
    out += " " + std::to_string(tc.color_of[I]) + "\n";
  }
  return out;
}

}  // namespace wlgraph
