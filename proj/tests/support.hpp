#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "sparse_ec/coloring_state.hpp"
#include "sparse_ec/graph.hpp"
#include "sparse_ec/rng.hpp"

namespace testsupport {

using namespace sparse_ec;

// Uniform simple graph with n vertices and (at most) m edges.
inline Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Endpoints> edges;
  const std::size_t cap = n * (n - 1) / 2;
  m = std::min(m, cap);
  while (edges.size() < m) {
    auto u = static_cast<Vertex>(rng.below(n));
    auto v = static_cast<Vertex>(rng.below(n));
    if (u == v) continue;
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) continue;
    edges.push_back({u, v});
  }
  return build_graph(n, edges);
}

// Colors a random subset of edges greedily with a random common free color.
inline void random_partial(PartialColoring& s, Rng& rng, double keep) {
  const Graph& g = s.graph();
  std::vector<EdgeId> order(g.edge_count());
  for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
  rng.shuffle(std::span<EdgeId>(order));
  for (EdgeId e : order) {
    if (static_cast<double>(rng.below(1000)) >= keep * 1000) continue;
    const auto [u, v] = g.endpoints(e);
    std::vector<Color> common;
    for (Color c = 1; c <= s.palette(); ++c)
      if (s.is_free(u, c) && s.is_free(v, c)) common.push_back(c);
    if (!common.empty()) s.assign(e, common[rng.below(common.size())]);
  }
}

// Properness straight from the edge list.
inline bool proper(const Graph& g, std::span<const Color> colors) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::set<Color> used;
    for (const auto& inc : g.neighbors(v)) {
      Color c = colors[inc.edge];
      if (c != 0 && !used.insert(c).second) return false;
    }
  }
  return true;
}

inline std::set<Color> free_set(const Graph& g, std::span<const Color> colors, Vertex v, Color palette) {
  std::set<Color> out;
  for (Color c = 1; c <= palette; ++c) out.insert(c);
  for (const auto& inc : g.neighbors(v)) out.erase(colors[inc.edge]);
  return out;
}

}  // namespace testsupport
