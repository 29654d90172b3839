#pragma once

#include <algorithm>
#include <vector>

#include "sparse_ec/graph.hpp"
#include "sparse_ec/partitioner.hpp"

namespace checks {

using namespace sparse_ec;

inline std::vector<std::size_t> part_degrees(const Graph& g, const EdgePartition& p) {
  std::vector<std::size_t> out;
  for (const auto& part : p.parts) {
    std::vector<std::size_t> deg(g.vertex_count());
    std::size_t best = 0;
    for (EdgeId e : part.ids()) {
      auto [u, v] = g.endpoints(e);
      best = std::max({best, ++deg[u], ++deg[v]});
    }
    out.push_back(best);
  }
  return out;
}

// Disjoint cover, degree sum equal to Δ, full parts before the last one.
inline bool partition_ok(const Graph& g, const EdgePartition& p) {
  std::vector<int> hits(g.edge_count());
  for (const auto& part : p.parts)
    for (EdgeId e : part.ids()) ++hits[e];
  if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) return false;
  auto deg = part_degrees(g, p);
  std::size_t sum = 0;
  for (auto d : deg) sum += d;
  if (sum != g.max_degree()) return false;
  const std::size_t c = p.width;
  for (std::size_t i = 0; i + 1 < deg.size(); ++i)
    if (deg[i] != c) return false;
  if (p.clamped) return deg.size() == 1 && g.max_degree() < c;
  return c <= deg.back() && deg.back() < 2 * c;
}

// Maximum-degree vertices reach exactly c in every part but the last.
inline bool saturation_ok(const Graph& g, const EdgePartition& p) {
  for (std::size_t i = 0; i + 1 < p.parts.size(); ++i) {
    std::vector<std::size_t> deg(g.vertex_count());
    for (EdgeId e : p.parts[i].ids()) {
      auto [u, v] = g.endpoints(e);
      ++deg[u];
      ++deg[v];
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) == g.max_degree() && deg[v] != p.width) return false;
  }
  return true;
}

}  // namespace checks
