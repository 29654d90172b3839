#include "sparse_ec/generators.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "sparse_ec/errors.hpp"
#include "sparse_ec/rng.hpp"

namespace sparse_ec::gen {
namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Decodes a uniformly random Prüfer sequence into tree edges.
void random_tree(std::size_t n, Rng& rng, std::vector<Endpoints>& out) {
  if (n < 2) return;
  if (n == 2) {
    out.push_back({0, 1});
    return;
  }
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    out.push_back({leaf, c});
    if (--degree[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  out.push_back({a, leaves.top()});
}

}  // namespace

Graph star(std::size_t leaves) {
  std::vector<Endpoints> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return build_graph(leaves + 1, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  std::vector<Endpoints> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  return build_graph(n, edges);
}

Graph path(std::size_t n) {
  std::vector<Endpoints> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return build_graph(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Endpoints> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return build_graph(n, edges);
}

Graph petersen() {
  std::vector<Endpoints> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return build_graph(10, edges);
}

Graph kforest(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (k < 1) throw InvalidInput("kforest needs k >= 1");
  Rng rng(seed);
  std::vector<Endpoints> raw;
  for (std::size_t t = 0; t < k; ++t) random_tree(n, rng, raw);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Endpoints> edges;
  for (const auto& e : raw)
    if (seen.insert(pair_key(e.u, e.v)).second) edges.push_back(e);
  return build_graph(n, edges);
}

Graph kdegenerate(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (k < 1) throw InvalidInput("kdegenerate needs k >= 1");
  Rng rng(seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(std::span<Vertex>(order));
  std::vector<Endpoints> edges;
  std::vector<std::size_t> picks;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t want = std::min(k, i);
    picks.clear();
    while (picks.size() < want) {
      const std::size_t j = rng.below(i);
      if (std::find(picks.begin(), picks.end(), j) == picks.end()) picks.push_back(j);
    }
    for (std::size_t j : picks) edges.push_back({order[j], order[i]});
  }
  return build_graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Endpoints> edges(a.edges().begin(), a.edges().end());
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return build_graph(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace sparse_ec::gen
