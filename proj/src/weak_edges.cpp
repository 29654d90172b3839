#include "sparse_ec/weak_edges.hpp"

#include <algorithm>

#include "sparse_ec/errors.hpp"

namespace sparse_ec {
namespace {

// d^D(x) <= D - d(y) + [d(y) = D], evaluated without unsigned underflow.
bool weak_inequality(std::size_t top_count_x, std::size_t degree_y, std::size_t palette) {
  return top_count_x + degree_y <= palette + (degree_y == palette ? 1 : 0);
}

WeaknessVerdict verdict_from(const Graph& g, EdgeId e, std::size_t top_u, std::size_t top_v, std::size_t palette) {
  const auto [u, v] = g.endpoints(e);
  WeaknessVerdict out;
  out.edge = e;
  out.u_weak = weak_inequality(top_u, g.degree(v), palette);
  out.v_weak = weak_inequality(top_v, g.degree(u), palette);
  if (out.u_weak && out.v_weak)
    out.designated = std::min(u, v);
  else if (out.u_weak)
    out.designated = u;
  else if (out.v_weak)
    out.designated = v;
  return out;
}

}  // namespace

std::size_t top_degree_count(const Graph& g, Vertex v, std::size_t palette) {
  std::size_t count = 0;
  for (const auto& inc : g.neighbors(v))
    if (g.degree(inc.neighbor) == palette) ++count;
  return count;
}

bool is_weak_at(const Graph& g, EdgeId e, Vertex x, std::size_t palette) {
  return weak_inequality(top_degree_count(g, x, palette), g.degree(g.other_end(e, x)), palette);
}

WeaknessVerdict classify_edge(const Graph& g, EdgeId e, std::size_t palette) {
  if (e >= g.edge_count()) throw InvalidInput("edge id out of range");
  const auto [u, v] = g.endpoints(e);
  return verdict_from(g, e, top_degree_count(g, u, palette), top_degree_count(g, v, palette), palette);
}

WeakEdges weak_edges(const Graph& g, std::size_t palette) {
  std::vector<std::size_t> top(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(v) == palette) ++top[u];
    if (g.degree(u) == palette) ++top[v];
  }
  WeakEdges out;
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.endpoints(e);
    auto verdict = verdict_from(g, e, top[u], top[v], palette);
    if (!verdict.weak()) continue;
    ids.push_back(e);
    out.verdicts.push_back(verdict);
  }
  out.edges = EdgeSubset(std::move(ids));
  return out;
}

Graph strong_graph(std::size_t d) {
  if (d < 3) throw InvalidInput("strong_graph needs d >= 3");
  const std::size_t max_degree = d * (d - 1);
  const std::size_t copies = max_degree - d + 2;
  const std::size_t block = 2 * d - 1;
  std::vector<Endpoints> pairs;
  // Copy t uses vertices t*block + [0, d-1) on the degree-d side and
  // t*block + [d-1, 2d-1) on the side that grows to degree Δ.
  for (std::size_t t = 0; t < copies; ++t) {
    for (std::size_t i = 0; i + 1 < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        pairs.push_back({static_cast<Vertex>(t * block + i), static_cast<Vertex>(t * block + d - 1 + j)});
  }
  // Clique j gathers the j-th high side vertex of every copy.
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t a = 0; a < copies; ++a)
      for (std::size_t b = a + 1; b < copies; ++b)
        pairs.push_back({static_cast<Vertex>(a * block + d - 1 + j), static_cast<Vertex>(b * block + d - 1 + j)});
  }
  return build_graph(copies * block, pairs);
}

}  // namespace sparse_ec
