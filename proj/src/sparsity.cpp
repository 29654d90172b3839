#include "sparse_ec/sparsity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "max_flow.hpp"
#include "sparse_ec/errors.hpp"

namespace sparse_ec {

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t max_deg = g.max_degree();
  std::vector<std::size_t> degree(n), bin(max_deg + 2, 0), pos(n);
  std::vector<Vertex> vert(n);
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    ++bin[degree[v]];
  }
  std::size_t start = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    std::size_t count = bin[d];
    bin[d] = start;
    start += count;
  }
  for (Vertex v = 0; v < n; ++v) {
    pos[v] = bin[degree[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  DegeneracyOrdering out;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = vert[i];
    out.degeneracy = std::max(out.degeneracy, degree[v]);
    for (const auto& [u, e] : g.neighbors(v)) {
      if (degree[u] <= degree[v]) continue;
      std::size_t du = degree[u], pu = pos[u], pw = bin[du];
      Vertex w = vert[pw];
      if (u != w) {
        pos[u] = pw;
        vert[pu] = w;
        pos[w] = pu;
        vert[pw] = u;
      }
      ++bin[du];
      --degree[u];
    }
  }
  // vert holds the removal order; the ordering is its reverse.
  out.order.assign(vert.rbegin(), vert.rend());
  out.position.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.position[out.order[i]] = i;
  return out;
}

bool is_degeneracy_ordering(const Graph& g, const DegeneracyOrdering& ordering) {
  const std::size_t n = g.vertex_count();
  if (ordering.order.size() != n || ordering.position.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = ordering.order[i];
    if (v >= n || ordering.position[v] != i) return false;
    std::size_t earlier = 0;
    for (const auto& inc : g.neighbors(v))
      if (ordering.position[inc.neighbor] < i) ++earlier;
    if (earlier > ordering.degeneracy) return false;
  }
  return true;
}

namespace {

struct CutResult {
  // 2 max over S of (den |E(S)| - num |S|)
  std::int64_t excess = 0;
  std::vector<Vertex> vertices;
};

// Decides whether the subgraph induced by `within` (sorted vertex ids of g)
// has a set S with q|E(S)| > p|S| for guess = p/q. Network: u <-> v with
// capacity q per edge, source -> v with q d(v) - 2p and v -> sink with
// 2p - q d(v) (whichever is positive). Cutting S off the sink side costs
// 2(p|S| - q|E(S)|) more than cutting nothing, so a denser set exists iff the
// flow stays below the total source capacity, and then the source side is one.
CutResult densest_cut(const Graph& g, const std::vector<Vertex>& within, const Rational& guess) {
  constexpr auto kOutside = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> local(g.vertex_count(), kOutside);
  for (std::size_t i = 0; i < within.size(); ++i) local[within[i]] = static_cast<std::uint32_t>(i);
  const auto& global = within;

  const std::size_t n = within.size();
  const auto source = static_cast<std::uint32_t>(n);
  const auto sink = source + 1;
  const std::int64_t q = guess.den(), twice_p = 2 * guess.num();

  std::vector<detail::ArcSpec> arcs;
  std::vector<std::int64_t> degree(n, 0);
  for (Vertex x : global)
    for (const auto& [y, e] : g.neighbors(x)) {
      if (local[y] == kOutside || local[y] < local[x]) continue;
      arcs.push_back({local[x], local[y], q, q});
      ++degree[local[x]];
      ++degree[local[y]];
    }
  std::int64_t supply = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::int64_t balance = q * degree[v] - twice_p;
    if (balance > 0) {
      arcs.push_back({source, v, balance});
      supply += balance;
    } else if (balance < 0) {
      arcs.push_back({v, sink, -balance});
    }
  }
  detail::MaxFlow flow(n + 2, arcs);

  CutResult out;
  out.excess = supply - flow.run(source, sink);
  if (out.excess > 0) {
    auto side = flow.source_side();
    for (std::uint32_t v = 0; v < n; ++v)
      if (side[v]) out.vertices.push_back(global[v]);
  }
  return out;
}

Rational density_of(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : vertices) in[v] = 1;
  std::int64_t inside = 0;
  for (const auto& [u, v] : g.edges())
    if (in[u] && in[v]) ++inside;
  return Rational(inside, static_cast<std::int64_t>(vertices.size()));
}

// Vertices of the k-core, sorted.
std::vector<Vertex> core_vertices(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < k) {
      removed[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.neighbors(v))
      if (!removed[inc.neighbor] && --degree[inc.neighbor] < k) {
        removed[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) out.push_back(v);
  return out;
}

}  // namespace

DensestSubgraph densest_subgraph(const Graph& g) {
  if (g.edge_count() == 0) throw InvalidInput("maximum density is undefined for an edgeless graph");
  DensestSubgraph best;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) best.vertices.push_back(v);
  best.density = density_of(g, best.vertices);
  // Any strictly denser set has minimum degree above the current density, and
  // the denser sets found later stay inside the previous cut.
  std::vector<Vertex> within = core_vertices(g, static_cast<std::size_t>(best.density.floor()) + 1);
  while (!within.empty()) {
    CutResult cut = densest_cut(g, within, best.density);
    if (cut.excess == 0) break;
    Rational next = density_of(g, cut.vertices);
    if (next <= best.density) throw InvariantViolation("density search failed to improve on a positive cut");
    best.density = next;
    within = std::move(cut.vertices);
    best.vertices = within;
  }
  return best;
}

Density max_density(const Graph& g) {
  return densest_subgraph(g).density;
}

Density mad(const Graph& g) {
  return Rational(2) * max_density(g);
}

}  // namespace sparse_ec
