#include "sparse_ec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "sparse_ec/errors.hpp"

namespace sparse_ec {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kConflict:
      return "conflict";
    case ViolationKind::kUncolored:
      return "uncolored";
    case ViolationKind::kOutOfPalette:
      return "out-of-palette";
  }
  return "?";
}

std::string describe(const Graph& g, const Violation& v) {
  std::string out = to_string(v.kind);
  for (EdgeId e : v.edges) {
    const auto ends = g.endpoints(e);
    out += " edge " + std::to_string(e) + " (" + std::to_string(ends.u) + "," + std::to_string(ends.v) + ")";
  }
  if (v.at != kNoVertex) out += " at vertex " + std::to_string(v.at);
  return out;
}

ValidationOutcome validate_coloring(const Graph& g, std::span<const Color> colors, Color palette) {
  ValidationOutcome out;
  if (colors.size() != g.edge_count())
    throw InvalidInput("coloring has " + std::to_string(colors.size()) + " entries for " +
                       std::to_string(g.edge_count()) + " edges");
  for (EdgeId e = 0; e < colors.size(); ++e) {
    if (colors[e] == kUncolored)
      out.violations.push_back({ViolationKind::kUncolored, {e}, kNoVertex});
    else if (colors[e] > palette)
      out.violations.push_back({ViolationKind::kOutOfPalette, {e}, kNoVertex});
  }
  std::vector<EdgeId> first_with;
  std::vector<Color> touched;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const auto& inc : g.neighbors(v)) {
      const Color c = colors[inc.edge];
      if (c == kUncolored) continue;
      if (first_with.size() <= c) first_with.resize(c + 1, kNoEdge);
      if (first_with[c] == kNoEdge) {
        first_with[c] = inc.edge;
        touched.push_back(c);
      } else {
        out.violations.push_back({ViolationKind::kConflict, {first_with[c], inc.edge}, v});
      }
    }
    for (Color c : touched) first_with[c] = kNoEdge;
    touched.clear();
  }
  out.ok = out.violations.empty();
  return out;
}

ValidationOutcome validate_coloring(const PartialColoring& s) {
  return validate_coloring(s.graph(), s.colors(), s.palette());
}

namespace {

class EdgeColorSearch {
 public:
  EdgeColorSearch(const Graph& g, std::size_t k) : g_(g), k_(k), used_(g.vertex_count(), 0) {
    order_.resize(g.edge_count());
    std::iota(order_.begin(), order_.end(), EdgeId{0});
    auto weight = [&](EdgeId e) {
      const auto ends = g.endpoints(e);
      return g.degree(ends.u) + g.degree(ends.v);
    };
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
    colored_.assign(g.edge_count(), 0);
  }

  bool run() { return place(0, 0); }

 private:
  // Remaining edges at each vertex must fit in its free colors.
  bool feasible(Vertex v) const {
    return static_cast<std::size_t>(std::popcount(used_[v])) + remaining_at(v) <= k_;
  }
  std::size_t remaining_at(Vertex v) const {
    std::size_t count = 0;
    for (const auto& inc : g_.neighbors(v))
      if (!colored_[inc.edge]) ++count;
    return count;
  }

  bool place(std::size_t i, std::size_t colors_open) {
    if (i == order_.size()) return true;
    const EdgeId e = order_[i];
    const auto [u, v] = g_.endpoints(e);
    const std::uint32_t busy = used_[u] | used_[v];
    const std::size_t limit = std::min(k_, colors_open + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      const std::uint32_t bit = 1u << c;
      if (busy & bit) continue;
      used_[u] |= bit;
      used_[v] |= bit;
      colored_[e] = 1;
      bool ok = true;
      for (Vertex w : {u, v})
        for (const auto& inc : g_.neighbors(w)) {
          if (colored_[inc.edge]) continue;
          const auto ends = g_.endpoints(inc.edge);
          if (std::popcount(used_[ends.u] | used_[ends.v]) >= static_cast<int>(k_)) ok = false;
        }
      ok = ok && feasible(u) && feasible(v);
      if (ok && place(i + 1, std::max(colors_open, c + 1))) return true;
      colored_[e] = 0;
      used_[u] &= ~bit;
      used_[v] &= ~bit;
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<EdgeId> order_;
  std::vector<std::uint32_t> used_;
  std::vector<char> colored_;
};

}  // namespace

std::size_t brute_chromatic_index(const Graph& g) {
  if (g.edge_count() > kBruteMaxEdges)
    throw InvalidInput("brute_chromatic_index handles at most " + std::to_string(kBruteMaxEdges) + " edges");
  if (g.max_degree() > kBruteMaxDegree)
    throw InvalidInput("brute_chromatic_index handles maximum degree at most " + std::to_string(kBruteMaxDegree));
  if (g.edge_count() == 0) return 0;
  for (std::size_t k = g.max_degree();; ++k) {
    EdgeColorSearch search(g, k);
    if (search.run()) return k;
  }
}

Rational brute_mad(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InvalidInput("brute_mad needs at least one vertex");
  if (n > kBruteMaxVertices)
    throw InvalidInput("brute_mad handles at most " + std::to_string(kBruteMaxVertices) + " vertices");
  std::vector<std::uint32_t> adjacency(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adjacency[u] |= 1u << v;
    adjacency[v] |= 1u << u;
  }
  // Gray code walk: each step toggles one vertex and adjusts the edge count.
  std::uint32_t set = 0;
  std::int64_t edges = 0;
  std::int64_t best_edges = 0, best_size = 1;
  for (std::uint32_t step = 1; step < (1u << n); ++step) {
    const int v = std::countr_zero(step);
    const auto inside = std::popcount(adjacency[v] & set);
    if (set & (1u << v)) {
      set &= ~(1u << v);
      edges -= inside;
    } else {
      set |= 1u << v;
      edges += inside;
    }
    const std::int64_t size = std::popcount(set);
    if (edges * best_size > best_edges * size) {
      best_edges = edges;
      best_size = size;
    }
  }
  return Rational(2 * best_edges, best_size);
}

}  // namespace sparse_ec
