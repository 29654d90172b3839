#pragma once

#include <cstddef>
#include <vector>

#include "sparse_ec/graph.hpp"

namespace sparse_ec {

/// Weakness of an edge uv for a palette of D colors. The edge is (D,u)-weak
/// when u has at most D - d(v) + [d(v) = D] neighbours of degree exactly D.
struct WeaknessVerdict {
  EdgeId edge = kNoEdge;
  bool u_weak = false;  // w.r.t. endpoints(edge).u
  bool v_weak = false;  // w.r.t. endpoints(edge).v
  /// Endpoint the edge gets colored from; the smaller id when both qualify.
  Vertex designated = kNoVertex;

  bool weak() const { return u_weak || v_weak; }
};

/// Number of neighbours of v whose degree is exactly D.
std::size_t top_degree_count(const Graph& g, Vertex v, std::size_t palette);

/// True when edge e is (D, x)-weak; x must be an endpoint of e.
bool is_weak_at(const Graph& g, EdgeId e, Vertex x, std::size_t palette);

WeaknessVerdict classify_edge(const Graph& g, EdgeId e, std::size_t palette);

struct WeakEdges {
  EdgeSubset edges;
  /// One verdict per weak edge, in increasing edge id order.
  std::vector<WeaknessVerdict> verdicts;
};

/// All D-weak edges, in O(n + m): one pass for d^D, then O(1) per edge.
WeakEdges weak_edges(const Graph& g, std::size_t palette);

/// Graph with no weak edges at D = Δ: Δ-d+2 copies of K_{d-1,d} whose
/// degree-(d-1) sides are regrouped into d cliques K_{Δ-d+2}, Δ = d(d-1).
/// Throws InvalidInput for d < 3.
Graph strong_graph(std::size_t d);

}  // namespace sparse_ec
