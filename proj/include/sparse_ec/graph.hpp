#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sparse_ec/types.hpp"

namespace sparse_ec {

struct Endpoints {
  Vertex u;
  Vertex v;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Immutable simple graph on vertices 0..n-1. Edge ids are 0..m-1 in input
/// order, and each adjacency list follows input order as well; everything
/// downstream that needs a tie-break keys off these two orders.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t max_degree() const { return max_degree_; }

  std::span<const Endpoints> edges() const { return edges_; }
  const Endpoints& endpoints(EdgeId e) const { return edges_[e]; }
  Vertex other_end(EdgeId e, Vertex v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  std::span<const Incidence> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Edge joining u and v, or kNoEdge. O(min(d(u), d(v))).
  EdgeId find_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(std::size_t, std::span<const Endpoints>);
  friend Graph build_graph_trusted(std::size_t, std::vector<Endpoints>);

  std::size_t vertex_count_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<Endpoints> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
};

/// Builds a graph from vertex pairs. Throws InvalidInput on an out-of-range
/// vertex, a self-loop or a repeated unordered pair, naming the offender.
Graph build_graph(std::size_t n, std::span<const Endpoints> pairs);

/// Same as build_graph without the simplicity checks; for callers that derive
/// pairs from an existing simple graph.
Graph build_graph_trusted(std::size_t n, std::vector<Endpoints> pairs);

/// A set of edge ids of some parent graph, stored sorted and deduplicated.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::vector<EdgeId> ids);

  static EdgeSubset all(const Graph& g);

  std::span<const EdgeId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(EdgeId e) const;

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::vector<EdgeId> ids_;
};

struct EdgeSubgraph {
  Graph graph;
  /// to_parent[new edge id] = edge id in the parent graph.
  std::vector<EdgeId> to_parent;
};

/// Graph on the same vertex set holding exactly the edges in `keep`, in
/// increasing parent-id order. Throws InvalidInput on an unknown id.
EdgeSubgraph subgraph_of_edges(const Graph& g, const EdgeSubset& keep);

struct StrippedGraph {
  Graph graph;
  /// to_parent[new vertex id] = vertex id in the parent graph.
  std::vector<Vertex> to_parent;
};

/// Drops degree-0 vertices and renumbers the rest in increasing order. Edge
/// ids and edge order are unchanged.
StrippedGraph strip_isolated(const Graph& g);

/// Edge-induced subgraph with isolated vertices already stripped; the
/// composition of subgraph_of_edges and strip_isolated in O(|keep| log |keep|).
struct CompactSubgraph {
  Graph graph;
  std::vector<EdgeId> edge_to_parent;
  std::vector<Vertex> vertex_to_parent;
};
CompactSubgraph compact_subgraph(const Graph& g, std::span<const EdgeId> keep_sorted);

}  // namespace sparse_ec
