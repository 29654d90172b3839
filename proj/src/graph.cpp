#include "sparse_ec/graph.hpp"

#include <algorithm>
#include <string>

#include "sparse_ec/errors.hpp"

namespace sparse_ec {
namespace {

std::string pair_text(const Endpoints& p) {
  return "(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")";
}

}  // namespace

Graph build_graph_trusted(std::size_t n, std::vector<Endpoints> pairs) {
  Graph g;
  g.vertex_count_ = n;
  g.edges_ = std::move(pairs);
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : g.edges_) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1]);
    g.offsets_[v + 1] += g.offsets_[v];
  }
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    const auto [u, v] = g.edges_[e];
    g.adjacency_[cursor[u]++] = {v, e};
    g.adjacency_[cursor[v]++] = {u, e};
  }
  return g;
}

Graph build_graph(std::size_t n, std::span<const Endpoints> pairs) {
  std::vector<std::pair<std::uint64_t, std::size_t>> keys;
  keys.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (p.u >= n || p.v >= n)
      throw InvalidInput("vertex out of range in pair " + pair_text(p) + " for n=" + std::to_string(n));
    if (p.u == p.v) throw InvalidInput("self-loop " + pair_text(p));
    std::uint64_t lo = std::min(p.u, p.v), hi = std::max(p.u, p.v);
    keys.emplace_back((lo << 32) | hi, i);
  }
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 1; i < keys.size(); ++i) {
    if (keys[i].first == keys[i - 1].first)
      throw InvalidInput("duplicate pair " + pair_text(pairs[keys[i].second]) + " (first seen as " +
                         pair_text(pairs[keys[i - 1].second]) + ")");
  }
  return build_graph_trusted(n, std::vector<Endpoints>(pairs.begin(), pairs.end()));
}

EdgeId Graph::find_edge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  for (const auto& inc : neighbors(u))
    if (inc.neighbor == v) return inc.edge;
  return kNoEdge;
}

EdgeSubset::EdgeSubset(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

EdgeSubset EdgeSubset::all(const Graph& g) {
  std::vector<EdgeId> ids(g.edge_count());
  for (EdgeId e = 0; e < ids.size(); ++e) ids[e] = e;
  return EdgeSubset(std::move(ids));
}

bool EdgeSubset::contains(EdgeId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

EdgeSubgraph subgraph_of_edges(const Graph& g, const EdgeSubset& keep) {
  EdgeSubgraph out;
  std::vector<Endpoints> pairs;
  pairs.reserve(keep.size());
  out.to_parent.reserve(keep.size());
  for (EdgeId e : keep.ids()) {
    if (e >= g.edge_count())
      throw InvalidInput("edge id " + std::to_string(e) + " not in graph with " + std::to_string(g.edge_count()) +
                         " edges");
    pairs.push_back(g.endpoints(e));
    out.to_parent.push_back(e);
  }
  out.graph = build_graph_trusted(g.vertex_count(), std::move(pairs));
  return out;
}

StrippedGraph strip_isolated(const Graph& g) {
  StrippedGraph out;
  std::vector<Vertex> remap(g.vertex_count(), kNoVertex);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    remap[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Endpoints> pairs;
  pairs.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) pairs.push_back({remap[u], remap[v]});
  out.graph = build_graph_trusted(out.to_parent.size(), std::move(pairs));
  return out;
}

CompactSubgraph compact_subgraph(const Graph& g, std::span<const EdgeId> keep_sorted) {
  CompactSubgraph out;
  out.edge_to_parent.assign(keep_sorted.begin(), keep_sorted.end());
  auto& verts = out.vertex_to_parent;
  verts.reserve(2 * keep_sorted.size());
  for (EdgeId e : keep_sorted) {
    verts.push_back(g.endpoints(e).u);
    verts.push_back(g.endpoints(e).v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<Endpoints> pairs;
  pairs.reserve(keep_sorted.size());
  for (EdgeId e : keep_sorted) pairs.push_back({local(g.endpoints(e).u), local(g.endpoints(e).v)});
  out.graph = build_graph_trusted(verts.size(), std::move(pairs));
  return out;
}

}  // namespace sparse_ec
