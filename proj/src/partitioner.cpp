#include "sparse_ec/partitioner.hpp"

#include <string>

#include "sparse_ec/errors.hpp"
#include "sparse_ec/sparsity.hpp"

namespace sparse_ec {

EdgePartition delta_c_partition(const Graph& g, std::size_t width) {
  if (g.edge_count() == 0) throw InvalidInput("cannot partition an edgeless graph");
  if (width == 0) throw InvalidInput("partition width must be positive");
  const DegeneracyOrdering ordering = degeneracy_ordering(g);
  if (width < ordering.degeneracy)
    throw InvalidInput("partition width " + std::to_string(width) + " is below the degeneracy " +
                       std::to_string(ordering.degeneracy));

  EdgePartition out;
  out.width = width;
  std::size_t parts = g.max_degree() / width;
  if (parts == 0) {
    parts = 1;
    out.clamped = true;
  }
  const std::size_t last = parts - 1;

  std::vector<std::size_t> part_of(g.edge_count(), 0);
  // Degree of the current vertex inside each bounded part; reset via `touched`.
  std::vector<std::size_t> local_degree(parts, 0);
  std::vector<std::size_t> touched;
  std::size_t work = 0;

  for (Vertex v : ordering.order) {
    const std::size_t here = ordering.position[v];
    for (const auto& [u, e] : g.neighbors(v)) {
      ++work;
      if (ordering.position[u] < here && part_of[e] < last) {
        if (local_degree[part_of[e]]++ == 0) touched.push_back(part_of[e]);
      }
    }
    std::size_t part = 0;
    for (const auto& [u, e] : g.neighbors(v)) {
      if (ordering.position[u] < here) continue;
      while (part < last && local_degree[part] >= width) {
        ++part;
        ++work;
      }
      part_of[e] = part;
      if (part < last && local_degree[part]++ == 0) touched.push_back(part);
    }
    for (std::size_t p : touched) local_degree[p] = 0;
    touched.clear();
  }

  std::vector<std::vector<EdgeId>> ids(parts);
  for (EdgeId e = 0; e < g.edge_count(); ++e) ids[part_of[e]].push_back(e);
  for (auto& list : ids) out.parts.emplace_back(std::move(list));
  out.work = work + g.vertex_count() + g.edge_count();
  return out;
}

}  // namespace sparse_ec
