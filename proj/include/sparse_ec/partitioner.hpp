#pragma once

#include <cstddef>
#include <vector>

#include "sparse_ec/graph.hpp"

namespace sparse_ec {

/// Edge partition E_1..E_k with Δ(G) = Σ Δ(G[E_i]), Δ(G[E_i]) = c for i < k
/// and c <= Δ(G[E_k]) < 2c.
struct EdgePartition {
  std::vector<EdgeSubset> parts;
  std::size_t width = 0;
  /// Δ(G) < width: a single part holding every edge. The lower bound on the
  /// last part's degree cannot hold in that case.
  bool clamped = false;
  /// Elementary steps taken by the sweep; linear in n + m.
  std::size_t work = 0;
};

/// Vertex sweep in degeneracy order: forward edges of each vertex fill parts
/// 1..s-1 up to residual capacity width - current part degree, the rest go
/// to part s, where s = floor(Δ / width).
/// Throws InvalidInput for an edgeless graph, width = 0, or width below the
/// degeneracy.
EdgePartition delta_c_partition(const Graph& g, std::size_t width);

}  // namespace sparse_ec
