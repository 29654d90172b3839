#pragma once

#include <cstddef>
#include <vector>

#include "sparse_ec/graph.hpp"
#include "sparse_ec/rational.hpp"

namespace sparse_ec {

using Density = Rational;

/// Smallest-last ordering: every order[i] has at most `degeneracy`
/// neighbours among order[0..i-1].
struct DegeneracyOrdering {
  std::vector<Vertex> order;
  /// position[v] = index of v in `order`.
  std::vector<std::size_t> position;
  std::size_t degeneracy = 0;
};

/// Bucket-queue smallest-last procedure, O(n + m).
DegeneracyOrdering degeneracy_ordering(const Graph& g);

/// Single scan check of the ordering property for a claimed degeneracy.
bool is_degeneracy_ordering(const Graph& g, const DegeneracyOrdering& ordering);

struct DensestSubgraph {
  Density density;
  std::vector<Vertex> vertices;
};

/// Exact max over nonempty S of |E(S)|/|S| with a witness S. Each round solves
/// one min cut on a density network for the current guess; the cut either
/// certifies the guess or yields a strictly denser witness, which becomes the
/// next guess. Later rounds only look inside the previous witness.
/// Throws InvalidInput on an edgeless graph.
DensestSubgraph densest_subgraph(const Graph& g);

Density max_density(const Graph& g);

/// Maximum average degree, 2 * max_density(g).
Density mad(const Graph& g);

}  // namespace sparse_ec
