#pragma once

#include <cstddef>
#include <cstdint>

#include "sparse_ec/graph.hpp"

namespace sparse_ec::gen {

/// K_{1,leaves}; vertex 0 is the center.
Graph star(std::size_t leaves);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph petersen();

/// Union of k uniformly random labelled spanning trees on n vertices (Prüfer
/// codes), repeated pairs dropped. Arboricity at most k.
Graph kforest(std::size_t k, std::size_t n, std::uint64_t seed);

/// Vertices in random order; each joins min(k, #earlier) distinct earlier
/// vertices chosen uniformly. Degeneracy at most k.
Graph kdegenerate(std::size_t k, std::size_t n, std::uint64_t seed);

/// Vertex-disjoint union; b's vertices are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace sparse_ec::gen
