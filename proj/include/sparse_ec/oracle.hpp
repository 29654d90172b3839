#pragma once

#include <span>
#include <string>
#include <vector>

#include "sparse_ec/coloring_state.hpp"
#include "sparse_ec/graph.hpp"
#include "sparse_ec/rational.hpp"

namespace sparse_ec {

enum class ViolationKind { kConflict, kUncolored, kOutOfPalette };

struct Violation {
  ViolationKind kind = ViolationKind::kConflict;
  /// Two edges for a conflict, one otherwise.
  std::vector<EdgeId> edges;
  /// Shared vertex of a conflict.
  Vertex at = kNoVertex;
};

struct ValidationOutcome {
  bool ok = true;
  std::vector<Violation> violations;
};

std::string to_string(ViolationKind kind);
std::string describe(const Graph& g, const Violation& v);

/// Full scan reporting every violation. Colors are 1..palette, 0 is uncolored.
/// A vertex where k edges share a color yields k-1 conflicts.
ValidationOutcome validate_coloring(const Graph& g, std::span<const Color> colors, Color palette);
ValidationOutcome validate_coloring(const PartialColoring& s);

inline constexpr std::size_t kBruteMaxEdges = 40;
inline constexpr std::size_t kBruteMaxDegree = 8;
inline constexpr std::size_t kBruteMaxVertices = 15;

/// Exact chromatic index by backtracking. Throws InvalidInput beyond
/// kBruteMaxEdges edges or kBruteMaxDegree maximum degree.
std::size_t brute_chromatic_index(const Graph& g);

/// Exact mad = max over nonempty vertex sets S of 2|E(S)|/|S|. Throws
/// InvalidInput for an empty graph or more than kBruteMaxVertices vertices.
Rational brute_mad(const Graph& g);

}  // namespace sparse_ec
