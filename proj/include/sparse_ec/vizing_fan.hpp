#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sparse_ec/coloring_state.hpp"

namespace sparse_ec {

enum class Activation {
  /// Some spoke shares a free color with the center.
  kSharedWithCenter,
  /// Two spokes share a free color that the center lacks.
  kSharedBetweenSpokes,
};

/// A fan (x, y_1, ..., y_k) around center x:
///   F1 spokes are distinct neighbours of x,
///   F2 x y_1 is uncolored,
///   F3 for i >= 2, color(x y_i) is free at some earlier spoke,
///   F4 for i >= 2, d(y_i) < D,
/// together with the witness that made it active.
struct Fan {
  Vertex center = kNoVertex;
  std::vector<Vertex> spokes;
  std::vector<EdgeId> spoke_edges;
  Activation activation = Activation::kSharedWithCenter;
  /// The color that triggered activation.
  Color color = kUncolored;
  /// kSharedWithCenter: index of the spoke sharing `color` with x (always the
  /// last one). kSharedBetweenSpokes: lowest spoke index with `color` free.
  std::size_t witness = 0;

  std::size_t size() const { return spokes.size(); }
};

struct FanOptions {
  /// Reject x y_1 unless it is (D,x)-weak. Only tests that replay fixed
  /// configurations turn this off; the builder then reports exhaustion as a
  /// PreconditionError instead of an invariant breach.
  bool require_weak = true;
};

/// Builds the minimal active fan at x starting with the uncolored edge x y1,
/// in O(D). Free colors of each new spoke are scanned in increasing order; a
/// color free at x wins over a color already seen at an earlier spoke; new
/// spokes are pulled from a FIFO of seen colors, skipping neighbours of
/// degree D.
Fan build_minimal_active_fan(const PartialColoring& s, Vertex x, Vertex y1, FanOptions options = {});

/// Direct check of F1-F4 against the current state.
bool satisfies_fan_conditions(const PartialColoring& s, Vertex x, std::span<const Vertex> spokes);

/// Direct check of A1/A2 for (x, spokes) against the current state.
bool is_active(const PartialColoring& s, Vertex x, std::span<const Vertex> spokes);

/// Rotates the fan prefix (x, y_1, ..., y_prefix) with c free at x and at
/// y_prefix: walking i = prefix..1, whenever c is free at y_i the edge x y_i
/// takes c and c becomes its old color. Afterwards x y_1 is colored and no
/// other edge changed colored/uncolored status. The rotation is dry-run
/// first; any failed precondition throws before mutating.
/// Returns the edges whose color changed, x y_1 last.
std::vector<EdgeId> rotate_fan(PartialColoring& s, const Fan& fan, Color c, std::size_t prefix);
inline std::vector<EdgeId> rotate_fan(PartialColoring& s, const Fan& fan, Color c) {
  return rotate_fan(s, fan, c, fan.size());
}

/// Colors of the alternating path coloring x y1 would swap. Empty when the
/// fan activates through the center; otherwise {a = witness color,
/// b = smallest color free at x}.
struct PathType {
  Color a = kUncolored;
  Color b = kUncolored;

  bool empty() const { return a == kUncolored; }
  /// Unordered form used to group edges by type; (0,0) for the empty type.
  std::pair<Color, Color> key() const { return {std::min(a, b), std::max(a, b)}; }
  friend bool operator==(const PathType&, const PathType&) = default;
};

/// Type of the path that color_weak_edge(x y1) would use, without mutating.
PathType determine_path_type(const PartialColoring& s, Vertex x, Vertex y1, FanOptions options = {});

struct ColorEdgeReport {
  EdgeId colored_edge = kNoEdge;
  Activation activation = Activation::kSharedWithCenter;
  std::size_t fan_size = 0;
  /// Size of the fan prefix that was rotated.
  std::size_t rotated_prefix = 0;
  AlternatingPath path;
  /// Previously colored edges whose color changed, sorted.
  std::vector<EdgeId> recolored_edges;
};

/// Extends the coloring to the uncolored (D,x)-weak edge e in O(D + |P|).
/// Changes only edges at x and edges of one alternating path P from x.
/// `forced_free_color`, when given, must be free at x and is used as the
/// center-side color of P.
ColorEdgeReport color_weak_edge(PartialColoring& s, EdgeId e, Vertex x,
                                std::optional<Color> forced_free_color = std::nullopt, FanOptions options = {});

}  // namespace sparse_ec
