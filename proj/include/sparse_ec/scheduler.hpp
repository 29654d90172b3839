#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sparse_ec/coloring_state.hpp"
#include "sparse_ec/graph.hpp"
#include "sparse_ec/rational.hpp"
#include "sparse_ec/rng.hpp"
#include "sparse_ec/vizing_fan.hpp"

namespace sparse_ec {

enum class Mode { kRandomized, kDeterministic };

enum class PalettePolicy {
  /// Δ colors; rejected unless Δ >= 2 mad.
  kExactDelta,
  /// Δ + 1 colors.
  kDeltaPlusOne,
  /// Δ colors when Δ >= 2 mad, Δ + 1 otherwise.
  kAuto,
};

struct RunConfig {
  Mode mode = Mode::kDeterministic;
  /// Required for kRandomized, must be empty for kDeterministic.
  std::optional<std::uint64_t> seed;
  PalettePolicy palette_policy = PalettePolicy::kAuto;
  /// Keep per-batch records in the report.
  bool instrumentation = true;

  /// Throws InvalidInput when seed presence does not match the mode.
  void validate() const;
};

/// An uncolored weak edge and the endpoint it is weak at.
struct WeakTask {
  EdgeId edge = kNoEdge;
  Vertex center = kNoVertex;
};

struct CnBatchResult {
  std::size_t pending = 0;
  PathType type;
  /// Pending edges whose path type equals `type`.
  std::size_t type_class_size = 0;
  /// Greedy maximal independent set of the closed-neighbourhood conflict graph.
  std::size_t independent_size = 0;
  /// Pairs in that set whose paths end next to the other's center.
  std::size_t path_conflicts = 0;
  std::vector<EdgeId> colored_edges;
  std::size_t path_length = 0;
  /// Paths used for colored_edges share no edge.
  bool paths_disjoint = true;
};

/// One deterministic batch over the pending weak edges (sorted by edge id,
/// all uncolored, each weak at its center):
///  1. path type of every pending edge;
///  2. the most frequent type t (ties: smallest unordered pair, empty first);
///  3. greedy maximal set S of type-t edges, in edge-id order, whose centers
///     have pairwise disjoint closed neighbourhoods;
///  4. for t nonempty, drop pairs of S where one path ends in the other
///     center's closed neighbourhood, keeping an independent set I with
///     |I| >= |S| / 9; otherwise I = S;
///  5. color I, re-deriving each type first. A changed type or path means
///     two supposedly independent edges interacted: InvariantViolation.
CnBatchResult cn_batch(PartialColoring& s, std::span<const WeakTask> pending);

struct LevelRecord {
  std::size_t edges = 0;
  std::size_t weak_edges = 0;
  std::size_t max_degree = 0;
};

struct BatchRecord {
  std::size_t pending = 0;
  std::size_t colored = 0;
  std::size_t palette = 0;
  std::size_t path_length = 0;
  bool paths_disjoint = true;
};

struct ComponentReport {
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  Color palette = 0;
  Color offset = 0;
  std::size_t recursion_depth = 0;
  std::vector<LevelRecord> levels;
  std::size_t total_path_length = 0;
  std::size_t cn_iterations = 0;
  std::vector<BatchRecord> batches;
};

struct ComponentColoring {
  /// Colors 1..palette per edge of the input graph.
  std::vector<Color> colors;
  ComponentReport report;
};

/// Colors every edge of g with `palette` >= Δ(g) colors by peeling weak
/// edges level by level (each level is the previous minus its weak edges,
/// isolated vertices dropped), then extending the coloring back up one level
/// at a time. Randomized mode colors a level's weak edges in random order with
/// a random free center color; deterministic mode repeats cn_batch.
/// Throws PreconditionError when a nonempty level has no weak edge.
ComponentColoring color_component_recursive(const Graph& g, Color palette, const RunConfig& cfg, Rng* rng = nullptr);

struct ColoringReport {
  Mode mode = Mode::kDeterministic;
  std::optional<std::uint64_t> seed;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::optional<Rational> mad;
  std::size_t width = 0;
  bool precondition_held = false;
  bool exact_palette = false;
  bool partition_clamped = false;
  Color palette = 0;
  std::vector<ComponentReport> components;
  std::size_t total_path_length = 0;
  std::size_t cn_iterations = 0;
  std::size_t max_recursion_depth = 0;
  double sparsity_ms = 0;
  double coloring_ms = 0;
  double wall_ms = 0;
};

struct GraphColoring {
  std::vector<Color> colors;
  Color palette = 0;
  ColoringReport report;
};

/// Full pipeline: exact mad, width c = ceil(2 mad), (Δ,c)-partition, each
/// part colored on its own disjoint palette slice and merged.
/// Throws PaletteTooSmall for kExactDelta when Δ < 2 mad.
GraphColoring color_graph(const Graph& g, const RunConfig& cfg);

std::string to_string(Mode mode);
std::string to_string(PalettePolicy policy);

}  // namespace sparse_ec
