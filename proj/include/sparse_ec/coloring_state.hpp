#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sparse_ec/graph.hpp"

namespace sparse_ec {

struct AlternatingPath;

/// Mutable partial D-edge-coloring of a fixed graph.
///
/// Besides the per-edge color it keeps, for every vertex v, a direct-address
/// table color -> incident edge (M_v) and a bitmap of free colors, so that
/// membership, lookup and free-color enumeration are O(1) per color. Space is
/// O(n * D); callers keep D small by partitioning first.
///
/// The state borrows the graph: the Graph must outlive it.
class PartialColoring {
 public:
  /// All edges uncolored. Throws InvalidInput if palette < 1.
  PartialColoring(const Graph& g, Color palette);

  const Graph& graph() const { return *graph_; }
  Color palette() const { return palette_; }

  Color color_of(EdgeId e) const { return colors_[e]; }
  std::span<const Color> colors() const { return colors_; }
  std::size_t colored_count() const { return colored_; }

  /// Edge at v colored c, or kNoEdge.
  EdgeId edge_with(Vertex v, Color c) const { return color_map_[v * stride_ + c]; }
  bool is_free(Vertex v, Color c) const { return edge_with(v, c) == kNoEdge; }
  std::size_t free_count(Vertex v) const { return free_count_[v]; }

  /// Calls fn(c) for every color free at v, in increasing order. Stops early
  /// if fn returns false.
  template <class Fn>
  void for_each_free(Vertex v, Fn&& fn) const {
    const std::uint64_t* words = free_bits_.data() + v * words_per_vertex_;
    for (std::size_t w = 0; w < words_per_vertex_; ++w) {
      std::uint64_t bits = words[w];
      while (bits) {
        auto c = static_cast<Color>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        if (!fn(c)) return;
        bits &= bits - 1;
      }
    }
  }
  std::vector<Color> free_colors(Vertex v) const;
  /// Smallest free color at v, or kUncolored if none.
  Color smallest_free(Vertex v) const;

  /// Colors an uncolored edge. Throws PreconditionError naming the conflict
  /// if e is already colored, c is out of range or c is used at an endpoint.
  void assign(EdgeId e, Color c);
  /// Uncolors a colored edge. Throws PreconditionError if e is uncolored.
  void unassign(EdgeId e);

  /// Full O(n*D + m) consistency scan of assignment, color maps, free bitmaps
  /// and free counts. Used by tests and debug checks.
  bool self_check() const;

 private:
  friend void swap_path(PartialColoring&, const AlternatingPath&);

  void set_slot(Vertex v, Color c, EdgeId e);
  void clear_slot(Vertex v, Color c);

  const Graph* graph_;
  Color palette_;
  std::size_t stride_;
  std::size_t words_per_vertex_;
  std::size_t colored_ = 0;
  std::vector<Color> colors_;
  std::vector<EdgeId> color_map_;
  std::vector<std::uint64_t> free_bits_;
  std::vector<std::uint32_t> free_count_;
};

/// A maximal path whose edges alternate between two colors. `first` is the
/// color of the edge at `start`. An empty path has start == end.
struct AlternatingPath {
  Vertex start = kNoVertex;
  Vertex end = kNoVertex;
  Color first = kUncolored;
  Color second = kUncolored;
  std::vector<EdgeId> edges;

  bool empty() const { return edges.empty(); }
  std::size_t length() const { return edges.size(); }
  friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

/// The unique maximal (a,b)-alternating path leaving `start` through whichever
/// of a, b is present there; empty when neither is. O(|P|).
/// Throws PreconditionError if a == b or both colors are present at start.
AlternatingPath walk_alternating(const PartialColoring& s, Vertex start, Color a, Color b);

/// Exchanges the two colors along p in O(|P|). The path is re-verified
/// (colors, connectivity, maximality) before anything changes; a stale path
/// raises PreconditionError and leaves the state untouched.
void swap_path(PartialColoring& s, const AlternatingPath& p);

}  // namespace sparse_ec
