#include "sparse_ec/coloring_state.hpp"

#include <string>

#include "sparse_ec/errors.hpp"

namespace sparse_ec {

PartialColoring::PartialColoring(const Graph& g, Color palette)
    : graph_(&g),
      palette_(palette),
      stride_(static_cast<std::size_t>(palette) + 1),
      words_per_vertex_((static_cast<std::size_t>(palette) + 1 + 63) / 64) {
  if (palette < 1) throw InvalidInput("palette size must be at least 1");
  const std::size_t n = g.vertex_count();
  colors_.assign(g.edge_count(), kUncolored);
  color_map_.assign(n * stride_, kNoEdge);
  free_count_.assign(n, palette);
  std::vector<std::uint64_t> pattern(words_per_vertex_, ~std::uint64_t{0});
  pattern[0] &= ~std::uint64_t{1};  // color 0 is not a color
  std::size_t spare = words_per_vertex_ * 64 - stride_;
  if (spare) pattern.back() &= ~std::uint64_t{0} >> spare;
  free_bits_.resize(n * words_per_vertex_);
  for (std::size_t v = 0; v < n; ++v)
    std::copy(pattern.begin(), pattern.end(), free_bits_.begin() + static_cast<std::ptrdiff_t>(v * words_per_vertex_));
}

std::vector<Color> PartialColoring::free_colors(Vertex v) const {
  std::vector<Color> out;
  out.reserve(free_count_[v]);
  for_each_free(v, [&](Color c) {
    out.push_back(c);
    return true;
  });
  return out;
}

Color PartialColoring::smallest_free(Vertex v) const {
  Color found = kUncolored;
  for_each_free(v, [&](Color c) {
    found = c;
    return false;
  });
  return found;
}

void PartialColoring::set_slot(Vertex v, Color c, EdgeId e) {
  color_map_[v * stride_ + c] = e;
  free_bits_[v * words_per_vertex_ + c / 64] &= ~(std::uint64_t{1} << (c % 64));
  --free_count_[v];
}

void PartialColoring::clear_slot(Vertex v, Color c) {
  color_map_[v * stride_ + c] = kNoEdge;
  free_bits_[v * words_per_vertex_ + c / 64] |= std::uint64_t{1} << (c % 64);
  ++free_count_[v];
}

void PartialColoring::assign(EdgeId e, Color c) {
  if (e >= colors_.size()) throw InvalidInput("edge id " + std::to_string(e) + " out of range");
  if (colors_[e] != kUncolored)
    throw PreconditionError("edge " + std::to_string(e) + " already colored " + std::to_string(colors_[e]));
  if (c < 1 || c > palette_)
    throw PreconditionError("color " + std::to_string(c) + " outside palette 1.." + std::to_string(palette_));
  const auto [u, v] = graph_->endpoints(e);
  for (Vertex w : {u, v}) {
    if (!is_free(w, c))
      throw PreconditionError("color " + std::to_string(c) + " already used at vertex " + std::to_string(w) +
                              " by edge " + std::to_string(edge_with(w, c)));
  }
  set_slot(u, c, e);
  set_slot(v, c, e);
  colors_[e] = c;
  ++colored_;
}

void PartialColoring::unassign(EdgeId e) {
  if (e >= colors_.size()) throw InvalidInput("edge id " + std::to_string(e) + " out of range");
  Color c = colors_[e];
  if (c == kUncolored) throw PreconditionError("edge " + std::to_string(e) + " is not colored");
  const auto [u, v] = graph_->endpoints(e);
  clear_slot(u, c);
  clear_slot(v, c);
  colors_[e] = kUncolored;
  --colored_;
}

bool PartialColoring::self_check() const {
  const Graph& g = *graph_;
  std::size_t colored = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Color c = colors_[e];
    if (c == kUncolored) continue;
    if (c > palette_) return false;
    ++colored;
    if (edge_with(g.endpoints(e).u, c) != e || edge_with(g.endpoints(e).v, c) != e) return false;
  }
  if (colored != colored_) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::size_t used = 0;
    for (Color c = 1; c <= palette_; ++c) {
      EdgeId e = edge_with(v, c);
      bool bit = (free_bits_[v * words_per_vertex_ + c / 64] >> (c % 64)) & 1;
      if (bit != (e == kNoEdge)) return false;
      if (e == kNoEdge) continue;
      ++used;
      if (e >= g.edge_count() || colors_[e] != c) return false;
      if (g.endpoints(e).u != v && g.endpoints(e).v != v) return false;
    }
    if (free_count_[v] != palette_ - used) return false;
  }
  return true;
}

AlternatingPath walk_alternating(const PartialColoring& s, Vertex start, Color a, Color b) {
  if (a == b) throw PreconditionError("alternating path needs two distinct colors");
  if (a < 1 || b < 1 || a > s.palette() || b > s.palette())
    throw PreconditionError("alternating path colors outside the palette");
  const bool has_a = !s.is_free(start, a), has_b = !s.is_free(start, b);
  if (has_a && has_b)
    throw PreconditionError("both colors " + std::to_string(a) + " and " + std::to_string(b) + " present at vertex " +
                            std::to_string(start) + "; walk direction is ambiguous");
  AlternatingPath path;
  path.start = path.end = start;
  path.first = has_b ? b : a;
  path.second = has_b ? a : b;
  if (!has_a && !has_b) return path;

  const Graph& g = s.graph();
  Vertex v = start;
  Color next = path.first;
  for (;;) {
    EdgeId e = s.edge_with(v, next);
    if (e == kNoEdge) break;
    if (path.edges.size() >= g.edge_count())
      throw InvariantViolation("alternating walk exceeded the edge count");
    path.edges.push_back(e);
    v = g.other_end(e, v);
    next = next == path.first ? path.second : path.first;
  }
  path.end = v;
  return path;
}

void swap_path(PartialColoring& s, const AlternatingPath& p) {
  if (p.empty()) return;
  const Graph& g = s.graph();
  auto stale = [](const std::string& why) { return PreconditionError("stale alternating path: " + why); };
  if (p.first == p.second || p.first < 1 || p.second < 1 || p.first > s.palette() || p.second > s.palette())
    throw stale("bad color pair");
  if (!s.is_free(p.start, p.second)) throw stale("start vertex is not a path end");

  Vertex v = p.start;
  Color expect = p.first;
  for (EdgeId e : p.edges) {
    if (e >= g.edge_count() || s.color_of(e) != expect) throw stale("edge " + std::to_string(e) + " changed color");
    const auto [a, b] = g.endpoints(e);
    if (a != v && b != v) throw stale("edge " + std::to_string(e) + " does not continue the path");
    v = g.other_end(e, v);
    expect = expect == p.first ? p.second : p.first;
  }
  if (v != p.end) throw stale("end vertex mismatch");
  if (!s.is_free(p.end, expect)) throw stale("path is no longer maximal");

  const auto flip = [&](Color c) { return c == p.first ? p.second : p.first; };
  for (EdgeId e : p.edges) {
    const auto [a, b] = g.endpoints(e);
    s.clear_slot(a, s.colors_[e]);
    s.clear_slot(b, s.colors_[e]);
  }
  for (EdgeId e : p.edges) {
    const auto [a, b] = g.endpoints(e);
    Color c = flip(s.colors_[e]);
    s.set_slot(a, c, e);
    s.set_slot(b, c, e);
    s.colors_[e] = c;
  }
}

}  // namespace sparse_ec
