#pragma once

#include <map>
#include <set>
#include <vector>

#include "sparse_ec/coloring_state.hpp"
#include "sparse_ec/graph.hpp"
#include "sparse_ec/rng.hpp"
#include "sparse_ec/vizing_fan.hpp"

namespace fixtures {

using namespace sparse_ec;

// A graph together with a coloring to load into a fresh state.
struct Configuration {
  Graph g;
  Color palette = 0;
  std::vector<Color> colors;
  Vertex x = kNoVertex;
  std::vector<Vertex> spokes;

  void load(PartialColoring& s) const {
    for (EdgeId e = 0; e < colors.size(); ++e)
      if (colors[e] != kUncolored) s.assign(e, colors[e]);
  }
  EdgeId edge(Vertex u, Vertex v) const { return g.find_edge(u, v); }
};

class Builder {
 public:
  Vertex vertex() { return next_++; }
  void edge(Vertex u, Vertex v, Color c) {
    edges_.push_back({u, v});
    colors_.push_back(c);
  }
  void leaves(Vertex v, std::initializer_list<Color> colors) {
    for (Color c : colors) edge(v, vertex(), c);
  }
  Configuration finish(Color palette) {
    Configuration out{build_graph(next_, edges_), palette, colors_, kNoVertex, {}};
    return out;
  }

 private:
  Vertex next_ = 0;
  std::vector<Endpoints> edges_;
  std::vector<Color> colors_;
};

// Five-spoke rotation: D = 8, x free only at 8, spoke free sets
// {1,2}, {3,4}, {5}, {6,7}, {8}; x y2..x y5 colored 2, 3, 4, 6. The colors
// 1 and 5 at x lead to vertices of degree D, which the fan must skip.
inline Configuration five_spoke_rotation() {
  Builder b;
  const Vertex x = b.vertex();
  std::vector<Vertex> y;
  for (int i = 0; i < 5; ++i) y.push_back(b.vertex());
  const Vertex z1 = b.vertex(), z5 = b.vertex(), z7 = b.vertex();
  b.edge(x, y[0], kUncolored);
  b.edge(x, y[1], 2);
  b.edge(x, y[2], 3);
  b.edge(x, y[3], 4);
  b.edge(x, y[4], 6);
  b.edge(x, z1, 1);
  b.edge(x, z5, 5);
  b.edge(x, z7, 7);
  b.leaves(y[0], {3, 4, 5, 6, 7, 8});
  b.leaves(y[1], {1, 5, 6, 7, 8});
  b.leaves(y[2], {1, 2, 4, 6, 7, 8});
  b.leaves(y[3], {1, 2, 3, 5, 8});
  b.leaves(y[4], {1, 2, 3, 4, 5, 7});
  b.leaves(z1, {2, 3, 4, 5, 6, 7, 8});
  b.leaves(z5, {1, 2, 3, 4, 6, 7, 8});
  auto out = b.finish(8);
  out.x = x;
  out.spokes = y;
  return out;
}

// D = 7. x free at {4, 7}; y1 free at {1, 3}; the leaf a behind color 1 is
// free at 3 as well but not at x, so two spokes share 3 before anything is
// shared with x. Path type {3, 4}.
inline Configuration spoke_shared_activation() {
  Builder b;
  const Vertex x = b.vertex();
  const Vertex y1 = b.vertex();
  const Vertex a = b.vertex(), bb = b.vertex(), c = b.vertex(), d = b.vertex(), e = b.vertex();
  b.edge(x, y1, kUncolored);
  b.edge(x, a, 1);
  b.edge(x, bb, 2);
  b.edge(x, c, 3);
  b.edge(x, d, 5);
  b.edge(x, e, 6);
  b.leaves(y1, {2, 4, 5, 6, 7});
  auto out = b.finish(7);
  out.x = x;
  out.spokes = {y1, a};
  return out;
}

// Line-by-line replay of the rotation loop on a bare color vector.
// Returns the edges written, in order.
inline std::vector<EdgeId> interpret_rotation(const Graph& g, std::vector<Color>& pi, Vertex x,
                                              const std::vector<Vertex>& y, Color c) {
  auto free_at = [&](Vertex v, Color col) {
    for (const auto& inc : g.neighbors(v))
      if (pi[inc.edge] == col) return false;
    return true;
  };
  std::vector<EdgeId> written;
  std::size_t i = y.size();
  while (i >= 1) {
    if (free_at(y[i - 1], c)) {
      EdgeId xy = g.find_edge(x, y[i - 1]);
      Color prime = pi[xy];
      pi[xy] = c;
      written.push_back(xy);
      c = prime;
    }
    i = i - 1;
  }
  return written;
}

// Random F1-F4 fan in a random partial coloring, plus a rotation color
// free at x and at the last spoke. Returns false when the draw failed.
struct RandomFan {
  Graph g;
  Color palette = 0;
  std::vector<Color> colors;
  Fan fan;
  Color c = kUncolored;
};

inline bool draw_random_fan(Rng& rng, RandomFan& out) {
  const std::size_t n = 5 + rng.below(20);
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Endpoints> edges;
  const std::size_t target = n + rng.below(3 * n);
  for (std::size_t tries = 0; edges.size() < target && tries < 20 * target; ++tries) {
    auto u = static_cast<Vertex>(rng.below(n)), v = static_cast<Vertex>(rng.below(n));
    if (u == v || !seen.insert({std::min(u, v), std::max(u, v)}).second) continue;
    edges.push_back({u, v});
  }
  out.g = build_graph(n, edges);
  const Graph& g = out.g;
  if (g.edge_count() == 0) return false;
  out.palette = static_cast<Color>(g.max_degree() + rng.below(3));
  if (out.palette < 2) return false;
  PartialColoring s(g, out.palette);
  std::vector<EdgeId> order(g.edge_count());
  for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
  rng.shuffle(std::span<EdgeId>(order));
  for (EdgeId e : order) {
    const auto [u, v] = g.endpoints(e);
    std::vector<Color> common;
    for (Color col = 1; col <= out.palette; ++col)
      if (s.is_free(u, col) && s.is_free(v, col)) common.push_back(col);
    if (!common.empty() && rng.below(10) < 9) s.assign(e, common[rng.below(common.size())]);
  }
  std::vector<EdgeId> uncolored;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (s.color_of(e) == kUncolored) uncolored.push_back(e);
  if (uncolored.empty()) return false;
  const EdgeId first = uncolored[rng.below(uncolored.size())];
  auto [u, v] = g.endpoints(first);
  if (rng.below(2)) std::swap(u, v);

  Fan& fan = out.fan;
  fan = Fan{};
  fan.center = u;
  fan.spokes = {v};
  fan.spoke_edges = {first};
  std::set<Color> union_free;
  for (Color col : s.free_colors(v)) union_free.insert(col);
  const std::size_t want = 1 + rng.below(g.degree(u));
  while (fan.size() < want) {
    std::vector<Incidence> options;
    for (const auto& inc : g.neighbors(u)) {
      Color col = s.color_of(inc.edge);
      if (col == kUncolored || !union_free.count(col)) continue;
      if (g.degree(inc.neighbor) >= out.palette) continue;
      if (std::find(fan.spokes.begin(), fan.spokes.end(), inc.neighbor) != fan.spokes.end()) continue;
      options.push_back(inc);
    }
    if (options.empty()) break;
    const auto pick = options[rng.below(options.size())];
    fan.spokes.push_back(pick.neighbor);
    fan.spoke_edges.push_back(pick.edge);
    for (Color col : s.free_colors(pick.neighbor)) union_free.insert(col);
  }
  std::vector<Color> shared;
  for (Color col : s.free_colors(u))
    if (s.is_free(fan.spokes.back(), col)) shared.push_back(col);
  if (shared.empty()) return false;
  out.c = shared[rng.below(shared.size())];
  out.colors.assign(s.colors().begin(), s.colors().end());
  return true;
}

}  // namespace fixtures
