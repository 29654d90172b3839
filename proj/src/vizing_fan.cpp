#include "sparse_ec/vizing_fan.hpp"

#include <algorithm>
#include <string>

#include "sparse_ec/errors.hpp"
#include "sparse_ec/weak_edges.hpp"

namespace sparse_ec {
namespace {

// Reused color bitmap; cleared through the touched list so each fan costs
// O(colors seen) instead of O(D) after the first call.
struct SeenColors {
  std::vector<char> seen;
  std::vector<Color> touched;

  void reset(Color palette) {
    for (Color c : touched) seen[c] = 0;
    touched.clear();
    if (seen.size() < static_cast<std::size_t>(palette) + 1) seen.assign(static_cast<std::size_t>(palette) + 1, 0);
  }
  bool contains(Color c) const { return seen[c] != 0; }
  void insert(Color c) {
    seen[c] = 1;
    touched.push_back(c);
  }
  std::size_t size() const { return touched.size(); }
};

thread_local SeenColors tls_seen;

std::string vertex_text(Vertex v) { return std::to_string(v); }

}  // namespace

Fan build_minimal_active_fan(const PartialColoring& s, Vertex x, Vertex y1, FanOptions options) {
  const Graph& g = s.graph();
  if (x >= g.vertex_count() || y1 >= g.vertex_count()) throw InvalidInput("fan vertex out of range");
  const EdgeId first_edge = g.find_edge(x, y1);
  if (first_edge == kNoEdge) throw PreconditionError("no edge between " + vertex_text(x) + " and " + vertex_text(y1));
  if (s.color_of(first_edge) != kUncolored)
    throw PreconditionError("fan edge " + std::to_string(first_edge) + " is already colored");
  const Color palette = s.palette();
  if (options.require_weak && !is_weak_at(g, first_edge, x, palette))
    throw PreconditionError("edge " + std::to_string(first_edge) + " is not weak at vertex " + vertex_text(x));

  Fan fan;
  fan.center = x;
  fan.spokes.push_back(y1);
  fan.spoke_edges.push_back(first_edge);

  SeenColors& seen = tls_seen;
  seen.reset(palette);
  std::vector<Color> queue;
  std::size_t queue_head = 0;
  const auto required_base = static_cast<long long>(palette) - static_cast<long long>(g.degree(y1));

  for (std::size_t i = 0;; ++i) {
    const Vertex y = fan.spokes[i];
    bool active = false;
    s.for_each_free(y, [&](Color c) {
      if (s.is_free(x, c)) {
        fan.activation = Activation::kSharedWithCenter;
        fan.color = c;
        fan.witness = i;
        active = true;
        return false;
      }
      if (seen.contains(c)) {
        fan.activation = Activation::kSharedBetweenSpokes;
        fan.color = c;
        fan.witness = 0;
        while (!s.is_free(fan.spokes[fan.witness], c)) ++fan.witness;
        active = true;
        return false;
      }
      seen.insert(c);
      queue.push_back(c);
      return true;
    });
    if (active) return fan;

    // A non-active fan has pairwise disjoint spoke free sets, at least
    // D - d(y1) + 1 of them at y1 and at least one at every later spoke.
    if (static_cast<long long>(seen.size()) < required_base + static_cast<long long>(fan.size()))
      throw InvariantViolation("non-active fan at " + vertex_text(x) + " has too few free colors on its spokes");

    for (;;) {
      if (queue_head == queue.size()) {
        if (options.require_weak)
          throw InvariantViolation("fan at " + vertex_text(x) + " cannot be extended although the edge is weak");
        throw PreconditionError("fan at " + vertex_text(x) + " cannot be extended; edge is not weak");
      }
      const Color c = queue[queue_head++];
      const EdgeId e = s.edge_with(x, c);
      if (e == kNoEdge) throw InvariantViolation("queued color is free at the fan center");
      const Vertex z = g.other_end(e, x);
      if (g.degree(z) < palette) {
        fan.spokes.push_back(z);
        fan.spoke_edges.push_back(e);
        break;
      }
    }
  }
}

bool satisfies_fan_conditions(const PartialColoring& s, Vertex x, std::span<const Vertex> spokes) {
  const Graph& g = s.graph();
  if (spokes.empty()) return false;
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i < spokes.size(); ++i) {
    EdgeId e = g.find_edge(x, spokes[i]);
    if (e == kNoEdge) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (spokes[j] == spokes[i]) return false;
    edges.push_back(e);
  }
  if (s.color_of(edges[0]) != kUncolored) return false;
  for (std::size_t i = 1; i < spokes.size(); ++i) {
    Color c = s.color_of(edges[i]);
    if (c == kUncolored) return false;
    bool earlier = false;
    for (std::size_t j = 0; j < i && !earlier; ++j) earlier = s.is_free(spokes[j], c);
    if (!earlier) return false;
    if (g.degree(spokes[i]) >= s.palette()) return false;
  }
  return true;
}

bool is_active(const PartialColoring& s, Vertex x, std::span<const Vertex> spokes) {
  for (Color c = 1; c <= s.palette(); ++c) {
    std::size_t holders = 0;
    for (Vertex y : spokes) holders += s.is_free(y, c) ? 1 : 0;
    if (holders >= 2) return true;
    if (holders == 1 && s.is_free(x, c)) return true;
  }
  return false;
}

std::vector<EdgeId> rotate_fan(PartialColoring& s, const Fan& fan, Color c, std::size_t prefix) {
  const Graph& g = s.graph();
  const Vertex x = fan.center;
  if (prefix < 1 || prefix > fan.size() || fan.spoke_edges.size() != fan.size())
    throw PreconditionError("fan prefix out of range");
  if (c < 1 || c > s.palette()) throw PreconditionError("rotation color outside the palette");
  if (!s.is_free(x, c) || !s.is_free(fan.spokes[prefix - 1], c))
    throw PreconditionError("rotation color " + std::to_string(c) + " must be free at the center and the last spoke");
  if (s.color_of(fan.spoke_edges[0]) != kUncolored) throw PreconditionError("first fan edge is already colored");
  for (std::size_t i = 0; i < prefix; ++i) {
    const auto [a, b] = g.endpoints(fan.spoke_edges[i]);
    if (!((a == x && b == fan.spokes[i]) || (b == x && a == fan.spokes[i])))
      throw PreconditionError("fan edge does not join the center and its spoke");
  }

  // Each spoke is inspected once, before its own edge changes, and nothing
  // else touches its free set, so the decisions can be replayed up front.
  {
    Color carried = c;
    bool first_colored = false;
    for (std::size_t i = prefix; i-- > 0;) {
      if (carried == kUncolored) break;
      if (!s.is_free(fan.spokes[i], carried)) continue;
      carried = s.color_of(fan.spoke_edges[i]);
      if (i == 0) first_colored = true;
    }
    if (!first_colored) throw PreconditionError("rotation would leave the first fan edge uncolored; not a fan");
  }

  std::vector<EdgeId> changed;
  for (std::size_t i = prefix; i-- > 0;) {
    if (c == kUncolored) break;
    if (!s.is_free(fan.spokes[i], c)) continue;
    const EdgeId e = fan.spoke_edges[i];
    const Color old = s.color_of(e);
    if (old != kUncolored) s.unassign(e);
    s.assign(e, c);
    changed.push_back(e);
    c = old;
  }
  return changed;
}

PathType determine_path_type(const PartialColoring& s, Vertex x, Vertex y1, FanOptions options) {
  const Fan fan = build_minimal_active_fan(s, x, y1, options);
  if (fan.activation == Activation::kSharedWithCenter) return {};
  return {fan.color, s.smallest_free(x)};
}

ColorEdgeReport color_weak_edge(PartialColoring& s, EdgeId e, Vertex x, std::optional<Color> forced_free_color,
                                FanOptions options) {
  const Graph& g = s.graph();
  if (e >= g.edge_count()) throw InvalidInput("edge id out of range");
  const auto [u, v] = g.endpoints(e);
  if (x != u && x != v) throw InvalidInput("vertex " + vertex_text(x) + " is not an endpoint of edge " + std::to_string(e));
  if (forced_free_color && (*forced_free_color < 1 || *forced_free_color > s.palette() || !s.is_free(x, *forced_free_color)))
    throw PreconditionError("requested color " + std::to_string(*forced_free_color) + " is not free at " + vertex_text(x));

  const Fan fan = build_minimal_active_fan(s, x, g.other_end(e, x), options);
  ColorEdgeReport report;
  report.colored_edge = e;
  report.activation = fan.activation;
  report.fan_size = fan.size();

  std::vector<EdgeId> rotated;
  if (fan.activation == Activation::kSharedWithCenter) {
    report.rotated_prefix = fan.size();
    rotated = rotate_fan(s, fan, fan.color);
  } else {
    const Color c = fan.color;
    const Color center_free = forced_free_color ? *forced_free_color : s.smallest_free(x);
    report.path = walk_alternating(s, x, c, center_free);
    swap_path(s, report.path);
    // c is now free at x and still free at whichever of y_witness, y_k the
    // path did not end at. Rotating the earlier one keeps F3 intact.
    const std::size_t target = report.path.end != fan.spokes[fan.witness] ? fan.witness : fan.size() - 1;
    report.rotated_prefix = target + 1;
    rotated = rotate_fan(s, fan, c, target + 1);
  }
  if (s.color_of(e) == kUncolored) throw InvariantViolation("weak edge left uncolored after rotation");

  auto& changed = report.recolored_edges;
  changed = report.path.edges;
  changed.insert(changed.end(), rotated.begin(), rotated.end());
  std::sort(changed.begin(), changed.end());
  changed.erase(std::unique(changed.begin(), changed.end()), changed.end());
  changed.erase(std::remove(changed.begin(), changed.end(), e), changed.end());
  return report;
}

}  // namespace sparse_ec
