#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "sparse_ec/errors.hpp"
#include "sparse_ec/generators.hpp"
#include "sparse_ec/weak_edges.hpp"
#include "support.hpp"

using namespace sparse_ec;

TEST_CASE("star from the empty state") {
  auto g = gen::star(3);
  PartialColoring s(g, 3);
  auto fan = build_minimal_active_fan(s, 0, 1);
  CHECK(fan.size() == 1);
  CHECK(fan.activation == Activation::kSharedWithCenter);
  CHECK(fan.color == 1);
  CHECK(determine_path_type(s, 0, 1).empty());
  auto report = color_weak_edge(s, 0, 0);
  CHECK(s.color_of(0) == 1);
  CHECK(report.recolored_edges.empty());
  CHECK(report.path.empty());

  PartialColoring t(g, 3);
  auto single = build_minimal_active_fan(t, 0, 2);
  auto changed = rotate_fan(t, single, 2);
  CHECK(changed == std::vector<EdgeId>{1});
  CHECK(t.color_of(1) == 2);
  CHECK(t.colored_count() == 1);
}

TEST_CASE("preconditions reject before mutating") {
  auto g = gen::cycle(3);
  PartialColoring s(g, 2);
  s.assign(0, 1);
  CHECK_THROWS_AS(build_minimal_active_fan(s, 0, 1), PreconditionError);  // colored
  CHECK_THROWS_AS(build_minimal_active_fan(s, 1, 2), PreconditionError);  // triangle edges are strong at D = 2
  auto star = gen::star(2);
  PartialColoring t(star, 2);
  auto fan = build_minimal_active_fan(t, 0, 1);
  CHECK_THROWS_AS(rotate_fan(t, fan, 3), PreconditionError);
  t.assign(1, 1);
  CHECK_THROWS_AS(rotate_fan(t, fan, 1), PreconditionError);
  CHECK(t.color_of(0) == kUncolored);
  CHECK_THROWS_AS(color_weak_edge(t, 0, 0, Color{1}), PreconditionError);
  CHECK(t.color_of(0) == kUncolored);
}

TEST_CASE("five-spoke rotation trace") {
  auto cfg = fixtures::five_spoke_rotation();
  PartialColoring s(cfg.g, cfg.palette);
  cfg.load(s);
  FanOptions replay{.require_weak = false};
  auto fan = build_minimal_active_fan(s, cfg.x, cfg.spokes[0], replay);
  CHECK(fan.spokes == cfg.spokes);
  CHECK(fan.activation == Activation::kSharedWithCenter);
  CHECK(fan.color == 8);
  CHECK(fan.witness == 4);
  CHECK(satisfies_fan_conditions(s, cfg.x, fan.spokes));
  CHECK(is_active(s, cfg.x, fan.spokes));
  CHECK_FALSE(is_active(s, cfg.x, std::span(fan.spokes).first(4)));

  PartialColoring t(cfg.g, cfg.palette);
  cfg.load(t);
  auto report = color_weak_edge(t, cfg.edge(cfg.x, cfg.spokes[0]), cfg.x, std::nullopt, replay);
  std::vector<Color> final;
  for (Vertex y : cfg.spokes) final.push_back(t.color_of(cfg.edge(cfg.x, y)));
  CHECK(final == std::vector<Color>{2, 4, 3, 6, 8});
  CHECK(report.path.empty());
  CHECK(report.recolored_edges.size() == 3);
  CHECK(t.colored_count() == s.colored_count() + 1);
  CHECK(t.self_check());
}

TEST_CASE("activation shared between spokes") {
  auto cfg = fixtures::spoke_shared_activation();
  PartialColoring s(cfg.g, cfg.palette);
  cfg.load(s);
  const Vertex x = cfg.x, y1 = cfg.spokes[0];
  CHECK(is_weak_at(cfg.g, cfg.edge(x, y1), x, cfg.palette));
  auto fan = build_minimal_active_fan(s, x, y1);
  CHECK(fan.spokes == cfg.spokes);
  CHECK(fan.activation == Activation::kSharedBetweenSpokes);
  CHECK(fan.color == 3);
  CHECK(fan.witness == 0);
  auto type = determine_path_type(s, x, y1);
  CHECK(type == PathType{3, 4});
  CHECK(determine_path_type(s, x, y1) == type);

  auto report = color_weak_edge(s, cfg.edge(x, y1), x);
  CHECK(report.activation == Activation::kSharedBetweenSpokes);
  CHECK(report.path.length() == 1);
  CHECK(s.color_of(cfg.edge(x, y1)) == 3);
  CHECK(s.color_of(cfg.edge(x, 4)) == 4);
  CHECK(testsupport::proper(cfg.g, s.colors()));
  CHECK(s.colored_count() == 11);
}

TEST_CASE("rotation agrees with a direct replay on random fans") {
  Rng rng(2024);
  std::size_t checked = 0;
  while (checked < 2000) {
    fixtures::RandomFan draw;
    if (!fixtures::draw_random_fan(rng, draw)) continue;
    ++checked;
    PartialColoring s(draw.g, draw.palette);
    for (EdgeId e = 0; e < draw.colors.size(); ++e)
      if (draw.colors[e]) s.assign(e, draw.colors[e]);
    REQUIRE(satisfies_fan_conditions(s, draw.fan.center, draw.fan.spokes));
    auto pi = draw.colors;
    auto expect = fixtures::interpret_rotation(draw.g, pi, draw.fan.center, draw.fan.spokes, draw.c);
    auto got = rotate_fan(s, draw.fan, draw.c);
    CHECK(got == expect);
    CHECK(std::equal(pi.begin(), pi.end(), s.colors().begin()));
    CHECK(s.self_check());
  }
}

namespace {
// Random graph and partial coloring with D = Δ, together with every
// uncolored edge that is weak at some endpoint.
struct WeakScene {
  Graph g;
  std::vector<Color> colors;
  std::vector<std::pair<EdgeId, Vertex>> tasks;
};

WeakScene weak_scene(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = 6 + rng.below(30);
  WeakScene out{gen::kdegenerate(1 + rng.below(3), n, seed), {}, {}};
  const Color D = static_cast<Color>(out.g.max_degree() + rng.below(2));
  PartialColoring s(out.g, D);
  testsupport::random_partial(s, rng, 0.85);
  out.colors.assign(s.colors().begin(), s.colors().end());
  for (EdgeId e = 0; e < out.g.edge_count(); ++e) {
    if (s.color_of(e)) continue;
    auto [u, v] = out.g.endpoints(e);
    if (is_weak_at(out.g, e, u, D)) out.tasks.push_back({e, u});
    if (is_weak_at(out.g, e, v, D)) out.tasks.push_back({e, v});
  }
  return out;
}
}  // namespace

TEST_CASE("single-edge coloring keeps changes local") {
  std::size_t runs = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    auto scene = weak_scene(seed);
    const Graph& g = scene.g;
    const Color D = static_cast<Color>(std::max<std::size_t>(1, g.max_degree()));
    for (Color palette : {D, static_cast<Color>(D + 1)}) {
      for (auto [e, x] : scene.tasks) {
        if (!is_weak_at(g, e, x, palette)) continue;
        PartialColoring s(g, palette);
        for (EdgeId f = 0; f < g.edge_count(); ++f)
          if (scene.colors[f] && scene.colors[f] <= palette) {
            auto [a, b] = g.endpoints(f);
            if (s.is_free(a, scene.colors[f]) && s.is_free(b, scene.colors[f])) s.assign(f, scene.colors[f]);
          }
        if (s.color_of(e)) continue;
        ++runs;
        const Vertex y1 = g.other_end(e, x);
        auto before = std::vector<Color>(s.colors().begin(), s.colors().end());
        std::vector<std::set<Color>> free_before;
        for (Vertex v = 0; v < g.vertex_count(); ++v) free_before.push_back(testsupport::free_set(g, before, v, palette));

        auto fan = build_minimal_active_fan(s, x, y1);
        CHECK(satisfies_fan_conditions(s, x, fan.spokes));
        CHECK(is_active(s, x, fan.spokes));
        if (fan.size() > 1) CHECK_FALSE(is_active(s, x, std::span(fan.spokes).first(fan.size() - 1)));
        // Free colors over the spokes grow with the fan.
        std::set<Color> pooled;
        for (Vertex y : std::span(fan.spokes).first(fan.size() - 1))
          for (Color c : free_before[y]) pooled.insert(c);
        if (fan.size() > 1)
          CHECK(pooled.size() + g.degree(y1) >= palette + fan.size() - 1);

        auto type = determine_path_type(s, x, y1);
        auto report = color_weak_edge(s, e, x);
        CHECK(testsupport::proper(g, s.colors()));
        CHECK(s.colored_count() == std::count_if(before.begin(), before.end(), [](Color c) { return c != 0; }) + 1);
        CHECK(type.empty() == report.path.empty());
        if (!type.empty()) {
          CHECK(report.path.first == type.a);
          CHECK(report.path.second == type.b);
        }
        std::set<EdgeId> on_path(report.path.edges.begin(), report.path.edges.end());
        for (EdgeId f = 0; f < g.edge_count(); ++f) {
          if (before[f] == s.color_of(f)) continue;
          auto [a, b] = g.endpoints(f);
          CHECK((a == x || b == x || on_path.count(f)));
          if (f != e) CHECK(before[f] != kUncolored);
        }
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          if (testsupport::free_set(g, s.colors(), v, palette) == free_before[v]) continue;
          bool near = v == x || g.find_edge(v, x) != kNoEdge || (!report.path.empty() && v == report.path.end);
          CHECK(near);
        }
      }
    }
  }
  CHECK(runs > 500);
}

TEST_CASE("path type only depends on the neighbourhood of the center") {
  std::size_t runs = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto scene = weak_scene(seed);
    const Graph& g = scene.g;
    const Color D = static_cast<Color>(g.max_degree());
    if (D < 1) continue;
    for (auto [e, x] : scene.tasks) {
      if (!is_weak_at(g, e, x, D)) continue;
      PartialColoring s(g, D);
      for (EdgeId f = 0; f < g.edge_count(); ++f)
        if (scene.colors[f] && scene.colors[f] <= D) {
          auto [a, b] = g.endpoints(f);
          if (s.is_free(a, scene.colors[f]) && s.is_free(b, scene.colors[f])) s.assign(f, scene.colors[f]);
        }
      if (s.color_of(e)) continue;
      const Vertex y1 = g.other_end(e, x);
      auto type = determine_path_type(s, x, y1);
      // Flip colors on edges with no endpoint in N[x].
      std::vector<bool> near(g.vertex_count());
      near[x] = true;
      for (const auto& inc : g.neighbors(x)) near[inc.neighbor] = true;
      Rng rng(seed * 977 + e);
      for (EdgeId f = 0; f < g.edge_count(); ++f) {
        auto [a, b] = g.endpoints(f);
        if (near[a] || near[b]) continue;
        if (s.color_of(f)) s.unassign(f);
        Color c = static_cast<Color>(1 + rng.below(D));
        if (rng.below(2) && s.is_free(a, c) && s.is_free(b, c)) s.assign(f, c);
      }
      ++runs;
      CHECK(determine_path_type(s, x, y1) == type);
    }
  }
  CHECK(runs > 200);
}
