#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sparse_ec/errors.hpp"
#include "sparse_ec/generators.hpp"
#include "sparse_ec/oracle.hpp"
#include "sparse_ec/sparsity.hpp"
#include "sparse_ec/weak_edges.hpp"
#include "support.hpp"

using namespace sparse_ec;

TEST_CASE("degeneracy of small families") {
  CHECK(degeneracy_ordering(gen::path(7)).degeneracy == 1);
  CHECK(degeneracy_ordering(gen::star(6)).degeneracy == 1);
  CHECK(degeneracy_ordering(gen::cycle(6)).degeneracy == 2);
  CHECK(degeneracy_ordering(gen::complete(5)).degeneracy == 4);
  CHECK(degeneracy_ordering(build_graph(3, {})).degeneracy == 0);
}

TEST_CASE("density of small families") {
  CHECK(max_density(gen::complete(4)) == Rational(3, 2));
  CHECK(max_density(gen::cycle(5)) == Rational(1));
  CHECK(max_density(gen::path(4)) == Rational(3, 4));
  CHECK(mad(gen::petersen()) == Rational(3));
  CHECK(mad(gen::complete(4)) == Rational(3));
  CHECK(mad(strong_graph(3)) == Rational(24, 5));
  CHECK_THROWS_AS(max_density(build_graph(4, {})), InvalidInput);
}

TEST_CASE("densest witness attains the density") {
  auto g = gen::disjoint_union(gen::path(10), gen::complete(5));
  auto d = densest_subgraph(g);
  CHECK(d.density == Rational(2));
  std::vector<bool> in(g.vertex_count());
  for (Vertex v : d.vertices) in[v] = true;
  std::int64_t inside = 0;
  for (auto [u, v] : g.edges())
    if (in[u] && in[v]) ++inside;
  CHECK(Rational(inside, static_cast<std::int64_t>(d.vertices.size())) == d.density);
}

TEST_CASE("exact mad matches subset enumeration") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Rng rng(seed);
    const std::size_t n = 2 + rng.below(kBruteMaxVertices - 1);
    auto g = testsupport::random_gnm(n, 1 + rng.below(n * (n - 1) / 2), seed * 7 + 1);
    CAPTURE(seed);
    CHECK(mad(g) == brute_mad(g));
  }
}

TEST_CASE("degeneracy ordering is valid, minimum and below mad") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(seed);
    const std::size_t n = 3 + rng.below(60);
    auto g = testsupport::random_gnm(n, 1 + rng.below(4 * n), seed);
    auto ord = degeneracy_ordering(g);
    CHECK(is_degeneracy_ordering(g, ord));
    for (std::size_t i = 0; i < n; ++i) CHECK(ord.position[ord.order[i]] == i);
    CHECK(Rational(static_cast<std::int64_t>(ord.degeneracy)) <= mad(g));
    // Naive peeling: degeneracy is the largest minimum degree seen.
    std::vector<std::size_t> deg(n);
    std::vector<bool> gone(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::size_t expect = 0;
    for (std::size_t round = 0; round < n; ++round) {
      Vertex pick = kNoVertex;
      for (Vertex v = 0; v < n; ++v)
        if (!gone[v] && (pick == kNoVertex || deg[v] < deg[pick])) pick = v;
      expect = std::max(expect, deg[pick]);
      gone[pick] = true;
      for (const auto& inc : g.neighbors(pick))
        if (!gone[inc.neighbor]) --deg[inc.neighbor];
    }
    CHECK(ord.degeneracy == expect);
    auto tampered = ord;
    if (ord.degeneracy > 0) {
      tampered.degeneracy -= 1;
      CHECK_FALSE(is_degeneracy_ordering(g, tampered));
    }
  }
}

TEST_CASE("mad is monotone under edge subsets") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed);
    const std::size_t n = 4 + rng.below(40);
    auto g = testsupport::random_gnm(n, 2 + rng.below(3 * n), seed);
    std::vector<EdgeId> keep;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (rng.below(3)) keep.push_back(e);
    if (keep.empty()) keep.push_back(0);
    auto sub = subgraph_of_edges(g, EdgeSubset(keep));
    CHECK(mad(sub.graph) <= mad(g));
  }
}

TEST_CASE("regular graphs have mad equal to their degree") {
  CHECK(mad(gen::cycle(11)) == Rational(2));
  CHECK(mad(gen::complete(7)) == Rational(6));
  // Circulants C_n(1..r) are 2r-regular.
  for (std::size_t r = 1; r <= 4; ++r) {
    const std::size_t n = 3 * r + 4;
    std::vector<Endpoints> edges;
    for (Vertex v = 0; v < n; ++v)
      for (std::size_t j = 1; j <= r; ++j) edges.push_back({v, static_cast<Vertex>((v + j) % n)});
    CHECK(mad(build_graph(n, edges)) == Rational(static_cast<std::int64_t>(2 * r)));
  }
}

TEST_CASE("generated families respect their sparsity") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    for (std::size_t k = 1; k <= 4; ++k) {
      auto d = gen::kdegenerate(k, 30 + seed * 5, seed);
      CHECK(degeneracy_ordering(d).degeneracy <= k);
      auto f = gen::kforest(k, 30 + seed * 5, seed);
      CHECK(mad(f) < Rational(static_cast<std::int64_t>(2 * k)));
      CHECK(gen::kforest(k, 30 + seed * 5, seed) == f);
    }
  }
}
