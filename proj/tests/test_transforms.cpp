#include <doctest.h>

#include <random>

#include "alphadg/errors.hpp"
#include "alphadg/families.hpp"
#include "alphadg/spectral.hpp"
#include "alphadg/transforms.hpp"
#include "support/oracles.hpp"

using namespace alphadg;

TEST_CASE("redirecting in-arcs") {
  const Digraph c4 = basic_family(BasicKind::cycle, 4);
  const std::vector<Vertex> tails{0};
  const TransformRecord r = redirect_in_arcs(c4, 1, 3, tails);
  CHECK(r.after.arcs() == std::vector<Arc>{{0, 3}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_FALSE(is_strongly_connected(r.after));
  CHECK(r.details == std::vector<Arc>{{0, 1}});
  for (Vertex v = 0; v < 4; ++v) CHECK(r.after.out_degree(v) == c4.out_degree(v));
}

TEST_CASE("primed C_{n,g} is a redirection") {
  for (int n = 4; n <= 8; ++n)
    for (int g = 2; g <= n - 1; ++g) {
      const std::vector<Vertex> tails{n - 1};
      REQUIRE(redirect_in_arcs(c_ng(n, g), 0, g - 1, tails).after == c_ng(n, g, true));
    }
}

TEST_CASE("redirection errors name the vertex") {
  const Digraph g = c_ng(6, 3);
  auto message = [&](Vertex p, Vertex q, std::vector<Vertex> tails) {
    try {
      redirect_in_arcs(g, p, q, tails);
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message(1, 2, {4}).find("vertex 4") != std::string::npos);  // 4 is not an in-neighbour of 1
  CHECK(message(0, 5, {5}).find("vertex 5") != std::string::npos);  // would be a loop
  CHECK(message(3, 0, {2}).find("vertex 2") != std::string::npos);  // 2 -> 0 already present
  CHECK(message(1, 1, {0}) != "accepted");
  CHECK(message(1, 2, {}) != "accepted");
}

TEST_CASE("redirecting toward a larger Perron entry increases the radius") {
  const Digraph g = c_ng(6, 3);
  const double a = 0.5;
  const SpectralResult r = spectral_radius(g, a, {1e-13});
  int strict = 0;
  for (Vertex p = 0; p < 6; ++p)
    for (Vertex q = 0; q < 6; ++q) {
      if (p == q || r.perron_vector[q] <= r.perron_vector[p] + 1e-9) continue;
      for (Vertex t : g.in_neighbors(p)) {
        if (t == q || g.has_arc(t, q)) continue;
        const std::vector<Vertex> tails{t};
        const Digraph h = redirect_in_arcs(g, p, q, tails).after;
        if (!is_strongly_connected(h)) continue;
        CHECK(spectral_radius(h, a).radius > r.radius);
        ++strict;
      }
    }
  CHECK(strict > 0);
}

TEST_CASE("subdividing arcs") {
  const Digraph b = b_nd(6, 3);
  for (Arc arc : b.arcs()) {
    const TransformRecord r = subdivide_arc(b, arc);
    REQUIRE(r.after.n() == 7);
    REQUIRE(is_strongly_connected(r.after));
    REQUIRE(r.after.out_degree(6) == 1);
    for (Vertex v = 0; v < 6; ++v) REQUIRE(r.after.out_degree(v) == b.out_degree(v));
    for (double a : {0.0, 0.5}) REQUIRE(spectral_radius(r.after, a).radius <= spectral_radius(b, a).radius + 1e-9);
  }
  // Path arcs of C_{6,3}: (2,3), (3,4), (4,5), (5,0).
  for (Arc arc : std::vector<Arc>{{2, 3}, {3, 4}, {4, 5}, {5, 0}})
    CHECK(is_isomorphic(subdivide_arc(c_ng(6, 3), arc).after, c_ng(7, 3)));
}

TEST_CASE("subdivision preconditions") {
  CHECK_THROWS_AS(subdivide_arc(basic_family(BasicKind::cycle, 4), {0, 1}), PreconditionError);
  // The digon is itself a directed cycle, so it is refused as well.
  CHECK_THROWS_AS(subdivide_arc(basic_family(BasicKind::complete, 2), {0, 1}), PreconditionError);
  CHECK_THROWS_AS(subdivide_arc(b_nd(5, 3), {0, 4}), InvalidInput);
  CHECK_THROWS_AS(subdivide_arc(basic_family(BasicKind::path, 3), {0, 1}), PreconditionError);
  CHECK(is_directed_cycle(basic_family(BasicKind::cycle, 5)));
  CHECK_FALSE(is_directed_cycle(c_ng(5, 3)));
}

TEST_CASE("subdivision on random strong digraphs up to n=6") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 60; ++t) {
    const Digraph g = ref::random_strong(3 + t % 4, 0.45, rng);
    if (is_directed_cycle(g)) continue;
    for (Arc arc : g.arcs())
      for (double a : {0.0, 0.5})
        REQUIRE(spectral_radius(subdivide_arc(g, arc).after, a).radius <= spectral_radius(g, a).radius + 1e-9);
  }
}
