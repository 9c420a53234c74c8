#include <doctest.h>

#include <cmath>

#include "alphadg/errors.hpp"
#include "alphadg/families.hpp"
#include "alphadg/formulas.hpp"
#include "alphadg/spectral.hpp"
#include "support/oracles.hpp"

using namespace alphadg;

namespace {

// Eigensolver values, frozen.
constexpr double kBrualdiLi4 = 1.395336994467073;
constexpr double kBrualdiLi6 = 2.433968155272618;
constexpr double kH4_824_half = 5.561552812808835;
constexpr double kKnkm825_half = 6.589454172900139;

}  // namespace

TEST_CASE("basic families") {
  const Digraph c3 = basic_family(BasicKind::cycle, 3);
  CHECK(c3.arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(basic_family(BasicKind::complete, 3).arc_count() == 6);
  const Digraph p4 = basic_family(BasicKind::path, 4);
  CHECK(p4.arc_count() == 3);
  CHECK_FALSE(is_strongly_connected(p4));
  CHECK(basic_family(BasicKind::path, 1).n() == 1);
  CHECK_THROWS_AS(basic_family(BasicKind::cycle, 1), InvalidInput);
  CHECK_THROWS_AS(basic_family(BasicKind::complete, 0), InvalidInput);
}

TEST_CASE("C_{n,g}") {
  const Digraph c52 = c_ng(5, 2);
  CHECK(girth(c52) == 2);
  CHECK(c52.arc_count() == 6);
  CHECK(girth(c_ng(6, 5)) == 5);
  const double a = 0.5;
  CHECK(spectral_radius(c_ng(5, 2, true), a).radius > spectral_radius(c52, a).radius);
  // Primed variant moves the closing arc (n-1,0) to (n-1,g-1).
  const Digraph p = c_ng(7, 3, true);
  CHECK(p.has_arc(6, 2));
  CHECK_FALSE(p.has_arc(6, 0));
  CHECK_THROWS_AS(c_ng(5, 5), InvalidInput);
  CHECK_THROWS_AS(c_ng(5, 1), InvalidInput);
}

TEST_CASE("B_{n,d}") {
  const Digraph b = b_nd(6, 3);
  CHECK(clique_number(b) == 3);
  CHECK(is_strongly_connected(b));
  CHECK(spectral_radius(b_nd(6, 3, true), 0.3).radius > spectral_radius(b, 0.3).radius);
  for (int d = 3; d <= 6; ++d) {
    const Digraph e = b_nd(d + 1, d);
    int outside = 0;
    for (Vertex v = 0; v < e.n(); ++v)
      if (e.out_degree(v) == 1) ++outside;
    CHECK(outside == 1);
  }
  CHECK_THROWS_AS(b_nd(5, 1), InvalidInput);
}

TEST_CASE("K(n,k,m)") {
  CHECK(k_nkm(6, 2, 1).arc_count() == 27);
  for (int n = 3; n <= 8; ++n) {
    const Digraph almost = k_nkm(n, n - 2, 1);
    CHECK(almost.arc_count() == n * (n - 1) - 1);
  }
  CHECK(vertex_connectivity(k_nkm(6, 2, 3)) == 2);
  CHECK_THROWS_AS(k_nkm(6, 5, 1), InvalidInput);
  CHECK_THROWS_AS(k_nkm(6, 2, 4), InvalidInput);
}

TEST_CASE("parameter recovery for n <= 9") {
  for (int n = 3; n <= 9; ++n) {
    for (int g = 2; g <= n - 1; ++g) REQUIRE(girth(c_ng(n, g)) == g);
    for (int d = 2; d <= n - 1; ++d) REQUIRE(clique_number(b_nd(n, d)) == d);
    for (int k = 1; k <= n - 2; ++k) {
      for (int m = 1; m <= n - k - 1; ++m) REQUIRE(vertex_connectivity(k_nkm(n, k, m)) == k);
      REQUIRE(arc_connectivity(k_nkm(n, k, n - k - 1)) == k);
    }
  }
}

TEST_CASE("generators are deterministic and valid") {
  for (int n = 3; n <= 8; ++n) {
    for (int g = 2; g <= n - 1; ++g) {
      REQUIRE(c_ng(n, g) == c_ng(n, g));
      REQUIRE(is_strongly_connected(c_ng(n, g, true)));
    }
    for (int d = 2; d <= n - 1; ++d) REQUIRE(is_strongly_connected(b_nd(n, d, true)));
  }
}

TEST_CASE("tournaments") {
  const Digraph t4 = tournament(TournamentKind::transitive, 4);
  CHECK_FALSE(girth(t4).has_value());
  CHECK_FALSE(is_strongly_connected(t4));
  const Digraph r5 = tournament(TournamentKind::rotational, 5);
  CHECK(degree_profile(r5).regular(2));
  CHECK(std::abs(spectral_radius(tournament(TournamentKind::brualdi_li, 4), 0).radius - kBrualdiLi4) <= 1e-9);
  CHECK(std::abs(spectral_radius(tournament(TournamentKind::brualdi_li, 6), 0).radius - kBrualdiLi6) <= 1e-9);
  CHECK_THROWS_AS(tournament(TournamentKind::rotational, 4), InvalidInput);
  CHECK_THROWS_AS(tournament(TournamentKind::brualdi_li, 5), InvalidInput);
  CHECK_THROWS(extremal_tournament(8, 0.0));
  CHECK_THROWS_AS(extremal_tournament(7, 0.0), PreconditionError);

  for (int n = 1; n <= 6; ++n) {
    const Digraph t = tournament(TournamentKind::transitive, n);
    REQUIRE(t.arc_count() == n * (n - 1) / 2);
  }
}

TEST_CASE("tournament codes") {
  // Pairs in order (0,1), (0,2), (1,2); bit set means the lower index wins.
  const Digraph t = tournament_from_code(3, 0b011);
  CHECK(t.has_arc(0, 1));
  CHECK(t.has_arc(0, 2));
  CHECK(t.has_arc(2, 1));
  CHECK(tournament_from_code(4, 0b111111) == tournament(TournamentKind::transitive, 4));
}

TEST_CASE("brute-force extremal tournament matches the named constructions at alpha 0") {
  for (int n = 3; n <= 6; ++n) {
    const ExtremalTournament best = extremal_tournament(n, 0.0);
    const Digraph named = tournament(n % 2 ? TournamentKind::rotational : TournamentKind::brualdi_li, n);
    CHECK(std::abs(best.radius - spectral_radius(named, 0.0).radius) <= 1e-9);
    CHECK(is_isomorphic(best.tournament, named));
  }
}

TEST_CASE("extremal tournament search is deterministic across worker counts") {
  const ExtremalTournament a = extremal_tournament(5, 0.4, 1);
  const ExtremalTournament b = extremal_tournament(5, 0.4, 3);
  CHECK(a.code == b.code);
  CHECK(a.radius == b.radius);
}

TEST_CASE("G0") {
  CHECK(g0(5, 5, 0.3) == basic_family(BasicKind::complete, 5));
  const Digraph six = g0(6, 3, 0.0);
  CHECK(clique_number(six) == 3);
  CHECK(six.arc_count() == 3 + 2 * 12);
  const Digraph five = g0(5, 2, 0.0);
  // Parts {0,1,2} (rotational) and {3,4} (one arc), digons across.
  CHECK(clique_number(five) == 2);
  CHECK(five.arc_count() == 3 + 1 + 2 * 6);
  CHECK(is_strongly_connected(five));
  CHECK_THROWS_AS(g0(5, 0, 0.0), InvalidInput);
  CHECK_THROWS_AS(g0(16, 2, 0.3), PreconditionError);
  CHECK_NOTHROW(g0(16, 2, 0.0));
}

TEST_CASE("H4") {
  const Digraph h = h4(8, 2, 4);
  CHECK(is_strongly_connected(h));
  CHECK(arc_connectivity(h) == 3);
  CHECK(ref::subset_kappa_arc(h) == 3);
  CHECK(vertex_connectivity(h) == 2);
  const double lh = spectral_radius(h, 0.5).radius;
  const double lk = spectral_radius(k_nkm(8, 2, 5), 0.5).radius;
  CHECK(std::abs(lh - kH4_824_half) <= 1e-9);
  CHECK(std::abs(lk - kKnkm825_half) <= 1e-9);
  CHECK(lh < lk);
  for (int k = 1; k <= 3; ++k) CHECK(is_strongly_connected(h4(2 * k + 4, k, k + 2)));
  CHECK_THROWS_AS(h4(8, 2, 3), InvalidInput);
  CHECK_THROWS_AS(h4(8, 2, 5), InvalidInput);
}

TEST_CASE("circulants") {
  CHECK(circulant(5, {1}) == basic_family(BasicKind::cycle, 5));
  const Digraph c = circulant(6, {1, 2});
  CHECK(degree_profile(c).regular(2));
  for (double a : {0.0, 0.4, 0.8}) CHECK(spectral_radius(c, a).radius == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(arc_connectivity(circulant(7, {1, 2, 3})) == 3);
  CHECK_THROWS_AS(circulant(5, {2}), InvalidInput);
  CHECK_THROWS_AS(circulant(5, {1, 5}), InvalidInput);
}

TEST_CASE("family specs") {
  FamilySpec spec;
  spec.kind = "knkm";
  spec.params = {{"n", 6}, {"k", 2}, {"m", 3}};
  CHECK(build_family(spec) == k_nkm(6, 2, 3));
  spec.kind = "tournament_rotational";
  spec.params = {{"n", 5}};
  CHECK(build_family(spec) == tournament(TournamentKind::rotational, 5));
  spec.kind = "c_ng_primed";
  spec.params = {{"n", 6}, {"g", 3}};
  CHECK(build_family(spec) == c_ng(6, 3, true));
  spec.kind = "circulant";
  spec.params = {{"n", 6}};
  spec.steps = {1, 3};
  CHECK(build_family(spec) == circulant(6, {1, 3}));
  spec.kind = "nonsense";
  CHECK_THROWS_AS(build_family(spec), InvalidInput);
  spec.kind = "b_nd";
  spec.params = {{"n", 6}};
  CHECK_THROWS_AS(build_family(spec), InvalidInput);
}
