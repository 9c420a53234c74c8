#include "alphadg/families.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "alphadg/errors.hpp"
#include "alphadg/parallel.hpp"
#include "alphadg/spectral.hpp"

namespace alphadg {

namespace {

[[noreturn]] void range_error(const std::string& family, const std::string& why) {
  throw InvalidInput(family + ": " + why);
}

void add_complete(std::vector<Arc>& arcs, int first, int count) {
  for (int i = first; i < first + count; ++i)
    for (int j = first; j < first + count; ++j)
      if (i != j) arcs.push_back({i, j});
}

}  // namespace

Digraph basic_family(BasicKind kind, int n) {
  std::vector<Arc> arcs;
  switch (kind) {
    case BasicKind::path:
      if (n < 1) range_error("path", "needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
      break;
    case BasicKind::cycle:
      if (n < 2) range_error("cycle", "needs n >= 2");
      for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
      break;
    case BasicKind::complete:
      if (n < 1) range_error("complete", "needs n >= 1");
      add_complete(arcs, 0, n);
      break;
  }
  return Digraph::from_arcs(n, arcs);
}

Digraph c_ng(int n, int g, bool primed) {
  if (g < 2 || g > n - 1)
    range_error("c_ng", "needs 2 <= g <= n-1, got n=" + std::to_string(n) + " g=" + std::to_string(g));
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < g; ++i) arcs.push_back({i, i + 1});
  arcs.push_back({g - 1, 0});
  for (int i = g - 1; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  arcs.push_back({n - 1, primed ? g - 1 : 0});
  return Digraph::from_arcs(n, arcs);
}

Digraph b_nd(int n, int d, bool primed) {
  if (d < 2 || d > n - 1)
    range_error("b_nd", "needs 2 <= d <= n-1, got n=" + std::to_string(n) + " d=" + std::to_string(d));
  const int start = n - d;      // path leaves the clique here
  const int end = n - d + 1;    // and re-enters here
  std::vector<Arc> arcs;
  add_complete(arcs, n - d, d);
  arcs.push_back({start, 0});
  for (int i = 0; i + 1 < n - d; ++i) arcs.push_back({i, i + 1});
  arcs.push_back({n - d - 1, primed ? start : end});
  return Digraph::from_arcs(n, arcs);
}

Digraph k_nkm(int n, int k, int m) {
  if (k < 1 || k > n - 2 || m < 1 || m > n - k - 1) {
    range_error("k_nkm", "needs 1 <= k <= n-2 and 1 <= m <= n-k-1, got n=" + std::to_string(n) +
                             " k=" + std::to_string(k) + " m=" + std::to_string(m));
  }
  const int s0 = m, v2 = m + k;
  std::vector<Arc> arcs;
  add_complete(arcs, 0, m);
  add_complete(arcs, s0, k);
  add_complete(arcs, v2, n - k - m);
  for (int s = s0; s < v2; ++s) {
    for (int v = 0; v < n; ++v) {
      if (v >= s0 && v < v2) continue;
      arcs.push_back({s, v});
      arcs.push_back({v, s});
    }
  }
  for (int u = 0; u < m; ++u)
    for (int v = v2; v < n; ++v) arcs.push_back({u, v});
  return Digraph::from_arcs(n, arcs);
}

Digraph tournament_from_code(int n, std::uint64_t code) {
  std::vector<Arc> arcs;
  int e = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++e) {
      if ((code >> e) & 1U)
        arcs.push_back({i, j});
      else
        arcs.push_back({j, i});
    }
  }
  return Digraph::from_arcs(n, arcs);
}

ExtremalTournament extremal_tournament(int n, double alpha, int workers, bool allow_n7) {
  if (n < 1 || n > 7) range_error("extremal tournament", "brute force supports 1 <= n <= 7");
  if (n == 7 && !allow_n7)
    throw PreconditionError("extremal tournament: n = 7 scans 2^21 tournaments; enable long runs");
  if (!(alpha >= 0.0 && alpha < 1.0)) range_error("extremal tournament", "alpha must lie in [0,1)");

  struct Best {
    bool found = false;
    std::uint64_t code = 0;
    double radius = 0.0;
  };
  constexpr double kTie = 1e-9;
  auto better = [](const Best& a, const Best& b) {
    if (!b.found) return a;
    if (!a.found) return b;
    if (std::abs(a.radius - b.radius) <= kTie) return a.code < b.code ? a : b;
    return a.radius > b.radius ? a : b;
  };

  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  const bool strong_only = n >= 3;
  auto partials = map_ranges<Best>(total, 4096, workers, [&](std::uint64_t begin, std::uint64_t end) {
    Best best;
    for (std::uint64_t code = begin; code < end; ++code) {
      Digraph t = tournament_from_code(n, code);
      double r;
      if (strong_only) {
        if (!is_strongly_connected(t)) continue;
        r = spectral_radius(t, alpha).radius;
      } else {
        r = spectral_radius_any(t, alpha);
      }
      best = better(best, Best{true, code, r});
    }
    return best;
  });

  Best best;
  for (const Best& p : partials) best = better(best, p);
  return {tournament_from_code(n, best.code), best.code, best.radius};
}

Digraph tournament(TournamentKind kind, int n, double alpha) {
  std::vector<Arc> arcs;
  switch (kind) {
    case TournamentKind::transitive:
      if (n < 1) range_error("transitive tournament", "needs n >= 1");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.push_back({i, j});
      break;
    case TournamentKind::rotational:
      if (n < 3 || n % 2 == 0) range_error("rotational tournament", "needs odd n >= 3");
      for (int i = 0; i < n; ++i)
        for (int s = 1; s <= (n - 1) / 2; ++s) arcs.push_back({i, (i + s) % n});
      break;
    case TournamentKind::brualdi_li: {
      if (n < 2 || n % 2 != 0) range_error("Brualdi-Li tournament", "needs even n >= 2");
      const int h = n / 2;
      for (int i = 0; i < h; ++i) {
        for (int j = i + 1; j < h; ++j) {
          arcs.push_back({i, j});
          arcs.push_back({h + i, h + j});
        }
      }
      for (int i = 0; i < h; ++i) {
        for (int j = 0; j < h; ++j) {
          if (i > j)
            arcs.push_back({i, h + j});
          else
            arcs.push_back({h + j, i});
        }
      }
      break;
    }
    case TournamentKind::extremal_bruteforce:
      return extremal_tournament(n, alpha).tournament;
  }
  return Digraph::from_arcs(n, arcs);
}

Digraph g0(int n, int d, double alpha, int workers, bool allow_n7) {
  if (d < 1 || d > n) range_error("g0", "needs 1 <= d <= n");
  if (!(alpha >= 0.0 && alpha < 1.0)) range_error("g0", "alpha must lie in [0,1)");
  const int l = n / d;
  const int r = n - l * d;

  std::vector<Arc> arcs;
  std::vector<int> part_start;
  int offset = 0;
  for (int j = 0; j < d; ++j) {
    const int size = j < r ? l + 1 : l;
    part_start.push_back(offset);
    Digraph inner;
    if (size <= 2) {
      inner = tournament(TournamentKind::transitive, size);
    } else if (alpha == 0.0) {
      inner = tournament(size % 2 ? TournamentKind::rotational : TournamentKind::brualdi_li, size);
    } else if (size <= 7) {
      inner = extremal_tournament(size, alpha, workers, allow_n7).tournament;
    } else {
      throw PreconditionError("g0: extremal tournament of order " + std::to_string(size) +
                              " for alpha > 0 is unknown; choose the part tournaments explicitly");
    }
    for (Arc a : inner.arcs()) arcs.push_back({a.tail + offset, a.head + offset});
    offset += size;
  }
  part_start.push_back(n);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      if (p == q) continue;
      for (int u = part_start[p]; u < part_start[p + 1]; ++u)
        for (int v = part_start[q]; v < part_start[q + 1]; ++v) arcs.push_back({u, v});
    }
  return Digraph::from_arcs(n, arcs);
}

Digraph h4(int n, int k, int a) {
  if (k < 1 || a < k + 2 || a > n - k - 2) {
    range_error("h4", "needs k >= 1 and k+2 <= a <= n-k-2, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k) + " a=" + std::to_string(a));
  }
  std::vector<Arc> arcs;
  add_complete(arcs, 0, a);
  add_complete(arcs, a, n - a);
  for (int u = 0; u < k; ++u)
    for (int w = a; w < a + k; ++w) arcs.push_back({u, w});
  for (int y = a; y < n; ++y)
    for (int x = 0; x < a; ++x) arcs.push_back({y, x});
  return Digraph::from_arcs(n, arcs);
}

Digraph circulant(int n, const std::set<int>& steps) {
  if (n < 2) range_error("circulant", "needs n >= 2");
  if (steps.empty() || !steps.contains(1)) range_error("circulant", "steps must contain 1");
  for (int s : steps)
    if (s < 1 || s > n - 1) range_error("circulant", "step " + std::to_string(s) + " outside 1..n-1");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int s : steps) arcs.push_back({i, (i + s) % n});
  return Digraph::from_arcs(n, arcs);
}

Digraph build_family(const FamilySpec& spec, int workers, bool long_runs) {
  auto param = [&](const char* name) {
    auto it = spec.params.find(name);
    if (it == spec.params.end()) throw InvalidInput("family `" + spec.kind + "` needs --" + name);
    return it->second;
  };
  const std::string& kind = spec.kind;
  if (kind == "path") return basic_family(BasicKind::path, param("n"));
  if (kind == "cycle") return basic_family(BasicKind::cycle, param("n"));
  if (kind == "complete") return basic_family(BasicKind::complete, param("n"));
  if (kind == "c_ng") return c_ng(param("n"), param("g"), spec.primed);
  if (kind == "c_ng_primed") return c_ng(param("n"), param("g"), true);
  if (kind == "b_nd") return b_nd(param("n"), param("d"), spec.primed);
  if (kind == "b_nd_primed") return b_nd(param("n"), param("d"), true);
  if (kind == "knkm" || kind == "k_nkm") return k_nkm(param("n"), param("k"), param("m"));
  if (kind == "transitive" || kind == "tournament_transitive") return tournament(TournamentKind::transitive, param("n"));
  if (kind == "rotational" || kind == "tournament_rotational") return tournament(TournamentKind::rotational, param("n"));
  if (kind == "brualdi_li" || kind == "tournament_brualdi_li") return tournament(TournamentKind::brualdi_li, param("n"));
  if (kind == "extremal_tournament" || kind == "tournament_extremal_bruteforce")
    return extremal_tournament(param("n"), spec.alpha, workers, long_runs).tournament;
  if (kind == "g0") return g0(param("n"), param("d"), spec.alpha, workers, long_runs);
  if (kind == "h4") return h4(param("n"), param("k"), param("a"));
  if (kind == "circulant") return circulant(param("n"), spec.steps);
  throw InvalidInput("unknown family `" + kind + "`");
}

}  // namespace alphadg
