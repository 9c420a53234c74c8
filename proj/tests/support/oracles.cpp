#include "support/oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ref {

namespace {

Eigen::MatrixXd dense(const Digraph& g, double alpha) {
  const int n = g.n();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.has_arc(i, j)) {
        m(i, j) = 1.0 - alpha;
        m(i, i) += alpha;
      }
  return m;
}

bool strong_after(const Digraph& g, const std::vector<bool>& removed_vertex,
                  const std::vector<std::pair<int, int>>& removed_arcs) {
  const int n = g.n();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !removed_vertex[i] && !removed_vertex[j] && g.has_arc(i, j) &&
          std::find(removed_arcs.begin(), removed_arcs.end(), std::make_pair(i, j)) == removed_arcs.end())
        r[i][j] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r[i][k])
        for (int j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !removed_vertex[i] && !removed_vertex[j] && !r[i][j]) return false;
  return true;
}

}  // namespace

std::vector<std::complex<double>> alpha_eigenvalues(const Digraph& g, double alpha) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(dense(g, alpha), false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < g.n(); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

double eigen_radius(const Digraph& g, double alpha) {
  double best = 0;
  for (auto z : alpha_eigenvalues(g, alpha)) best = std::max(best, std::abs(z));
  return best;
}

double scaled_charpoly(const alphadg::Matrix& m, double x) {
  const int n = m.n();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = (i == j ? x : 0.0) - m(i, j);
  return a.partialPivLu().determinant() / std::pow(std::max(1.0, std::abs(x)), n);
}

bool closure_strong(int n, std::uint64_t code) {
  bool r[8][8] = {};
  int b = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      r[i][j] = (code >> b) & 1U;
      ++b;
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i][j] = r[i][j] || (r[i][k] && r[k][j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !r[i][j]) return false;
  return true;
}

int power_girth(const Digraph& g) {
  const int n = g.n();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n)), p;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = i != j && g.has_arc(i, j);
  p = a;
  for (int len = 1; len <= n; ++len) {
    for (int i = 0; i < n; ++i)
      if (p[i][i]) return len;
    std::vector<std::vector<bool>> q(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (p[i][k])
          for (int j = 0; j < n; ++j)
            if (a[k][j]) q[i][j] = true;
    p = q;
  }
  return 0;
}

int subset_clique(const Digraph& g) {
  const int n = g.n();
  int best = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (i != j && (s >> i & 1) && (s >> j & 1) && !g.has_arc(i, j)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

int subset_kappa(const Digraph& g) {
  const int n = g.n();
  if (static_cast<long>(g.arc_count()) == static_cast<long>(n) * (n - 1)) return n - 1;
  for (int size = 0; size <= n - 2; ++size) {
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      if (__builtin_popcount(s) != size) continue;
      std::vector<bool> removed(n);
      for (int i = 0; i < n; ++i) removed[i] = s >> i & 1;
      if (!strong_after(g, removed, {})) return size;
    }
  }
  return n - 1;
}

int subset_kappa_arc(const Digraph& g) {
  const auto arcs = g.arcs();
  const int m = static_cast<int>(arcs.size());
  const std::vector<bool> none(g.n(), false);
  for (int size = 0; size <= m; ++size) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<std::pair<int, int>> removed;
      for (int i : pick) removed.emplace_back(arcs[i].tail, arcs[i].head);
      if (!strong_after(g, none, removed)) return size;
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return m;
}

bool permutation_isomorphic(const Digraph& g, const Digraph& h) {
  if (g.n() != h.n() || g.arc_count() != h.arc_count()) return false;
  std::vector<int> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < g.n() && ok; ++i)
      for (int j = 0; j < g.n() && ok; ++j)
        if (i != j && g.has_arc(i, j) != h.has_arc(p[i], p[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Digraph random_strong(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<alphadg::Arc> arcs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && coin(rng)) arcs.push_back({i, j});
    Digraph g = Digraph::from_arcs(n, arcs);
    if (alphadg::is_strongly_connected(g)) return g;
  }
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace ref
