#include "alphadg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "alphadg/errors.hpp"
#include "alphadg/kernels.hpp"

namespace alphadg {

double Matrix::row_sum(int i) const {
  double s = 0.0;
  for (int j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

AlphaMatrix alpha_matrix(const Digraph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw InvalidInput("alpha must lie in [0,1), got " + std::to_string(alpha));
  AlphaMatrix m{alpha, Matrix(g.n())};
  const double off = 1.0 - alpha;
  for (Vertex i = 0; i < g.n(); ++i) {
    m.entries(i, i) = alpha * g.out_degree(i);
    for (Vertex j = 0; j < g.n(); ++j)
      if (g.has_arc(i, j)) m.entries(i, j) = off;
  }
  return m;
}

namespace {

bool support_irreducible(const Matrix& m) {
  std::vector<Arc> arcs;
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (i != j && m(i, j) > 0.0) arcs.push_back({i, j});
  return is_strongly_connected(Digraph::from_arcs(m.n(), arcs));
}

SpectralResult iterate(const Matrix& m, const SpectralOptions& opts, std::span<const double> start) {
  const int n = m.n();
  const kernels::PackedMatrix packed = kernels::pack(m.data(), n);
  const auto step = kernels::power_step_for(kernels::active_backend());
  const auto scale = kernels::scale_for(kernels::active_backend());

  std::vector<double> x(packed.stride, 0.0), y(packed.stride, 0.0);
  if (start.empty()) {
    std::fill(x.begin(), x.begin() + n, 1.0 / n);
  } else {
    double total = 0.0;
    for (double v : start) total += v;
    for (int i = 0; i < n; ++i) x[i] = start[i] / total;
  }

  // M + I is primitive for irreducible M, so the iteration cannot cycle even
  // when M itself is periodic (directed cycles at alpha = 0).
  constexpr double kShift = 1.0;
  kernels::StepStats stats{};
  long it = 0;
  while (true) {
    stats = step(packed, kShift, x.data(), y.data());
    ++it;
    scale(y.data(), packed.stride, 1.0 / stats.sum);
    std::swap(x, y);
    if (stats.hi - stats.lo <= opts.tol) break;
    if (it >= opts.max_iters) {
      throw ConvergenceError("power iteration did not converge in " + std::to_string(opts.max_iters) +
                                 " iterations; enclosure [" + std::to_string(stats.lo - kShift) + ", " +
                                 std::to_string(stats.hi - kShift) + "]",
                             stats.lo - kShift, stats.hi - kShift);
    }
  }

  SpectralResult r;
  r.certificate_lo = stats.lo - kShift;
  r.certificate_hi = stats.hi - kShift;
  r.radius = 0.5 * (stats.lo + stats.hi) - kShift;
  r.perron_vector.assign(x.begin(), x.begin() + n);
  r.iterations = it;
  return r;
}

}  // namespace

SpectralResult perron_root(const Matrix& m, const SpectralOptions& opts, std::span<const double> start) {
  if (m.n() < 1) throw InvalidInput("perron_root: empty matrix");
  if (!(opts.tol > 0.0)) throw InvalidInput("tolerance must be positive");
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (!(m(i, j) >= 0.0)) throw PreconditionError("perron_root: matrix has a negative entry");
  if (!start.empty()) {
    if (static_cast<int>(start.size()) != m.n()) throw InvalidInput("perron_root: start vector size mismatch");
    for (double v : start)
      if (!(v > 0.0)) throw InvalidInput("perron_root: start vector must be strictly positive");
  }
  if (!support_irreducible(m)) throw PreconditionError("Perron data undefined: matrix is reducible");
  return iterate(m, opts, start);
}

SpectralResult spectral_radius(const Digraph& g, double alpha, const SpectralOptions& opts) {
  if (!(opts.tol > 0.0)) throw InvalidInput("tolerance must be positive");
  AlphaMatrix m = alpha_matrix(g, alpha);
  if (!is_strongly_connected(g))
    throw PreconditionError("Perron data undefined: digraph is not strongly connected");
  return iterate(m.entries, opts, {});
}

double spectral_radius_any(const Digraph& g, double alpha, const SpectralOptions& opts) {
  const AlphaMatrix full = alpha_matrix(g, alpha);
  double best = 0.0;
  for (const auto& scc : strongly_connected_components(g)) {
    const int k = static_cast<int>(scc.size());
    if (k == 1) {
      best = std::max(best, full.entries(scc[0], scc[0]));
      continue;
    }
    Matrix sub(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = full.entries(scc[i], scc[j]);
    best = std::max(best, iterate(sub, opts, {}).radius);
  }
  return best;
}

std::pair<double, double> collatz_wielandt_bounds(const Matrix& m, std::span<const double> x) {
  const int n = m.n();
  if (static_cast<int>(x.size()) != n) throw InvalidInput("collatz_wielandt_bounds: vector size mismatch");
  for (double v : x)
    if (!(v > 0.0)) throw InvalidInput("collatz_wielandt_bounds: vector must be strictly positive");
  double lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i < n; ++i) {
    double mx = 0.0;
    for (int j = 0; j < n; ++j) mx += m(i, j) * x[j];
    lo = std::min(lo, mx / x[i]);
    hi = std::max(hi, mx / x[i]);
  }
  return {lo, hi};
}

QuotientMatrix quotient_matrix(const Matrix& m, const std::vector<std::vector<Vertex>>& partition) {
  const int n = m.n();
  std::vector<int> part_of(n, -1);
  for (std::size_t p = 0; p < partition.size(); ++p) {
    if (partition[p].empty()) throw InvalidInput("quotient_matrix: empty part " + std::to_string(p));
    for (Vertex v : partition[p]) {
      if (v < 0 || v >= n) throw InvalidInput("quotient_matrix: vertex " + std::to_string(v) + " out of range");
      if (part_of[v] != -1) throw InvalidInput("quotient_matrix: vertex " + std::to_string(v) + " in two parts");
      part_of[v] = static_cast<int>(p);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (part_of[v] == -1) throw InvalidInput("quotient_matrix: vertex " + std::to_string(v) + " not covered");

  constexpr double kEquitableTol = 1e-12;
  const int t = static_cast<int>(partition.size());
  QuotientMatrix q{Matrix(t), partition};
  double worst = 0.0;
  int worst_p = -1, worst_q = -1;
  for (int p = 0; p < t; ++p) {
    for (int b = 0; b < t; ++b) {
      double lo = INFINITY, hi = -INFINITY, total = 0.0;
      for (Vertex i : partition[p]) {
        double s = 0.0;
        for (Vertex j : partition[b]) s += m(i, j);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
        total += s;
      }
      if (hi - lo > worst) {
        worst = hi - lo;
        worst_p = p;
        worst_q = b;
      }
      q.entries(p, b) = total / static_cast<double>(partition[p].size());
    }
  }
  if (worst > kEquitableTol) {
    throw InvalidInput("quotient_matrix: partition is not equitable; block (" + std::to_string(worst_p) + "," +
                       std::to_string(worst_q) + ") row sums deviate by " + std::to_string(worst));
  }
  return q;
}

}  // namespace alphadg
