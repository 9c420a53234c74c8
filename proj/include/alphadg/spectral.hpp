#pragma once

#include <span>
#include <utility>
#include <vector>

#include "alphadg/digraph.hpp"

namespace alphadg {

// Dense square matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  int n() const noexcept { return n_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const double* data() const noexcept { return data_.data(); }

  double row_sum(int i) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

// alpha*D(G) + (1-alpha)*A(G) with D the out-degree diagonal.
struct AlphaMatrix {
  double alpha = 0.0;
  Matrix entries;

  int n() const noexcept { return entries.n(); }
};

struct SpectralOptions {
  double tol = 1e-10;
  long max_iters = 200000;
};

struct SpectralResult {
  double radius = 0.0;
  std::vector<double> perron_vector;  // strictly positive, unit 1-norm
  double certificate_lo = 0.0;
  double certificate_hi = 0.0;
  long iterations = 0;

  double width() const noexcept { return certificate_hi - certificate_lo; }
};

struct QuotientMatrix {
  Matrix entries;
  std::vector<std::vector<Vertex>> partition;

  int parts() const noexcept { return entries.n(); }
};

// Throws InvalidInput unless 0 <= alpha < 1.
AlphaMatrix alpha_matrix(const Digraph& g, double alpha);

// Perron root of an irreducible nonnegative matrix by power iteration on
// M + I, stopped once the Collatz–Wielandt quotients of M + I agree to `tol`.
// `start` defaults to the all-ones vector and must be strictly positive.
// Throws PreconditionError for a reducible or negative matrix and
// ConvergenceError (carrying the last enclosure) past max_iters.
SpectralResult perron_root(const Matrix& m, const SpectralOptions& opts = {},
                           std::span<const double> start = {});

// Certified A_alpha spectral radius of a strongly connected digraph.
// Throws PreconditionError("Perron data undefined ...") otherwise.
SpectralResult spectral_radius(const Digraph& g, double alpha, const SpectralOptions& opts = {});

// rho(A_alpha(G)) for any digraph: the largest Perron root over the principal
// submatrices of its strong components (isolated components contribute
// alpha * outdegree). Returns the midpoint of the enclosure.
double spectral_radius_any(const Digraph& g, double alpha, const SpectralOptions& opts = {});

// (min_i (Mx)_i / x_i, max_i (Mx)_i / x_i); throws InvalidInput unless x > 0.
std::pair<double, double> collatz_wielandt_bounds(const Matrix& m, std::span<const double> x);
inline std::pair<double, double> collatz_wielandt_bounds(const AlphaMatrix& m, std::span<const double> x) {
  return collatz_wielandt_bounds(m.entries, x);
}

// Equitable quotient: entry (p,q) is the common row sum of block (p,q).
// Throws InvalidInput for a partition that does not cover 0..n-1 exactly once
// or whose blocks do not have constant row sums (within 1e-12).
QuotientMatrix quotient_matrix(const Matrix& m, const std::vector<std::vector<Vertex>>& partition);
inline QuotientMatrix quotient_matrix(const AlphaMatrix& m, const std::vector<std::vector<Vertex>>& partition) {
  return quotient_matrix(m.entries, partition);
}

}  // namespace alphadg
