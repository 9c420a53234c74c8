#include "alphadg/formulas.hpp"

#include <cmath>
#include <string>

#include "alphadg/errors.hpp"

namespace alphadg {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw InvalidInput("alpha must lie in [0,1), got " + std::to_string(alpha));
}

void check_knkm(int n, int k, int m, double alpha) {
  if (k < 1 || k > n - 2 || m < 1 || m > n - k - 1) {
    throw InvalidInput("K(n,k,m) needs 1 <= k <= n-2 and 1 <= m <= n-k-1, got n=" + std::to_string(n) +
                       " k=" + std::to_string(k) + " m=" + std::to_string(m));
  }
  check_alpha(alpha);
}

}  // namespace

// The expressions below follow the published displays term by term; they are
// deliberately not simplified.

double lambda_knkm(int n_, int k_, int m_, double a) {
  check_knkm(n_, k_, m_, a);
  const double n = n_, k = k_, m = m_;
  const double disc = (1 - a) * (1 - a) * n * n + (6 * a - 2 * a * a - 4) * m * n + (2 - a) * (2 - a) * m * m +
                      4 * (1 - a) * k * m;
  return (n - 2 - a * m + a * n + std::sqrt(disc)) / 2;
}

double knkm_quadratic(double x, int n_, int k_, int m_, double a) {
  const double n = n_, k = k_, m = m_;
  const double b = a * n + n - a * m - 2;
  const double c = a * n * n - a * n - 2 * a * n * m - m * m + a * k * m + a * m + a * m * m - n + m * n + 1 - k * m;
  return x * x - b * x + c;
}

double second_max_radius(int n_, double a) {
  if (n_ < 3) throw InvalidInput("second maximum needs n >= 3, got n=" + std::to_string(n_));
  check_alpha(a);
  const double n = n_;
  const double disc = (1 - a) * (1 - a) * n * n + 2 * a * (1 - a) * n + a * a + 4 * a - 4;
  return (n + a * n - 2 - a + std::sqrt(disc)) / 2;
}

double vertex_connectivity_max_radius(int n_, int k_, double a) {
  check_knkm(n_, k_, 1, a);
  const double n = n_, k = k_;
  if (a == 0.0) return (n - 2 + std::sqrt(n * n - 4 * n + 4 * k + 4)) / 2;
  const double disc = n * n + (2 * a - 4 - 2 * a * k) * n + a * a + a * a * k * k - 4 * a + 2 * a * a * k -
                      4 * a * k + 4 * k + 4;
  return (n - 2 + a + a * k + std::sqrt(disc)) / 2;
}

MComparison compare_m_extremes(int n, int k, double alpha) {
  constexpr double kTie = 1e-9;
  MComparison c{};
  c.at_m_one = lambda_knkm(n, k, 1, alpha);
  c.at_m_max = lambda_knkm(n, k, n - k - 1, alpha);
  const double diff = c.at_m_max - c.at_m_one;
  if (std::abs(diff) <= kTie)
    c.verdict = MExtreme::tie;
  else
    c.verdict = diff > 0 ? MExtreme::m_max : MExtreme::m_one;
  return c;
}

const char* to_string(MExtreme v) {
  switch (v) {
    case MExtreme::m_one: return "m=1";
    case MExtreme::m_max: return "m=n-k-1";
    case MExtreme::tie: return "tie";
  }
  return "?";
}

}  // namespace alphadg
