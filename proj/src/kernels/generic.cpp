#include <algorithm>

#include "alphadg/kernels.hpp"

namespace alphadg::kernels::generic {

StepStats power_step(const PackedMatrix& m, double shift, const double* x, double* y) {
  const int n = m.n;
  const int stride = m.stride;
  for (int i = 0; i < stride; ++i) y[i] = shift * x[i];
  for (int j = 0; j < n; ++j) {
    const double* col = m.cols.data() + static_cast<std::size_t>(j) * stride;
    const double xj = x[j];
    for (int i = 0; i < stride; ++i) y[i] = y[i] + col[i] * xj;
  }

  StepStats s{y[0] / x[0], y[0] / x[0], 0.0};
  for (int i = 0; i < n; ++i) {
    const double r = y[i] / x[i];
    s.lo = std::min(s.lo, r);
    s.hi = std::max(s.hi, r);
    s.sum += y[i];
  }
  return s;
}

void scale(double* x, int stride, double factor) {
  for (int i = 0; i < stride; ++i) x[i] *= factor;
}

}  // namespace alphadg::kernels::generic
