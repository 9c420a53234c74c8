#pragma once

#include <string_view>
#include <vector>

// Inner loops of the power iteration, with a scalar reference implementation
// and an AVX2 variant picked at runtime. Both variants accumulate every output
// row over columns in the same order without fused multiply-add, so the
// matrix-vector product and the Collatz–Wielandt extrema are bit-identical
// across backends; only the normalising sum may differ in the last ulp.

namespace alphadg::kernels {

enum class Backend { generic, avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);

// Backend used by the dispatching entry points. Defaults to the best one the
// CPU supports; the ALPHADG_KERNELS environment variable (generic|avx2) or
// force_backend() overrides it.
Backend active_backend();
void force_backend(Backend b);

// Column-major copy of a square matrix with rows padded to a multiple of 4
// and zero fill, so vector loads never read past a column.
struct PackedMatrix {
  int n = 0;
  int stride = 0;
  std::vector<double> cols;  // cols[j * stride + i] = M(i, j)

  static int padded(int n) { return (n + 3) & ~3; }
};

// row_major has n*n entries.
PackedMatrix pack(const double* row_major, int n);

struct StepStats {
  double lo;   // min_i y_i / x_i
  double hi;   // max_i y_i / x_i
  double sum;  // sum_i y_i
};

// y = (M + shift*I) x over the first n rows; x and y have `stride` entries
// and x's padding must be zero. Returns the ratio extrema and the sum of y.
using PowerStepFn = StepStats (*)(const PackedMatrix& m, double shift, const double* x, double* y);
// x[i] *= factor for i < stride.
using ScaleFn = void (*)(double* x, int stride, double factor);

namespace generic {
StepStats power_step(const PackedMatrix& m, double shift, const double* x, double* y);
void scale(double* x, int stride, double factor);
}  // namespace generic

#if defined(ALPHADG_HAVE_AVX2)
namespace avx2 {
StepStats power_step(const PackedMatrix& m, double shift, const double* x, double* y);
void scale(double* x, int stride, double factor);
}  // namespace avx2
#endif

PowerStepFn power_step_for(Backend b);
ScaleFn scale_for(Backend b);

// Dispatching entry points.
StepStats power_step(const PackedMatrix& m, double shift, const double* x, double* y);
void scale(double* x, int stride, double factor);

}  // namespace alphadg::kernels
