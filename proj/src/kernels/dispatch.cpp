#include <atomic>
#include <cstdlib>
#include <string>

#include "alphadg/errors.hpp"
#include "alphadg/kernels.hpp"

namespace alphadg::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(ALPHADG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend initial_backend() {
  if (const char* env = std::getenv("ALPHADG_KERNELS")) {
    const std::string want(env);
    if (want == "generic") return Backend::generic;
    if (want == "avx2" && cpu_has_avx2()) return Backend::avx2;
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::generic;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::generic: return "generic";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  return b == Backend::generic || (b == Backend::avx2 && cpu_has_avx2());
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void force_backend(Backend b) {
  if (!backend_available(b))
    throw InvalidInput("kernel backend `" + std::string(backend_name(b)) + "` is not available on this CPU");
  current().store(b, std::memory_order_relaxed);
}

PackedMatrix pack(const double* row_major, int n) {
  PackedMatrix m;
  m.n = n;
  m.stride = PackedMatrix::padded(n);
  m.cols.assign(static_cast<std::size_t>(n) * m.stride, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.cols[static_cast<std::size_t>(j) * m.stride + i] = row_major[static_cast<std::size_t>(i) * n + j];
  return m;
}

PowerStepFn power_step_for(Backend b) {
#if defined(ALPHADG_HAVE_AVX2)
  if (b == Backend::avx2) return avx2::power_step;
#endif
  (void)b;
  return generic::power_step;
}

ScaleFn scale_for(Backend b) {
#if defined(ALPHADG_HAVE_AVX2)
  if (b == Backend::avx2) return avx2::scale;
#endif
  (void)b;
  return generic::scale;
}

StepStats power_step(const PackedMatrix& m, double shift, const double* x, double* y) {
  return power_step_for(active_backend())(m, shift, x, y);
}

void scale(double* x, int stride, double factor) { scale_for(active_backend())(x, stride, factor); }

}  // namespace alphadg::kernels
