#include <doctest.h>

#include <random>

#include "alphadg/families.hpp"
#include "alphadg/kernels.hpp"
#include "alphadg/spectral.hpp"
#include "support/oracles.hpp"

using namespace alphadg;
namespace k = alphadg::kernels;

namespace {

struct RestoreBackend {
  k::Backend saved = k::active_backend();
  ~RestoreBackend() { k::force_backend(saved); }
};

std::vector<double> random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::bernoulli_distribution zero(0.4);
  std::vector<double> m(static_cast<std::size_t>(n) * n);
  for (double& x : m) x = zero(rng) ? 0.0 : u(rng);
  return m;
}

}  // namespace

TEST_CASE("pack lays out padded columns") {
  const std::vector<double> m{1, 2, 3, 4, 5, 6, 7, 8, 9};
  const k::PackedMatrix p = k::pack(m.data(), 3);
  CHECK(p.stride == 4);
  CHECK(p.cols.size() == 12);
  CHECK(p.cols[0 * 4 + 1] == 4);  // M(1,0)
  CHECK(p.cols[2 * 4 + 0] == 3);  // M(0,2)
  CHECK(p.cols[0 * 4 + 3] == 0);  // padding
}

TEST_CASE("generic power step is the plain product") {
  const std::vector<double> m{0, 1, 2, 3, 0, 1, 1, 1, 0};
  const k::PackedMatrix p = k::pack(m.data(), 3);
  std::vector<double> x{1, 2, 4, 0}, y(4);
  const k::StepStats s = k::generic::power_step(p, 1.0, x.data(), y.data());
  CHECK(y[0] == 1 + 2 + 8);
  CHECK(y[1] == 3 + 2 + 4);
  CHECK(y[2] == 1 + 2 + 4);
  CHECK(s.sum == y[0] + y[1] + y[2]);
  CHECK(s.lo == doctest::Approx(7.0 / 4));
  CHECK(s.hi == doctest::Approx(11.0));
}

TEST_CASE("generic and avx2 kernels agree bit for bit") {
  if (!k::backend_available(k::Backend::avx2)) {
    MESSAGE("avx2 not available on this CPU; equivalence not exercised");
    return;
  }
  const auto avx_step = k::power_step_for(k::Backend::avx2);
  const auto avx_scale = k::scale_for(k::Backend::avx2);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.05, 2.0);
  for (int n = 1; n <= 23; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_matrix(n, rng);
      const k::PackedMatrix p = k::pack(m.data(), n);
      std::vector<double> x(p.stride, 0.0);
      for (int i = 0; i < n; ++i) x[i] = u(rng);
      std::vector<double> y1(p.stride), y2(p.stride);
      const double shift = trial % 2 ? 1.0 : 0.0;
      const k::StepStats a = k::generic::power_step(p, shift, x.data(), y1.data());
      const k::StepStats b = avx_step(p, shift, x.data(), y2.data());
      for (int i = 0; i < n; ++i) REQUIRE(y1[i] == y2[i]);
      REQUIRE(a.lo == b.lo);
      REQUIRE(a.hi == b.hi);
      REQUIRE(a.sum == doctest::Approx(b.sum).epsilon(1e-14));

      std::vector<double> s1 = y1, s2 = y1;
      k::generic::scale(s1.data(), p.stride, 0.37);
      avx_scale(s2.data(), p.stride, 0.37);
      for (int i = 0; i < p.stride; ++i) REQUIRE(s1[i] == s2[i]);
    }
  }
}

TEST_CASE("spectral results agree across backends") {
  if (!k::backend_available(k::Backend::avx2)) return;
  RestoreBackend restore;
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const Digraph g = ref::random_strong(2 + t % 11, 0.4, rng);
    const double a = (t % 7) / 7.0;
    k::force_backend(k::Backend::generic);
    const SpectralResult r1 = spectral_radius(g, a);
    k::force_backend(k::Backend::avx2);
    const SpectralResult r2 = spectral_radius(g, a);
    REQUIRE(r1.iterations == r2.iterations);
    REQUIRE(std::abs(r1.radius - r2.radius) <= 1e-12);
    REQUIRE(std::abs(r1.certificate_lo - r2.certificate_lo) <= 1e-12);
    REQUIRE(std::abs(r1.certificate_hi - r2.certificate_hi) <= 1e-12);
  }
}

TEST_CASE("backend names and forcing") {
  RestoreBackend restore;
  CHECK(k::backend_name(k::Backend::generic) == "generic");
  CHECK(k::backend_name(k::Backend::avx2) == "avx2");
  CHECK(k::backend_available(k::Backend::generic));
  k::force_backend(k::Backend::generic);
  CHECK(k::active_backend() == k::Backend::generic);
  CHECK(k::power_step_for(k::Backend::generic) == &k::generic::power_step);
}
