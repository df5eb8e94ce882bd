#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "starlike/simd/kernels.hpp"

using namespace starlike::simd;

TEST_CASE("dispatch reports a known ISA") {
  const Isa isa = active_isa();
  CHECK((isa == Isa::kScalar || isa == Isa::kAvx2));
  CHECK(std::string(isa_name(isa)).size() > 0);
  if (!avx2::available()) CHECK(isa == Isa::kScalar);
}

TEST_CASE("sum_inverse_shift: scalar reference against a direct loop") {
  const std::vector<double> poles = {1.0, 4.0, 9.0};
  const cplx w(0.5, 0.25);
  cplx expect = 0.0;
  for (double a : poles) expect += 1.0 / (a - w);
  CHECK(std::abs(scalar::sum_inverse_shift(poles, w) - expect) < 1e-15);
  CHECK(scalar::sum_inverse_shift(std::vector<double>{}, w) == cplx(0.0));
}

TEST_CASE("AVX2 variants match the scalar reference") {
  if (!avx2::available()) {
    MESSAGE("AVX2 not available; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 64u, 1001u}) {
    std::vector<double> poles;
    for (std::size_t i = 0; i < n; ++i) poles.push_back(std::pow(3.0 * (i + 1), 2));
    for (int t = 0; t < 20; ++t) {
      const cplx w(8.0 * u(rng) - 4.0, 8.0 * u(rng) - 4.0);
      const cplx a = scalar::sum_inverse_shift(poles, w);
      const cplx b = avx2::sum_inverse_shift(poles, w);
      double mag = 0.0;
      for (double p : poles) mag += 1.0 / std::abs(p - w);
      CHECK(std::abs(a - b) <= 4.0 * n * 1.2e-16 * mag + 1e-300);
    }

    std::vector<double> re(n), im(n), u1(n), l1(n), u2(n), l2(n);
    for (std::size_t i = 0; i < n; ++i) {
      re[i] = 3.0 * u(rng) - 1.5;
      im[i] = 3.0 * u(rng) - 1.5;
    }
    scalar::halfplane_slacks(2.5, re, im, u1, l1);
    avx2::halfplane_slacks(2.5, re, im, u2, l2);
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::hypot(re[i], im[i]);
      const double scale = 1.0 + m / (2.5 - m);
      CHECK(std::abs(u1[i] - u2[i]) <= 1e-14 * scale);
      CHECK(std::abs(l1[i] - l2[i]) <= 1e-14 * scale);
    }
  }
}
