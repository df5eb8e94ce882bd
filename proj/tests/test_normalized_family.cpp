#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "starlike/errors.hpp"
#include "starlike/normalized_family.hpp"

using namespace starlike;

TEST_CASE("eval: closed forms at nu = 1/2") {
  const Order half(0.5);
  // h = sqrt(z) sin(sqrt z), g = sin z, f = sin^2 z / z.
  CHECK(std::abs(eval(Family(FamilyKind::kH, half), 1.0) - std::sin(1.0)) < 1e-15);
  for (double x : {0.3, 1.0, 2.5}) {
    CHECK(std::abs(eval(Family(FamilyKind::kG, half), x) - std::sin(x)) < 1e-15);
    CHECK(std::abs(eval(Family(FamilyKind::kF, half), x) - std::sin(x) * std::sin(x) / x) < 1e-15);
    CHECK(std::abs(eval(Family(FamilyKind::kH, half), x) - std::sqrt(x) * std::sin(std::sqrt(x))) < 1e-15);
  }
  CHECK(eval(Family(FamilyKind::kLambda, Order(2.0)), 0.0) == cplx(1.0));
  // sin(4)/4 < 0: the 1/nu power has no principal value there.
  CHECK_THROWS_AS(eval(Family(FamilyKind::kF, half), 4.0), BranchError);
}

TEST_CASE("eval: normalisation F(z) = z + O(z^2)") {
  for (double nu : {-0.5, 0.5, 3.0}) {
    for (FamilyKind k : {FamilyKind::kF, FamilyKind::kG, FamilyKind::kH}) {
      const Family fam(k, Order(nu));
      for (double arg : {0.3, 1.1, 2.0, 3.0}) {
        const cplx z = std::polar(1e-5, arg);
        CAPTURE(nu);
        CAPTURE(arg);
        CHECK(std::abs(eval(fam, z) / z - 1.0) < 1e-4);
      }
    }
  }
}

TEST_CASE("Family and star function domains") {
  CHECK_THROWS_AS(Family(FamilyKind::kF, Order(0.0)), DomainError);
  CHECK_THROWS_AS(parse_family("k"), DomainError);
  CHECK(parse_family("lambda") == FamilyKind::kLambda);
  const double j01 = 2.404825557695773;
  CHECK_THROWS_AS(star_direct(Family(FamilyKind::kH, Order(0)), j01 * j01), PoleError);
  CHECK_THROWS_AS(star_direct(Family(FamilyKind::kG, Order(0)), j01), PoleError);
}

TEST_CASE("star_direct matches the long-double oracle") {
  auto s_f = [](long double nu, long double x) {
    return x * oracle::bessel_j_prime(nu, x) / (nu * oracle::bessel_j(nu, x));
  };
  const StarValue f = star_direct(Family(FamilyKind::kF, Order(2.0)), 1.0);
  CHECK(std::abs(f.value.real() - static_cast<double>(s_f(2, 1))) < 1e-14);
  CHECK(std::abs(f.value.real() - 0.91487049329155263) < 1e-14);
  CHECK(f.tail_bound < 1e-13);

  const StarValue h = star_direct(Family(FamilyKind::kH, Order(0.5)), 2.0);
  const long double u = std::sqrt(2.0L);
  const long double ref = 1 - 0.25L + u * oracle::bessel_j_prime(0.5L, u) / (2 * oracle::bessel_j(0.5L, u));
  CHECK(std::abs(h.value.real() - static_cast<double>(ref)) < 1e-14);
  CHECK(std::abs(h.value.real() - 0.61163458762597630) < 1e-14);

  for (FamilyKind k : {FamilyKind::kF, FamilyKind::kG, FamilyKind::kH}) {
    CHECK(star_direct(Family(k, Order(1.5)), 0.0).value == cplx(1.0));
  }
}

TEST_CASE("Mittag-Leffler route agrees with the direct route") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double nu : {-0.9, -0.3, 0.4, 1.0, 5.0}) {
    const ZeroTable table = bessel_zeros(Order(nu), kMaxTableZeros);
    const double j1 = table.first();
    for (FamilyKind k : {FamilyKind::kF, FamilyKind::kG, FamilyKind::kH}) {
      const Family fam(k, Order(nu));
      const double lim = k == FamilyKind::kH ? j1 * j1 : j1;
      for (int i = 0; i < 40; ++i) {
        const cplx z = std::polar(0.95 * lim * std::sqrt(unit(rng)), 2 * std::numbers::pi * unit(rng));
        const StarValue d = star_direct(fam, z);
        const StarValue m = star_mittag_leffler(fam, z, table);
        CAPTURE(nu);
        CAPTURE(z);
        CHECK(std::abs(d.value - m.value) <= d.tail_bound + m.tail_bound);
      }
      CHECK_THROWS_AS(star_mittag_leffler(fam, lim * 1.01, table), RangeError);
    }
  }
  const ZeroTable other = bessel_zeros(Order(1.0), 4);
  CHECK_THROWS_AS(star_mittag_leffler(Family(FamilyKind::kG, Order(2.0)), 0.5, other), DomainError);
}

TEST_CASE("Mittag-Leffler tail bound covers the omitted zeros") {
  const ZeroTable small = bessel_zeros(Order(2.0), 8);
  const ZeroTable big = bessel_zeros(Order(2.0), kMaxTableZeros);
  for (double r : {1.0, 3.0, 5.0}) {
    double omitted = 0.0;
    for (std::size_t n = 8; n < big.count(); ++n) {
      const double a = big.zeros()[n];
      omitted += 2 * r * r / (a * a - r * r);
    }
    CHECK(omitted <= mittag_leffler_tail(small, r));
  }
}

TEST_CASE("Bessel ratio expansion") {
  const ZeroTable table = bessel_zeros(Order(0.7), kMaxTableZeros);
  for (cplx z : {cplx(0.5, 0.0), cplx(1.0, 1.0), cplx(0.0, 2.0)}) {
    const RatioExpansion e = bessel_ratio_expansion(table, z);
    CHECK(std::abs(e.direct - e.partial_sum) <= e.tail_bound);
  }
  CHECK_THROWS_AS(bessel_ratio_expansion(table, 4.0), RangeError);
}

TEST_CASE("lambda derivative identity") {
  CHECK(lambda_derivative_check(Order(0), 0.5, 1e-4) <= 1e-7);
  // Oracle: term-wise derivative of lambda_nu(z) = sum (-z/4)^n / (n! (nu+1)_n).
  const double nu = 1.0;
  const double z = 0.4;
  long double term = 1;
  long double deriv = 0;
  for (int n = 1; n < 40; ++n) {
    term *= -(z / 4.0L) / (n * (n + nu));
    deriv += n * term / z;
  }
  long double next = 1;
  long double lam_next = 1;
  for (int n = 1; n < 40; ++n) {
    next *= -(z / 4.0L) / (n * (n + nu + 1));
    lam_next += next;
  }
  CHECK(std::abs(static_cast<double>(deriv + lam_next / (4 * (nu + 1)))) < 1e-15);
  for (double n0 : {-0.5, 0.0, 1.0}) {
    const double r1 = lambda_derivative_check(Order(n0), 0.5, 0.1);
    const double r2 = lambda_derivative_check(Order(n0), 0.5, 0.05);
    CHECK(std::log2(r1 / r2) >= 1.9);
  }
}
