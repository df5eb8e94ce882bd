#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "starlike/disk_verifier.hpp"
#include "starlike/errors.hpp"
#include "starlike/radius_solver.hpp"

using namespace starlike;

TEST_CASE("half-plane slacks at alpha = 1, z = 0.5i") {
  const std::vector<cplx> z = {cplx(0.0, 0.5)};
  const HalfplaneSlacks s = halfplane_slacks(1.0, z);
  // Re(z/(1-z)) = -0.2, |z|/(1-|z|) = 1, -|z|/(1+|z|) = -1/3.
  CHECK(std::abs(s.upper[0] - 1.2) < 1e-15);
  CHECK(std::abs(s.lower[0] - (-0.2 + 1.0 / 3.0)) < 1e-15);
}

TEST_CASE("half-plane inequalities: random samples and equality cases") {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<cplx> pts;
  for (int i = 0; i < 2000; ++i) pts.push_back({u(rng), u(rng)});
  const VerificationReport r = check_halfplane_inequalities(2.0, pts);
  CHECK(r.pass);
  CHECK(r.samples < 2000);
  CHECK(r.detail.find("skipped") != std::string::npos);

  // Equality: upper at positive reals, lower at negative reals.
  const std::vector<cplx> axis = {0.3, 1.1, 1.9, -0.3, -1.1, -1.9};
  const HalfplaneSlacks s = halfplane_slacks(2.0, axis);
  for (std::size_t i = 0; i < 3; ++i) {
    const double m = std::abs(axis[i]);
    CHECK(std::abs(s.upper[i]) <= 1e-14 * std::max(1.0, m / (2.0 - m)));
    CHECK(std::abs(s.lower[i + 3]) <= 1e-14);
  }
}

TEST_CASE("term inequalities") {
  const ZeroTable table = bessel_zeros(Order(0.0), 8);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> pts;
  for (int i = 0; i < 500; ++i) {
    pts.push_back(std::polar(table.first() * std::sqrt(u(rng)) * 0.999, 2 * std::numbers::pi * u(rng)));
  }
  const VerificationReport r = check_term_inequalities(table, pts);
  CHECK(r.pass);
  CHECK(r.samples == 500 * 8);
  const std::vector<cplx> outside = {cplx(table.first(), 0.0)};
  CHECK_THROWS_AS(check_term_inequalities(table, outside), DomainError);
}

TEST_CASE("extremal directions") {
  CHECK(extremal_direction(Family(FamilyKind::kG, Order(0.5))).angle == 0.0);
  CHECK(extremal_direction(Family(FamilyKind::kG, Order(0.5))).period == doctest::Approx(std::numbers::pi));
  CHECK(extremal_direction(Family(FamilyKind::kH, Order(0.5))).period == doctest::Approx(2 * std::numbers::pi));
  CHECK(extremal_direction(Family(FamilyKind::kF, Order(-0.5))).angle == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("min_on_circle for g at nu = 1/2 (g = sin z)") {
  // z cot z on |z| = 1 is smallest on the real axis: cos 1 / sin 1.
  const CircleMinimum m = min_on_circle(Family(FamilyKind::kG, Order(0.5)), 1.0, 720);
  CHECK(std::abs(m.min_re - std::cos(1.0) / std::sin(1.0)) < 1e-12);
  CHECK(std::abs(std::sin(m.angle)) < 1e-12);
}

TEST_CASE("radius certificates on examples and perturbed radii") {
  struct Case {
    FamilyKind kind;
    double nu;
    double beta;
  };
  for (const Case& c : {Case{FamilyKind::kF, 1.0, 0.0}, Case{FamilyKind::kG, 0.5, 0.5},
                        Case{FamilyKind::kH, -0.5, 0.25}, Case{FamilyKind::kF, -0.5, 0.5}}) {
    const Family fam(c.kind, Order(c.nu));
    const double r = radius_starlike(RadiusQuery(c.kind, c.nu, c.beta)).radius;
    const RadiusCertificate cert = verify_starlike_radius(fam, c.beta, r);
    CHECK(cert.inside.pass);
    CHECK(cert.outside.pass);
    // A radius that is 5% too large must fail the inside check.
    CHECK_FALSE(verify_starlike_radius(fam, c.beta, 1.05 * r).inside.pass);
    // One that is 5% too small must fail the outside check.
    CHECK_FALSE(verify_starlike_radius(fam, c.beta, 0.95 * r).outside.pass);
  }
}
