#include "starlike/disk_verifier.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "starlike/errors.hpp"
#include "starlike/simd/kernels.hpp"

namespace starlike {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnit = std::numeric_limits<double>::epsilon() / 2;

double angle_gap(double angle, double target, double period) {
  const double d = std::fmod(std::abs(angle - target), period);
  return std::min(d, period - d);
}

std::string family_tag(const Family& family) { return family_name(family.kind()); }

// Slack tolerance: a few ulps of the larger side of the inequality.
double slack_tolerance(double alpha, double m) {
  return 16.0 * kUnit * (1.0 + m / std::max(alpha - m, 1e-300));
}

}  // namespace

CircleMinimum min_on_circle(const Family& family, double r, int n_angles) {
  CircleMinimum best;
  best.min_re = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n_angles; ++k) {
    const double theta = 2.0 * kPi * k / n_angles;
    const cplx z = std::polar(r, theta);
    const double re = star_direct(family, z).value.real();
    if (re < best.min_re) best = {re, theta, z};
  }
  return best;
}

ExtremalDirection extremal_direction(const Family& family) {
  switch (family.kind()) {
    case FamilyKind::kF:
      return {family.nu() < 0.0 ? kPi / 2 : 0.0, kPi};
    case FamilyKind::kG:
      return {0.0, kPi};
    case FamilyKind::kH:
    case FamilyKind::kLambda:
      return {0.0, 2 * kPi};
  }
  return {0.0, 2 * kPi};
}

RadiusCertificate verify_starlike_radius(const Family& family, double beta, double radius, double eps,
                                         int n_angles) {
  if (!(eps > 0.0 && eps <= 0.05)) throw DomainError("eps must lie in (0, 0.05]");
  if (!(radius > 0.0)) throw DomainError("radius must be positive");
  if (n_angles < 4) throw DomainError("at least four angles are required");

  const std::string tag = family_tag(family);
  RadiusCertificate cert;

  const CircleMinimum in = min_on_circle(family, radius * (1.0 - eps), n_angles);
  cert.inside.claim_id = "starlike-inside-" + tag;
  cert.inside.worst_margin = in.min_re - beta;
  cert.inside.worst_point = in.point;
  cert.inside.samples = n_angles;
  cert.inside.pass = cert.inside.worst_margin > 0.0;
  cert.inside.detail = "min Re[zF'/F] - beta on |z| = r(1-eps)";

  const CircleMinimum out = min_on_circle(family, radius * (1.0 + eps), n_angles);
  const ExtremalDirection dir = extremal_direction(family);
  const double step = 2.0 * kPi / n_angles;
  const double gap = angle_gap(out.angle, dir.angle, dir.period);
  cert.outside.claim_id = "starlike-outside-" + tag;
  cert.outside.worst_margin = out.min_re - beta;
  cert.outside.worst_point = out.point;
  cert.outside.samples = n_angles;
  cert.outside.pass = cert.outside.worst_margin < 0.0 && gap <= step * (1.0 + 1e-9);
  cert.outside.detail = "min attained at angle " + std::to_string(out.angle) + ", expected " +
                        std::to_string(dir.angle) + " (mod " + std::to_string(dir.period) + ")";
  return cert;
}

HalfplaneSlacks halfplane_slacks(double alpha, std::span<const cplx> samples) {
  std::vector<double> re(samples.size());
  std::vector<double> im(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    re[i] = samples[i].real();
    im[i] = samples[i].imag();
  }
  HalfplaneSlacks out{std::vector<double>(samples.size()), std::vector<double>(samples.size())};
  simd::halfplane_slacks(alpha, re, im, out.upper, out.lower);
  return out;
}

VerificationReport check_halfplane_inequalities(double alpha, std::span<const cplx> samples) {
  VerificationReport rep;
  rep.claim_id = "halfplane";
  rep.worst_margin = std::numeric_limits<double>::infinity();
  rep.pass = true;

  std::vector<cplx> valid;
  valid.reserve(samples.size());
  int violations = 0;
  for (const cplx& z : samples) {
    if (std::abs(z) < alpha) {
      valid.push_back(z);
    } else {
      ++violations;
    }
  }
  const HalfplaneSlacks s = halfplane_slacks(alpha, valid);
  for (std::size_t i = 0; i < valid.size(); ++i) {
    const double tol = slack_tolerance(alpha, std::abs(valid[i]));
    const double worst = std::min(s.upper[i], s.lower[i]);
    if (worst < rep.worst_margin) {
      rep.worst_margin = worst;
      rep.worst_point = valid[i];
    }
    if (worst < -tol) rep.pass = false;
  }
  rep.samples = static_cast<int>(valid.size());
  rep.detail = std::to_string(violations) + " samples skipped (|z| >= alpha)";
  return rep;
}

VerificationReport check_term_inequalities(const ZeroTable& table, std::span<const cplx> samples) {
  VerificationReport rep;
  rep.claim_id = "term-inequalities";
  rep.worst_margin = std::numeric_limits<double>::infinity();
  rep.pass = true;

  const double j1 = table.first();
  std::vector<cplx> squares;
  squares.reserve(samples.size());
  for (const cplx& z : samples) {
    if (!(std::abs(z) < j1)) throw DomainError("term inequality samples must satisfy |z| < j_{nu,1}");
    squares.push_back(z * z);
  }
  for (double j : table.zeros()) {
    const double alpha = j * j;
    const HalfplaneSlacks s = halfplane_slacks(alpha, squares);
    for (std::size_t i = 0; i < squares.size(); ++i) {
      const double worst = std::min(s.upper[i], s.lower[i]);
      if (worst < rep.worst_margin) {
        rep.worst_margin = worst;
        rep.worst_point = samples[i];
      }
      if (worst < -slack_tolerance(alpha, std::abs(squares[i]))) rep.pass = false;
    }
  }
  rep.samples = static_cast<int>(samples.size() * table.count());
  rep.detail = std::to_string(table.count()) + " zeros x " + std::to_string(samples.size()) + " points";
  return rep;
}

}  // namespace starlike
