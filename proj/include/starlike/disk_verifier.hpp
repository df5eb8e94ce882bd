#pragma once

#include <span>
#include <string>
#include <vector>

#include "starlike/normalized_family.hpp"
#include "starlike/zero_finder.hpp"

namespace starlike {

struct Disk {
  cplx center{};
  double radius = 1.0;
};

struct VerificationReport {
  std::string claim_id;
  bool pass = false;
  double worst_margin = 0.0;
  cplx worst_point{};
  int samples = 0;
  std::string detail;
};

/// Minimum of Re S_F over n_angles equispaced points of |z| = r.
struct CircleMinimum {
  double min_re = 0.0;
  double angle = 0.0;
  cplx point{};
};
CircleMinimum min_on_circle(const Family& family, double r, int n_angles);

/// Angle (0 or pi/2) at which Re S_F is smallest on every circle, and the
/// period of Re S_F in the angle (pi for the even families f, g).
struct ExtremalDirection {
  double angle = 0.0;
  double period = 0.0;
};
ExtremalDirection extremal_direction(const Family& family);

struct RadiusCertificate {
  VerificationReport inside;   // pass: min Re S_F > beta on r(1-eps)
  VerificationReport outside;  // pass: min Re S_F < beta on r(1+eps), at the extremal angle
};

inline constexpr double kDefaultEps = 0.01;
inline constexpr int kDefaultAngles = 720;

RadiusCertificate verify_starlike_radius(const Family& family, double beta, double radius,
                                         double eps = kDefaultEps, int n_angles = kDefaultAngles);

/// Upper and lower slacks of |z|/(a-|z|) >= Re(z/(a-z)) >= -|z|/(a+|z|).
struct HalfplaneSlacks {
  std::vector<double> upper;
  std::vector<double> lower;
};
HalfplaneSlacks halfplane_slacks(double alpha, std::span<const cplx> samples);

/// Samples with |z| >= alpha are counted in `detail` and skipped.
VerificationReport check_halfplane_inequalities(double alpha, std::span<const cplx> samples);

/// The same pair with z -> z^2, alpha -> j_{nu,n}^2 for every tabulated zero.
/// Samples must lie in the disk |z| < j_{nu,1}.
VerificationReport check_term_inequalities(const ZeroTable& table, std::span<const cplx> samples);

}  // namespace starlike
