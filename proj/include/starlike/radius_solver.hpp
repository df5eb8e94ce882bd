#pragma once

#include <span>
#include <vector>

#include "starlike/normalized_family.hpp"
#include "starlike/roots.hpp"

namespace starlike {

/// |nu| below this is rejected for family f: alpha = -beta*nu and the 1/nu
/// in the star function degenerate together.
inline constexpr double kMinAbsOrderF = 1e-6;

/// Validated (family, beta) pair: 0 <= beta < 1, kind in {f, g, h}.
class RadiusQuery {
 public:
  RadiusQuery(FamilyKind kind, double nu, double beta);
  const Family& family() const { return family_; }
  double beta() const { return beta_; }

 private:
  Family family_;
  double beta_;
};

enum class Branch { kJEquation, kIEquation };
const char* branch_name(Branch b);

/// Radius of starlikeness of order beta.
///
/// For f and g, `radius` is the defining root itself. For h the Dini root
/// rho solves rho J'(rho) + alpha J(rho) = 0 in the variable of J, and the
/// disk of h has radius rho^2 in h's own variable; `radius` and `bracket` are
/// in that variable while `equation_root` keeps rho.
struct RadiusResult {
  FamilyKind family = FamilyKind::kG;
  double nu = 0.0;
  double beta = 0.0;
  double radius = 0.0;
  double equation_residual = 0.0;
  Bracket bracket;
  Branch branch = Branch::kJEquation;
  double defining_alpha = 0.0;
  double equation_root = 0.0;
};

/// alpha in r J'(r) + alpha J(r) = 0 (or r I'(r) + alpha I(r) = 0 on the
/// I-branch): -beta*nu for f, 1-beta-nu for g, 2-2beta-nu for h.
double defining_alpha(FamilyKind kind, double nu, double beta);

RadiusResult radius_starlike(const RadiusQuery& q);

/// J_nu'(1) + (2 - nu) J_nu(1): vanishes where h_nu is starlike exactly on
/// the unit disk.
double nu0_function(double nu);

/// Root of nu0_function on (-0.9, 0).
double solve_nu0();

/// q_nu(r) = r I_nu'(r) / I_nu(r) - beta*nu on the given grid.
std::vector<double> q_nu_profile(const Order& order, double beta, std::span<const double> r_grid);

}  // namespace starlike
