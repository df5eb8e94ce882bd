#include "starlike/radius_solver.hpp"

#include <cmath>

#include "starlike/errors.hpp"
#include "starlike/zero_finder.hpp"

namespace starlike {

namespace {

Family make_family(FamilyKind kind, double nu) {
  if (kind == FamilyKind::kLambda) {
    throw DomainError("radius of starlikeness is defined for families f, g and h");
  }
  if (kind == FamilyKind::kF && std::abs(nu) < kMinAbsOrderF) {
    throw DomainError("nu must be nonzero for family f");
  }
  return Family(kind, Order(nu));
}

}  // namespace

RadiusQuery::RadiusQuery(FamilyKind kind, double nu, double beta)
    : family_(make_family(kind, nu)), beta_(beta) {
  if (!(beta >= 0.0 && beta < 1.0)) throw DomainError("beta must satisfy 0 <= beta < 1");
}

const char* branch_name(Branch b) { return b == Branch::kIEquation ? "I_EQUATION" : "J_EQUATION"; }

double defining_alpha(FamilyKind kind, double nu, double beta) {
  switch (kind) {
    case FamilyKind::kF: return -beta * nu + 0.0;  // no negative zero
    case FamilyKind::kG: return 1.0 - beta - nu;
    case FamilyKind::kH: return 2.0 - 2.0 * beta - nu;
    case FamilyKind::kLambda: break;
  }
  throw DomainError("no defining equation for family lambda");
}

RadiusResult radius_starlike(const RadiusQuery& q) {
  const Family& fam = q.family();
  const Order& order = fam.order();
  const double alpha = defining_alpha(fam.kind(), fam.nu(), q.beta());
  const DiniParameter p(alpha);

  RadiusResult out;
  out.family = fam.kind();
  out.nu = fam.nu();
  out.beta = q.beta();
  out.defining_alpha = alpha;

  DiniZero zero;
  if (fam.kind() == FamilyKind::kF && fam.nu() < 0.0) {
    // The extremal direction is imaginary: solve r I' - beta nu I = 0,
    // whose unique root lies below j_{nu,1}.
    out.branch = Branch::kIEquation;
    zero = dini_imaginary_zero(order, p, bessel_zeros(order, 1).first());
  } else {
    out.branch = Branch::kJEquation;
    if (dini_regime(order, p) != DiniRegime::kRealZeros) {
      throw RegimeError("defining equation violates alpha + nu > 0");
    }
    zero = dini_smallest_positive_zero(order, p);
  }
  out.equation_root = zero.root;
  out.equation_residual = zero.residual;
  if (fam.kind() == FamilyKind::kH) {
    out.radius = zero.root * zero.root;
    out.bracket = {zero.bracket.lo * zero.bracket.lo, zero.bracket.hi * zero.bracket.hi};
  } else {
    out.radius = zero.root;
    out.bracket = zero.bracket;
  }
  return out;
}

double nu0_function(double nu) {
  const Order order(nu);
  return bessel_j_prime(order, 1.0).value.real() + (2.0 - nu) * bessel_j(order, 1.0).value.real();
}

double solve_nu0() { return bisect(nu0_function, -0.9, 0.0, 1e-14).root; }

std::vector<double> q_nu_profile(const Order& order, double beta, std::span<const double> r_grid) {
  std::vector<double> out;
  out.reserve(r_grid.size());
  for (double r : r_grid) {
    if (!(r > 0.0)) throw DomainError("q_nu grid must be positive");
    const double i = bessel_i(order, r).value.real();
    const double ip = bessel_i_prime(order, r).value.real();
    out.push_back(r * ip / i - beta * order.nu());
  }
  return out;
}

}  // namespace starlike
