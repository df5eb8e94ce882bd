#include "starlike/normalized_family.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starlike/errors.hpp"
#include "starlike/simd/kernels.hpp"

namespace starlike {

namespace {

constexpr double kUnit = std::numeric_limits<double>::epsilon() / 2;

bool uses_sqrt(FamilyKind kind) { return kind == FamilyKind::kH || kind == FamilyKind::kLambda; }

// z J_nu'(z) / J_nu(z) and its propagated error.
std::pair<cplx, double> log_derivative(const Order& order, cplx u) {
  if (u == 0.0) return {order.nu(), 0.0};
  const SeriesEval j = bessel_j(order, u);
  const SeriesEval jp = bessel_j_prime(order, u);
  const double aj = std::abs(j.value);
  if (aj == 0.0 || aj <= 8.0 * j.error_bound()) {
    throw PoleError("star function evaluated at a zero of J_nu");
  }
  const cplx ratio = u * jp.value / j.value;
  const double au = std::abs(u);
  const double err = au * (std::abs(jp.value) * j.error_bound() / (aj * aj) + jp.error_bound() / aj) +
                     4 * kUnit * std::abs(ratio);
  return {ratio, err};
}

// sum_{n>N} w / (j_n^2 - w) for w = b^2 >= 0 given envelope j_{N+k} >= a + (k-1) s.
double tail_in_square(double a, double s, double b) {
  if (b == 0.0) return 0.0;
  if (!(b < a)) return std::numeric_limits<double>::infinity();
  const double w = b * b;
  return w / (a * a - w) + b / (2.0 * s) * std::log((a + b) / (a - b));
}

std::vector<double> squared_zeros(const ZeroTable& table) {
  std::vector<double> sq;
  sq.reserve(table.count());
  for (double j : table.zeros()) sq.push_back(j * j);
  return sq;
}

// Rounding allowance for a partial sum of N terms each bounded by
// w / (j_n^2 - w) in modulus.
double partial_sum_rounding(const std::vector<double>& jsq, double w) {
  double mag = 0.0;
  for (double a : jsq) mag += w / (a - w);
  return 8.0 * static_cast<double>(jsq.size()) * kUnit * mag;
}

}  // namespace

const char* family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kF: return "f";
    case FamilyKind::kG: return "g";
    case FamilyKind::kH: return "h";
    case FamilyKind::kLambda: return "lambda";
  }
  return "?";
}

FamilyKind parse_family(std::string_view name) {
  if (name == "f") return FamilyKind::kF;
  if (name == "g") return FamilyKind::kG;
  if (name == "h") return FamilyKind::kH;
  if (name == "lambda") return FamilyKind::kLambda;
  throw DomainError("unknown family '" + std::string(name) + "' (expected f, g, h or lambda)");
}

Family::Family(FamilyKind kind, Order order) : kind_(kind), order_(order) {
  if (kind == FamilyKind::kF && order.nu() == 0.0) {
    throw DomainError("nu must be nonzero for family f");
  }
}

cplx eval(const Family& family, cplx z) {
  const Order& order = family.order();
  switch (family.kind()) {
    case FamilyKind::kF: {
      if (z == 0.0) return 0.0;
      // 2^nu Gamma(nu+1) J_nu(z) = z^nu * S(z^2/4). Taking the 1/nu power of
      // z^nu * S literally breaks f(z) = z + O(z^2) once |nu arg z| > pi, so
      // the root is z * S^{1/nu} with S^{1/nu} = 1 at the origin.
      const cplx s = reduced_series_j(order, z * z / 4.0).value;
      if (s == 0.0 || (s.imag() == 0.0 && s.real() < 0.0)) {
        throw BranchError("J_nu(z) / z^nu lies on the principal log branch cut");
      }
      return z * std::exp(std::log(s) / family.nu());
    }
    case FamilyKind::kG:
      return z * reduced_series_j(order, z * z / 4.0).value;
    case FamilyKind::kH:
      return z * reduced_series_j(order, z / 4.0).value;
    case FamilyKind::kLambda:
      return reduced_series_j(order, z / 4.0).value;
  }
  return 0.0;
}

StarValue star_direct(const Family& family, cplx z) {
  const double nu = family.nu();
  const cplx u = uses_sqrt(family.kind()) ? std::sqrt(z) : z;
  const auto [ratio, err] = log_derivative(family.order(), u);
  StarValue out;
  out.route = Route::kDirect;
  switch (family.kind()) {
    case FamilyKind::kF:
      out.value = ratio / nu;
      out.tail_bound = err / std::abs(nu);
      break;
    case FamilyKind::kG:
      out.value = 1.0 - nu + ratio;
      out.tail_bound = err;
      break;
    case FamilyKind::kH:
      out.value = 1.0 - nu / 2 + ratio / 2.0;
      out.tail_bound = err / 2;
      break;
    case FamilyKind::kLambda:
      out.value = -nu / 2 + ratio / 2.0;
      out.tail_bound = err / 2;
      break;
  }
  return out;
}

double mittag_leffler_tail(const ZeroTable& table, double abs_z) {
  return 2.0 * tail_in_square(table.next_zero(), table.spacing_floor(), abs_z);
}

StarValue star_mittag_leffler(const Family& family, cplx z, const ZeroTable& table) {
  if (table.order().nu() != family.nu()) {
    throw DomainError("zero table order does not match the family order");
  }
  const double j1 = table.first();
  const double az = std::abs(z);
  const bool sq = uses_sqrt(family.kind());
  if (!(az < (sq ? j1 * j1 : j1))) {
    throw RangeError(sq ? "Mittag-Leffler route requires |z| < j_{nu,1}^2"
                        : "Mittag-Leffler route requires |z| < j_{nu,1}");
  }
  const std::vector<double> jsq = squared_zeros(table);
  StarValue out;
  out.route = Route::kMittagLeffler;
  if (z == 0.0) {
    out.value = family.kind() == FamilyKind::kLambda ? 0.0 : 1.0;
    return out;
  }
  if (sq) {
    // 1 - sum z/(j^2 - z); lambda drops the leading 1.
    const cplx s = z * simd::sum_inverse_shift(jsq, z);
    out.value = (family.kind() == FamilyKind::kLambda ? 0.0 : 1.0) - s;
    out.tail_bound = tail_in_square(table.next_zero(), table.spacing_floor(), std::sqrt(az)) +
                     partial_sum_rounding(jsq, az);
    return out;
  }
  const cplx w = z * z;
  const cplx s = 2.0 * w * simd::sum_inverse_shift(jsq, w);
  const double tail = 2.0 * tail_in_square(table.next_zero(), table.spacing_floor(), az) +
                      2.0 * partial_sum_rounding(jsq, az * az);
  if (family.kind() == FamilyKind::kF) {
    out.value = 1.0 - s / family.nu();
    out.tail_bound = tail / std::abs(family.nu());
  } else {
    out.value = 1.0 - s;
    out.tail_bound = tail;
  }
  return out;
}

RatioExpansion bessel_ratio_expansion(const ZeroTable& table, cplx z) {
  const double az = std::abs(z);
  const double a = table.next_zero();
  const double s = table.spacing_floor();
  if (!(az < table.first())) throw RangeError("ratio expansion requires |z| < j_{nu,1}");
  RatioExpansion out;
  const std::vector<double> jsq = squared_zeros(table);
  out.partial_sum = 2.0 * z * simd::sum_inverse_shift(jsq, z * z);
  if (z == 0.0) return out;
  const SeriesEval j = bessel_j(table.order(), z);
  const SeriesEval j1 = bessel_j(table.order().shifted(1.0), z);
  out.direct = j1.value / j.value;
  // sum_{n>N} 2|z| / (j_n^2 - |z|^2) = (2/|z|) * [sum |z|^2/(j_n^2 - |z|^2)].
  out.tail_bound = 2.0 / az * tail_in_square(a, s, az) +
                   2.0 / az * partial_sum_rounding(jsq, az * az) +
                   std::abs(out.direct) * (j.error_bound() / std::abs(j.value) +
                                           j1.error_bound() / std::max(std::abs(j1.value), 1e-300));
  return out;
}

double lambda_derivative_check(const Order& order, cplx z, double step) {
  const Order next = order.shifted(1.0);
  auto lambda = [&](const Order& o, cplx x) { return reduced_series_j(o, x / 4.0).value; };
  const cplx central = (lambda(order, z + step) - lambda(order, z - step)) / (2.0 * step);
  return std::abs(central + lambda(next, z) / (4.0 * (order.nu() + 1.0)));
}

}  // namespace starlike
