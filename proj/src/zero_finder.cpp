#include "starlike/zero_finder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "starlike/errors.hpp"

namespace starlike {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kScanStep = 0.1;
constexpr double kZeroScanLimit = kMaxRealArgument;
constexpr double kRelTol = 1e-13;
constexpr double kDegenerateOffset = 1e-6;
constexpr double kImaginaryOffset = 1e-8;


}  // namespace

ZeroTable::ZeroTable(Order order, std::vector<double> zeros, double next_zero)
    : order_(order), zeros_(std::move(zeros)), next_zero_(next_zero) {
  if (zeros_.empty()) throw DomainError("zero table must hold at least one zero");
}

double ZeroTable::spacing_floor() const {
  return std::min(kPi, next_zero_ - zeros_.back());
}

double ZeroTable::lower_envelope(int n) const {
  const auto count_i = static_cast<int>(zeros_.size());
  if (n <= count_i) return zeros_[static_cast<std::size_t>(n - 1)];
  return next_zero_ + (n - count_i - 1) * spacing_floor();
}

ZeroTable bessel_zeros(const Order& order, int n) {
  if (n < 1 || n > kMaxTableZeros) {
    throw DomainError("zero count must lie in [1, " + std::to_string(kMaxTableZeros) + "]");
  }
  const double nu = order.nu();
  auto f = [&](double x) { return bessel_j_real(order, x); };

  // j_{nu,k} < (k + nu/2 + 3/4) pi; the scan continues past it if needed.
  const double ceiling = (n + 1 + nu / 2 + 0.75) * kPi;
  std::vector<double> found;
  found.reserve(static_cast<std::size_t>(n) + 1);
  double from = 1e-6;
  while (static_cast<int>(found.size()) < n + 1) {
    const auto br = scan_sign_change(f, from, std::max(ceiling, from + kScanStep) + 2 * kPi, kScanStep);
    if (!br || br->hi > kZeroScanLimit) {
      throw BracketError("could not bracket zero " + std::to_string(found.size() + 1) +
                         " of J_nu within the supported radius");
    }
    const RootResult r = bisect(f, br->lo, br->hi, kRelTol);
    found.push_back(r.root);
    from = br->hi;
    // The sample at `hi` may sit exactly on the zero; step past it.
    if (f(from) == 0.0) from = std::nextafter(from, 2 * from);
  }
  const double next = found.back();
  found.pop_back();
  return ZeroTable(order, std::move(found), next);
}

DiniRegime dini_regime(const Order& order, DiniParameter p) {
  const double s = p.alpha() + order.nu();
  if (s > 0.0) return DiniRegime::kRealZeros;
  if (s == 0.0) return DiniRegime::kBoundary;
  return DiniRegime::kImaginaryPair;
}

double dini_function(const Order& order, DiniParameter p, double r) {
  if (r > kMaxArgument) {
    const MillerPair m = bessel_j_miller(order, r);
    return r * m.j_prime + p.alpha() * m.j;
  }
  const double jp = bessel_j_prime(order, r).value.real();
  const double j = bessel_j(order, r).value.real();
  return r * jp + p.alpha() * j;
}

double dini_function_imaginary(const Order& order, DiniParameter p, double xi) {
  const double ip = bessel_i_prime(order, xi).value.real();
  const double i = bessel_i(order, xi).value.real();
  return xi * ip + p.alpha() * i;
}

DiniZero dini_smallest_positive_zero(const Order& order, DiniParameter p) {
  const DiniRegime regime = dini_regime(order, p);
  if (regime == DiniRegime::kImaginaryPair) {
    throw RegimeError("real-zero Dini search requires alpha + nu >= 0");
  }
  const double j1 = bessel_zeros(order, 1).first();
  auto f = [&](double r) { return dini_function(order, p, r); };
  const double from = regime == DiniRegime::kBoundary ? kDegenerateOffset : 1e-6 * j1;
  const auto br = scan_sign_change(f, from, j1, std::min(kScanStep, j1 / 64));
  // f(j1) = j1 J'(j1) < 0, so a sign change exists whenever f > 0 near 0.
  if (!br) {
    throw BracketError("Dini function has no sign change on (0, j_{nu,1})");
  }
  const RootResult r = bisect(f, br->lo, br->hi, kRelTol);
  return {r.root, r.bracket, std::abs(f(r.root))};
}

DiniZero dini_imaginary_zero(const Order& order, DiniParameter p, std::optional<double> scan_limit) {
  if (dini_regime(order, p) != DiniRegime::kImaginaryPair) {
    throw RegimeError("purely imaginary Dini zeros require -1 < nu < -alpha");
  }
  const double limit = scan_limit.value_or(kMaxArgument);
  auto f = [&](double xi) { return dini_function_imaginary(order, p, xi); };
  const double step = scan_limit ? std::min(kScanStep, limit / 64) : kScanStep;
  const auto br = scan_sign_change(f, kImaginaryOffset, limit, step);
  if (!br) throw BracketError("no imaginary Dini zero below the scan limit");
  const RootResult r = bisect(f, br->lo, br->hi, kRelTol);
  return {r.root, r.bracket, std::abs(f(r.root))};
}

double imaginary_zero_bound_sq(const Order& order, DiniParameter p, double j_first) {
  const double s = p.alpha() + order.nu();
  return -s / (2.0 + s) * j_first * j_first;
}

}  // namespace starlike
