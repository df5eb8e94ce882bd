#include "starlike/special_kernels.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "starlike/errors.hpp"

namespace starlike {

namespace {

constexpr double kUnit = std::numeric_limits<double>::epsilon() / 2;
constexpr int kMaxTerms = 600;

// B_{2k} / (2k (2k-1)) for k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,         -1.0 / 360.0,      1.0 / 1260.0,
    -1.0 / 1680.0,      1.0 / 1188.0,      -691.0 / 360360.0,
    1.0 / 156.0,        -3617.0 / 122400.0,
};

enum class Sign { kAlternating, kPositive };

// Sum_{n>=0} s^n w^n / (n! (nu+1)_n) * weight(n), weight(n) = 1 or (2n+nu).
// The ratio |t_{n+1}/t_n| = |w| / ((n+1)(n+1+nu)) is decreasing once
// n+1+nu > 0, which holds for every n >= 0 since nu > -1.
SeriesEval sum_series(double nu, cplx w, Sign sign, bool weighted, int fixed_terms) {
  const cplx step = sign == Sign::kAlternating ? -w : w;
  const double aw = std::abs(w);
  auto weight = [&](int n) { return weighted ? 2.0 * n + nu : 1.0; };

  cplx term = 1.0;  // unweighted t_n
  cplx sum = weight(0) * term;
  double abs_sum = std::abs(sum);
  int n = 0;
  double tail = 0.0;
  for (;;) {
    // Bound on sum_{k > n} weight(k) |t_k|, valid when the weighted ratio < 1.
    const double next_abs = std::abs(term) * aw / ((n + 1) * (n + 1 + nu)) * std::abs(weight(n + 1));
    const double ratio = aw / ((n + 2) * (n + 2 + nu)) *
                         (weighted ? std::abs(weight(n + 2) / weight(n + 1)) : 1.0);
    if (next_abs == 0.0) {
      tail = 0.0;
    } else {
      tail = ratio < 1.0 ? next_abs / (1.0 - ratio) : std::numeric_limits<double>::infinity();
    }

    if (fixed_terms > 0) {
      if (n + 1 >= fixed_terms) break;
    } else {
      const double scale = std::max(std::abs(sum), kUnit * abs_sum);
      if (tail <= 1e-2 * kUnit * scale) break;
      if (n + 1 >= kMaxTerms) {
        throw RangeError("series did not converge within " + std::to_string(kMaxTerms) + " terms");
      }
    }
    ++n;
    term *= step / (n * (n + nu));
    const cplx contrib = weight(n) * term;
    sum += contrib;
    abs_sum += std::abs(contrib);
  }
  SeriesEval out;
  out.value = sum;
  out.tail_bound = tail;
  out.rounding_bound = (4.0 * (n + 1) + 8.0) * kUnit * abs_sum;
  out.terms_used = n + 1;
  return out;
}

// (z/2)^nu / Gamma(nu+1) on the principal branch.
cplx power_prefactor(double nu, cplx z) {
  if (nu == 0.0) return 1.0;
  return std::exp(nu * std::log(z / 2.0) - log_gamma(nu + 1.0));
}

SeriesEval scale(SeriesEval s, cplx factor) {
  const double af = std::abs(factor);
  s.value *= factor;
  s.tail_bound *= af;
  s.rounding_bound = s.rounding_bound * af + 4 * kUnit * std::abs(s.value);
  return s;
}

void check_range(cplx z) {
  if (!(std::abs(z) <= kMaxArgument)) {
    throw RangeError("|z| = " + std::to_string(std::abs(z)) + " exceeds the supported radius " +
                     std::to_string(kMaxArgument));
  }
}

bool is_large_real(cplx z) { return z.imag() == 0.0 && std::abs(z.real()) > kSeriesRealLimit; }

SeriesEval value_at_zero(double nu, bool derivative) {
  SeriesEval s;
  if (!derivative) {
    if (nu < 0.0) throw DomainError("J_nu(0) is unbounded for nu < 0");
    s.value = nu == 0.0 ? 1.0 : 0.0;
    return s;
  }
  if (nu == 0.0 || nu > 1.0) {
    s.value = 0.0;
  } else if (nu == 1.0) {
    s.value = 0.5;
  } else {
    throw DomainError("derivative at z = 0 does not exist for nu in (-1,0) or (0,1)");
  }
  return s;
}

// J_nu(-x) = e^{i pi nu} J_nu(x) on the principal branch.
SeriesEval from_miller(const Order& order, cplx z, bool derivative) {
  const double x = std::abs(z.real());
  const MillerPair p = bessel_j_miller(order, x);
  SeriesEval s;
  s.value = derivative ? p.j_prime : p.j;
  s.rounding_bound = p.error_bound;
  s.terms_used = p.start_index;
  if (z.real() < 0.0) {
    const cplx phase = std::polar(1.0, std::numbers::pi * order.nu());
    // d/dz J(-x): the reflected derivative picks up an extra sign.
    s.value *= derivative ? -phase : phase;
  }
  return s;
}

}  // namespace

Order::Order(double nu) : nu_(nu) {
  if (!(nu > -1.0)) throw DomainError("order nu must satisfy nu > -1");
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  double shift = 1.0;
  while (x < 15.0) {
    shift *= x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double corr = 0.0;
  for (std::size_t k = kStirling.size(); k-- > 0;) corr = corr * inv2 + kStirling[k];
  corr *= inv;
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2 * std::numbers::pi) + corr - std::log(shift);
}

SeriesEval reduced_series_j(const Order& order, cplx w) {
  return sum_series(order.nu(), w, Sign::kAlternating, false, 0);
}

SeriesEval reduced_series_i(const Order& order, cplx w) {
  return sum_series(order.nu(), w, Sign::kPositive, false, 0);
}

SeriesEval bessel_j(const Order& order, cplx z) {
  check_range(z);
  if (z == 0.0) return value_at_zero(order.nu(), false);
  if (is_large_real(z)) return from_miller(order, z, false);
  return scale(reduced_series_j(order, z * z / 4.0), power_prefactor(order.nu(), z));
}

SeriesEval bessel_j_truncated(const Order& order, cplx z, int terms) {
  check_range(z);
  if (terms < 1) throw DomainError("at least one term is required");
  if (z == 0.0) return value_at_zero(order.nu(), false);
  return scale(sum_series(order.nu(), z * z / 4.0, Sign::kAlternating, false, terms),
               power_prefactor(order.nu(), z));
}

SeriesEval bessel_j_prime(const Order& order, cplx z) {
  check_range(z);
  if (z == 0.0) return value_at_zero(order.nu(), true);
  if (is_large_real(z)) return from_miller(order, z, true);
  const SeriesEval s = sum_series(order.nu(), z * z / 4.0, Sign::kAlternating, true, 0);
  return scale(s, power_prefactor(order.nu(), z) / z);
}

SeriesEval bessel_i(const Order& order, cplx z) {
  check_range(z);
  if (z == 0.0) return value_at_zero(order.nu(), false);
  return scale(reduced_series_i(order, z * z / 4.0), power_prefactor(order.nu(), z));
}

SeriesEval bessel_i_prime(const Order& order, cplx z) {
  check_range(z);
  if (z == 0.0) return value_at_zero(order.nu(), true);
  const SeriesEval s = sum_series(order.nu(), z * z / 4.0, Sign::kPositive, true, 0);
  return scale(s, power_prefactor(order.nu(), z) / z);
}

MillerPair bessel_j_miller(const Order& order, double x) {
  if (!(x > 0.0)) throw DomainError("Miller recurrence requires x > 0");
  if (x > kMaxRealArgument) throw RangeError("argument too large for backward recurrence");
  const double nu = order.nu();

  int start = static_cast<int>(x + 20.0 + 10.0 * std::cbrt(x));
  start += start % 2;
  std::vector<double> y(static_cast<std::size_t>(start) + 2, 0.0);
  y[static_cast<std::size_t>(start)] = 1.0;
  for (int k = start; k >= 1; --k) {
    const auto ku = static_cast<std::size_t>(k);
    y[ku - 1] = 2.0 * (nu + k) / x * y[ku] - y[ku + 1];
    if (std::abs(y[ku - 1]) > 1e200) {
      for (std::size_t i = ku - 1; i < y.size(); ++i) y[i] *= 1e-200;
    }
  }

  // (x/2)^nu / Gamma(nu+1) = sum_m c_m J_{nu+2m}(x) / Gamma(nu+1), where
  // c_0 / Gamma(nu+1) = 1 and c_m / Gamma(nu+1) = (nu+2m) prod_{i<m}(nu+i) / m!.
  double norm = y[0];
  double norm_abs = std::abs(y[0]);
  double p = 1.0;
  for (int m = 1; 2 * m <= start; ++m) {
    if (m > 1) p *= (nu + m - 1) / m;
    const double c = (nu + 2.0 * m) * p * y[static_cast<std::size_t>(2 * m)];
    norm += c;
    norm_abs += std::abs(c);
  }
  const double factor = std::exp(nu * std::log(x / 2.0) - log_gamma(nu + 1.0)) / norm;

  MillerPair out;
  out.j = y[0] * factor;
  const double j_next = y[1] * factor;
  out.j_prime = nu / x * out.j - j_next;
  out.start_index = start;
  const double cond = norm_abs / std::abs(norm);
  const double envelope = std::sqrt(2.0 / (std::numbers::pi * x));
  out.error_bound = 16.0 * kUnit * cond * std::sqrt(static_cast<double>(start)) *
                    (std::max(std::abs(out.j), envelope) + std::abs(j_next));
  return out;
}

double bessel_j_real(const Order& order, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_j_real requires x > 0");
  if (x > kSeriesRealLimit) return bessel_j_miller(order, x).j;
  return bessel_j(order, x).value.real();
}

}  // namespace starlike
