#pragma once

// Test-only reference computations. Nothing here calls into the library, so
// the values they produce can be used to check it.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

// J_nu(x) for real x > 0: plain 60-term power series in long double.
inline long double bessel_j(long double nu, long double x) {
  long double term = std::pow(x / 2, nu) / std::tgamma(nu + 1);
  long double sum = term;
  for (int n = 1; n < 60; ++n) {
    term *= -(x * x / 4) / (n * (n + nu));
    sum += term;
  }
  return sum;
}

// J_nu'(x) from the term-wise differentiated series.
inline long double bessel_j_prime(long double nu, long double x) {
  long double term = std::pow(x / 2, nu) / std::tgamma(nu + 1);
  long double sum = nu * term;
  for (int n = 1; n < 60; ++n) {
    term *= -(x * x / 4) / (n * (n + nu));
    sum += (2 * n + nu) * term;
  }
  return sum / x;
}

inline long double bessel_i(long double nu, long double x) {
  long double term = std::pow(x / 2, nu) / std::tgamma(nu + 1);
  long double sum = term;
  for (int n = 1; n < 80; ++n) {
    term *= (x * x / 4) / (n * (n + nu));
    sum += term;
  }
  return sum;
}

// Plain bisection of a sign change on [lo, hi].
inline double bisect(const std::function<long double(long double)>& f, long double lo, long double hi) {
  long double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-17L * hi; ++i) {
    const long double mid = (lo + hi) / 2;
    const long double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return static_cast<double>((lo + hi) / 2);
}

// First sign change of f on (from, to) with a fixed scan step, then bisection.
inline double first_root(const std::function<long double(long double)>& f, double from, double to,
                         double step = 1e-3) {
  long double x = from;
  long double fx = f(x);
  while (x < to) {
    const long double next = x + step;
    const long double fn = f(next);
    if ((fx < 0) != (fn < 0)) return bisect(f, x, next);
    x = next;
    fx = fn;
  }
  return std::nan("");
}

inline double sqrt_2_over_pi_x(double x) { return std::sqrt(2.0 / (std::numbers::pi * x)); }

}  // namespace oracle
