#pragma once

#include <complex>

namespace starlike {

using cplx = std::complex<double>;

/// Real Bessel order. Construction enforces nu > -1, the regime in which all
/// zeros of J_nu are real.
class Order {
 public:
  explicit Order(double nu);
  double nu() const { return nu_; }
  Order shifted(double by) const { return Order(nu_ + by); }

 private:
  double nu_;
};

/// Truncated-series value with an error budget.
///
/// `tail_bound` bounds the neglected tail of the series (ratio test).
/// `rounding_bound` is a first-order bound on accumulated floating-point
/// error, which dominates for large real arguments where terms cancel.
struct SeriesEval {
  cplx value{};
  double tail_bound = 0.0;
  double rounding_bound = 0.0;
  int terms_used = 1;

  double error_bound() const { return tail_bound + rounding_bound; }
};

/// Largest |z| accepted by the kernels.
inline constexpr double kMaxArgument = 60.0;

/// Above this, real positive arguments of J_nu switch from the power series
/// to Miller's backward recurrence (the series loses ~x/ln(10) digits).
inline constexpr double kSeriesRealLimit = 8.0;

/// ln Gamma(x) for x > 0: upward shift to x >= 15 then Stirling's series.
double log_gamma(double x);

/// Sum_{n>=0} (-w)^n / (n! (nu+1)_n). Entire in w; J_nu(z) equals
/// (z/2)^nu / Gamma(nu+1) times this at w = z^2/4.
SeriesEval reduced_series_j(const Order& order, cplx w);

/// Same series with alternating signs removed: the I_nu counterpart.
SeriesEval reduced_series_i(const Order& order, cplx w);

/// J_nu(z), principal branch of z^nu.
SeriesEval bessel_j(const Order& order, cplx z);

/// J_nu(z) with exactly `terms` series terms (no adaptive stopping).
SeriesEval bessel_j_truncated(const Order& order, cplx z, int terms);

/// J_nu'(z) from the term-wise differentiated series (Miller route for large
/// real z). At z = 0 defined only for nu = 0 or nu >= 1.
SeriesEval bessel_j_prime(const Order& order, cplx z);

SeriesEval bessel_i(const Order& order, cplx z);
SeriesEval bessel_i_prime(const Order& order, cplx z);

/// J_nu(x) and J_nu'(x) for real x > 0 by Miller's backward recurrence with
/// Neumann-series normalisation. Exposed for tests; bessel_j dispatches here
/// for x > kSeriesRealLimit.
struct MillerPair {
  double j = 0.0;
  double j_prime = 0.0;
  double error_bound = 0.0;
  int start_index = 0;
};
MillerPair bessel_j_miller(const Order& order, double x);

/// Largest argument accepted on the positive real axis (Miller route).
inline constexpr double kMaxRealArgument = 4 * kMaxArgument;

/// J_nu(x) for 0 < x <= kMaxRealArgument: series up to kSeriesRealLimit,
/// backward recurrence beyond. Used for zero tables reaching past kMaxArgument.
double bessel_j_real(const Order& order, double x);

}  // namespace starlike
