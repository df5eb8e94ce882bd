#pragma once

#include <optional>
#include <vector>

#include "starlike/roots.hpp"
#include "starlike/special_kernels.hpp"

namespace starlike {

inline constexpr int kMaxTableZeros = 64;

/// First N positive zeros j_{nu,1} < ... < j_{nu,N} of J_nu, plus j_{nu,N+1}
/// which anchors the lower envelope used to bound Mittag-Leffler tails.
class ZeroTable {
 public:
  ZeroTable(Order order, std::vector<double> zeros, double next_zero);

  const Order& order() const { return order_; }
  const std::vector<double>& zeros() const { return zeros_; }
  std::size_t count() const { return zeros_.size(); }
  double first() const { return zeros_.front(); }
  double next_zero() const { return next_zero_; }

  /// Lower bound on every gap j_{nu,n+1} - j_{nu,n} for n > N. Gaps are
  /// monotone in n (increasing to pi when |nu| < 1/2, decreasing to pi
  /// otherwise) so min(pi, last observed gap) is a floor.
  double spacing_floor() const;

  /// Lower bound on j_{nu,n}, 1-based n. Exact for n <= N+1.
  double lower_envelope(int n) const;

 private:
  Order order_;
  std::vector<double> zeros_;
  double next_zero_;
};

ZeroTable bessel_zeros(const Order& order, int n);

class DiniParameter {
 public:
  explicit DiniParameter(double alpha) : alpha_(alpha) {}
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

enum class DiniRegime {
  kRealZeros,      // alpha + nu > 0: all zeros real
  kBoundary,       // alpha + nu == 0: r J' - nu J = -r J_{nu+1}, no zero below j_{nu,1}
  kImaginaryPair,  // -1 < nu < -alpha: one conjugate purely imaginary pair
};

DiniRegime dini_regime(const Order& order, DiniParameter p);

struct DiniZero {
  double root = 0.0;
  Bracket bracket;
  double residual = 0.0;
};

/// r J_nu'(r) + alpha J_nu(r).
double dini_function(const Order& order, DiniParameter p, double r);

/// xi I_nu'(xi) + alpha I_nu(xi): the Dini function at i*xi up to the unit
/// factor i^nu.
double dini_function_imaginary(const Order& order, DiniParameter p, double xi);

/// Smallest positive zero of the Dini function. Requires alpha + nu >= 0;
/// the result lies strictly below j_{nu,1}.
DiniZero dini_smallest_positive_zero(const Order& order, DiniParameter p);

/// xi > 0 such that +-i*xi are the purely imaginary Dini zeros. Requires
/// -1 < nu < -alpha. `scan_limit` caps the search (default: kernel range).
DiniZero dini_imaginary_zero(const Order& order, DiniParameter p,
                             std::optional<double> scan_limit = std::nullopt);

/// Ismail-Muldoon ceiling on xi^2: -(alpha+nu)/(2+alpha+nu) * j_{nu,1}^2.
double imaginary_zero_bound_sq(const Order& order, DiniParameter p, double j_first);

}  // namespace starlike
