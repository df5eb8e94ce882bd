#pragma once

#include <functional>
#include <optional>

namespace starlike {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct RootResult {
  double root = 0.0;
  Bracket bracket;
  int iterations = 0;
};

using RealFn = std::function<double(double)>;

/// Bisection on a sign-changing bracket until hi - lo <= rel_tol * |root|,
/// followed by one secant step kept only if it stays strictly inside.
/// Throws BracketError if f(lo) and f(hi) have the same strict sign.
RootResult bisect(const RealFn& f, double lo, double hi, double rel_tol = 1e-13);

/// First interval [x, x + step] within [from, to] on which f changes sign
/// (a sample that is exactly zero closes the interval).
std::optional<Bracket> scan_sign_change(const RealFn& f, double from, double to, double step);

}  // namespace starlike
