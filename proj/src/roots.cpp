#include "starlike/roots.hpp"

#include <cmath>

#include "starlike/errors.hpp"

namespace starlike {

namespace {
bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }
}  // namespace

RootResult bisect(const RealFn& f, double lo, double hi, double rel_tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0 || fhi == 0.0) {
    // Exact hits are widened to a proper bracket so lo < root < hi holds.
    const double r = flo == 0.0 ? lo : hi;
    const double w = std::max(std::abs(r) * rel_tol, 1e-300);
    return {r, {r - w, r + w}, 0};
  }
  if (!opposite(flo, fhi)) throw BracketError("no sign change on the bracket");

  int it = 0;
  for (; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= rel_tol * std::abs(mid) || mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) {
      const double w = 0.25 * (hi - lo);
      return {mid, {mid - w, mid + w}, it + 1};
    }
    if (opposite(flo, fm)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  double root = 0.5 * (lo + hi);
  const double secant = lo - flo * (hi - lo) / (fhi - flo);
  if (std::isfinite(secant) && secant > lo && secant < hi) root = secant;
  return {root, {lo, hi}, it};
}

std::optional<Bracket> scan_sign_change(const RealFn& f, double from, double to, double step) {
  double x = from;
  double fx = f(x);
  while (x < to) {
    const double next = std::min(x + step, to);
    const double fn = f(next);
    if (fx == 0.0 || fn == 0.0 || opposite(fx, fn)) return Bracket{x, next};
    x = next;
    fx = fn;
  }
  return std::nullopt;
}

}  // namespace starlike
