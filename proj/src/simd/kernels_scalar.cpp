#include <cmath>

#include "starlike/simd/kernels.hpp"

namespace starlike::simd::scalar {

cplx sum_inverse_shift(std::span<const double> poles, cplx w) {
  const double x = w.real();
  const double y = w.imag();
  const double y2 = y * y;
  double re = 0.0;
  double im = 0.0;
  for (double a : poles) {
    const double dr = a - x;
    const double d = dr * dr + y2;
    re += dr / d;
    im += y / d;
  }
  return {re, im};
}

void halfplane_slacks(double alpha, std::span<const double> re, std::span<const double> im,
                      std::span<double> upper, std::span<double> lower) {
  for (std::size_t i = 0; i < re.size(); ++i) {
    const double x = re[i];
    const double y = im[i];
    const double m = std::sqrt(x * x + y * y);
    const double dr = alpha - x;
    const double d = dr * dr + y * y;
    const double ratio = (x * dr - y * y) / d;
    upper[i] = m / (alpha - m) - ratio;
    lower[i] = ratio + m / (alpha + m);
  }
}

}  // namespace starlike::simd::scalar
