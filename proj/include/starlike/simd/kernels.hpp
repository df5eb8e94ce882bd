#pragma once

// Data-parallel inner loops: Mittag-Leffler pole sums and the half-plane
// inequality slacks. Each kernel has a scalar reference and an AVX2 variant;
// the unqualified entry points pick one at runtime.

#include <complex>
#include <span>

namespace starlike::simd {

using cplx = std::complex<double>;

enum class Isa { kScalar, kAvx2 };

Isa active_isa();
const char* isa_name(Isa isa);

/// Sum_n 1 / (poles[n] - w) for real poles and complex w.
cplx sum_inverse_shift(std::span<const double> poles, cplx w);

/// For each sample z = re[i] + i im[i] with m = |z| < alpha:
///   upper[i] = m/(alpha-m) - Re(z/(alpha-z))   (>= 0)
///   lower[i] = Re(z/(alpha-z)) + m/(alpha+m)   (>= 0)
void halfplane_slacks(double alpha, std::span<const double> re, std::span<const double> im,
                      std::span<double> upper, std::span<double> lower);

namespace scalar {
cplx sum_inverse_shift(std::span<const double> poles, cplx w);
void halfplane_slacks(double alpha, std::span<const double> re, std::span<const double> im,
                      std::span<double> upper, std::span<double> lower);
}  // namespace scalar

namespace avx2 {
/// True when the AVX2 variant was compiled in and the CPU supports it.
bool available();
cplx sum_inverse_shift(std::span<const double> poles, cplx w);
void halfplane_slacks(double alpha, std::span<const double> re, std::span<const double> im,
                      std::span<double> upper, std::span<double> lower);
}  // namespace avx2

}  // namespace starlike::simd
