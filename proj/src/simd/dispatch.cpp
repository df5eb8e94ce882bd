#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "starlike/simd/kernels.hpp"

namespace starlike::simd {

namespace {
Isa detect() {
  // STARLIKE_ISA=scalar pins the reference kernels (useful for bisecting
  // discrepancies between variants).
  if (const char* env = std::getenv("STARLIKE_ISA"); env && std::string_view(env) == "scalar") {
    return Isa::kScalar;
  }
  return avx2::available() ? Isa::kAvx2 : Isa::kScalar;
}

void check_sizes(std::span<const double> re, std::span<const double> im, std::span<double> upper,
                 std::span<double> lower) {
  if (im.size() != re.size() || upper.size() != re.size() || lower.size() != re.size()) {
    throw std::invalid_argument("halfplane_slacks: span sizes differ");
  }
}
}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

cplx sum_inverse_shift(std::span<const double> poles, cplx w) {
  return active_isa() == Isa::kAvx2 ? avx2::sum_inverse_shift(poles, w)
                                    : scalar::sum_inverse_shift(poles, w);
}

void halfplane_slacks(double alpha, std::span<const double> re, std::span<const double> im,
                      std::span<double> upper, std::span<double> lower) {
  check_sizes(re, im, upper, lower);
  if (active_isa() == Isa::kAvx2) {
    avx2::halfplane_slacks(alpha, re, im, upper, lower);
  } else {
    scalar::halfplane_slacks(alpha, re, im, upper, lower);
  }
}

}  // namespace starlike::simd
