#pragma once

#include <string_view>

#include "starlike/special_kernels.hpp"
#include "starlike/zero_finder.hpp"

namespace starlike {

/// f_nu = [2^nu Gamma(nu+1) J_nu(z)]^{1/nu}, g_nu = 2^nu Gamma(nu+1) z^{1-nu} J_nu(z),
/// h_nu = 2^nu Gamma(nu+1) z^{1-nu/2} J_nu(sqrt z), lambda_nu = h_nu(z) / z.
enum class FamilyKind { kF, kG, kH, kLambda };

const char* family_name(FamilyKind kind);
FamilyKind parse_family(std::string_view name);

class Family {
 public:
  /// Throws DomainError for kind F with nu == 0.
  Family(FamilyKind kind, Order order);
  FamilyKind kind() const { return kind_; }
  const Order& order() const { return order_; }
  double nu() const { return order_.nu(); }

 private:
  FamilyKind kind_;
  Order order_;
};

enum class Route { kDirect, kMittagLeffler };

/// Value of the star function zF'(z)/F(z).
///
/// For the direct route `tail_bound` carries the propagated kernel error;
/// for the Mittag-Leffler route it bounds the neglected sum over zeros
/// beyond the table plus rounding in the partial sum.
struct StarValue {
  cplx value{};
  Route route = Route::kDirect;
  double tail_bound = 0.0;
};

cplx eval(const Family& family, cplx z);

/// zF'/F from J_nu and J_nu' at z (F, G) or sqrt z (H, lambda).
StarValue star_direct(const Family& family, cplx z);

/// zF'/F as 1 - c * sum over the table's zeros. Requires |z| < j_{nu,1}
/// for F and G, |z| < j_{nu,1}^2 for H and lambda.
StarValue star_mittag_leffler(const Family& family, cplx z, const ZeroTable& table);

/// Bound on sum_{n>N} 2|z|^2 / (j_{nu,n}^2 - |z|^2) using the table's lower envelope.
double mittag_leffler_tail(const ZeroTable& table, double abs_z);

/// Both sides of J_{nu+1}(z)/J_nu(z) = sum_n 2z/(j_{nu,n}^2 - z^2).
struct RatioExpansion {
  cplx direct{};
  cplx partial_sum{};
  double tail_bound = 0.0;
};
RatioExpansion bessel_ratio_expansion(const ZeroTable& table, cplx z);

/// |(lambda_nu(z+h) - lambda_nu(z-h))/(2h) + lambda_{nu+1}(z)/(4(nu+1))|.
double lambda_derivative_check(const Order& order, cplx z, double step = 1e-4);

}  // namespace starlike
