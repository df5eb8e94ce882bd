#pragma once

#include <stdexcept>
#include <string>

namespace starlike {

/// Argument outside the mathematical domain of an operation (e.g. nu <= -1,
/// beta outside [0,1), nu == 0 for family f).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument beyond the radius the series kernels can certify.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Dini parameter incompatible with the requested zero structure.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at (or numerically indistinguishable from) a zero of J_nu.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Principal logarithm requested on its branch cut.
class BranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// No sign change found where one was required.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace starlike
