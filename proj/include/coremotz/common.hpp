#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace coremotz {

using BigInt = boost::multiprecision::cpp_int;

// Raised when inputs violate an operation's domain (gcd, ranges, core
// preconditions). The CLI maps this to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a closed formula produces a division with nonzero remainder.
// Always a bug, never a rounding event.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

int gcd(int a, int b);

// ceil(num / den) for den > 0.
int ceil_div(int num, int den);
// floor(num / den) for den > 0.
int floor_div(int num, int den);

}  // namespace coremotz
