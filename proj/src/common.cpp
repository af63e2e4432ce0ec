#include "coremotz/common.hpp"

#include <numeric>

namespace coremotz {

int gcd(int a, int b) { return std::gcd(a, b); }

int floor_div(int num, int den) {
  int q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

int ceil_div(int num, int den) { return -floor_div(-num, den); }

}  // namespace coremotz
