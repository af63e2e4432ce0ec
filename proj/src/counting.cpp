#include "coremotz/counting.hpp"

#include <algorithm>

namespace coremotz {

namespace {

void require_coprime(int s, int t, const char* what) {
  if (s < 1 || t < 1 || gcd(s, t) != 1) {
    throw DomainError(std::string(what) + " needs positive coprime arguments, got " + std::to_string(s) + ", " +
                      std::to_string(t));
  }
}

void require_p(int p) {
  if (p < 2) throw DomainError("formula needs p >= 2, got " + std::to_string(p));
}

}  // namespace

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i)
  }
  return result;
}

BigInt multinomial(long n, long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c != n) return 0;
  return binomial(n, a) * binomial(n - a, b);
}

BigInt exact_div(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw ExactnessError("division by zero in closed formula");
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw ExactnessError("inexact division " + numerator.str() + " / " + denominator.str());
  }
  return quotient;
}

BigInt catalan(long k) { return k < 0 ? BigInt(0) : exact_div(binomial(2 * k, k), k + 1); }

BigInt count_anderson(int s, int t) {
  require_coprime(s, t, "count_anderson");
  return exact_div(binomial(s + t, s), s + t);
}

BigInt count_wang(int s, int d) {
  require_coprime(s, d, "count_wang");
  BigInt total = 0;
  for (int k = 0; k <= s / 2; ++k) total += multinomial(s + d, k, k + d, s - 2 * k);
  return exact_div(total, s + d);
}

BigInt count_bny(int s, int d) {
  require_coprime(s, d, "count_bny");
  BigInt total = 0;
  for (int k = 0; k <= s / 2; ++k) {
    total += (binomial(s + d - k, k) + binomial(s + d - k - 1, k - 1)) * binomial(s + d - k, s - 2 * k);
  }
  return exact_div(total, s + d);
}

long pattern_sum_limit(int s, int k, int p) {
  require_p(p);
  if (p == 2) return k - 1;
  return std::min<long>(k - 1, floor_div(s - 2 * k, p - 2));
}

namespace {

// Sum over l of C(k+d, k-l) C(k-1, l) C(s+d-l(p-2)-1, 2k+d-1): the number of
// restricted free paths starting with D, before dividing by k+d.
BigInt restricted_rotations(int s, int d, int p, int k) {
  BigInt total = 0;
  const long limit = pattern_sum_limit(s, k, p);
  for (long l = 0; l <= limit; ++l) {
    total += binomial(k + d, k - l) * binomial(k - 1, l) * binomial(s + d - l * (p - 2) - 1, 2 * k + d - 1);
  }
  return total;
}

}  // namespace

BigInt count_main(int s, int d, int p) {
  require_coprime(s, d, "count_main");
  require_p(p);
  BigInt total = exact_div(binomial(s + d, d), s + d);
  for (int k = 1; k <= s / 2; ++k) total += exact_div(restricted_rotations(s, d, p, k), k + d);
  return total;
}

BigInt count_mainprop(int s, int d, int p, int k) {
  require_coprime(s, d, "count_mainprop");
  if (p < 3) throw DomainError("count_mainprop needs p >= 3");
  if (k < 1) throw DomainError("count_mainprop needs k >= 1");
  return exact_div(restricted_rotations(s, d, p, k), k + d);
}

BigInt count_freemotz(int s, int d, int k) {
  require_coprime(s, d, "count_freemotz");
  if (k < 0) throw DomainError("count_freemotz needs k >= 0");
  return exact_div(multinomial(s + d, k, k + d, s - 2 * k), s + d);
}

BigInt narayana(long k, long m) {
  if (k < 1 || m < 1 || m > k) return 0;
  return exact_div(binomial(k, m) * binomial(k, m - 1), k);
}

BigInt count_corners(int s, int p, int k) {
  require_p(p);
  if (s < 0 || k < 0) throw DomainError("count_corners needs s, k >= 0");
  if (k == 0) return 1;
  BigInt total = 0;
  const long limit = pattern_sum_limit(s, k, p);
  for (long l = 0; l <= limit; ++l) total += narayana(k, l + 1) * binomial(s - l * (p - 2), 2 * k);
  return total;
}

BigInt count_corone(int s, int p) {
  require_p(p);
  if (s < 0) throw DomainError("count_corone needs s >= 0");
  BigInt total = 1;
  for (int k = 1; k <= s / 2; ++k) total += count_corners(s, p, k);
  return total;
}

BigInt count_corners_two(int s, int k) {
  if (k == 0) return 1;
  return narayana(s, k + 1);
}

BigInt count_sc_fms(int s, int t) {
  require_coprime(s, t, "count_sc_fms");
  return binomial(s / 2 + t / 2, s / 2);
}

BigInt count_sym_dyck(long k, long l) {
  if (l < 0 || l >= k) return 0;
  return binomial((k - 1) / 2, l / 2) * binomial(k / 2, (l + 1) / 2);
}

BigInt count_sc_main(int s, int p) {
  require_p(p);
  if (s < 0) throw DomainError("count_sc_main needs s >= 0");
  BigInt total = 1;
  for (int k = 1; k <= s / 2; ++k) {
    const long limit = pattern_sum_limit(s, k, p);
    for (long l = 0; l <= limit; ++l) {
      const long reduced = s - l * (p - 2);
      if (reduced < 0) continue;
      total += count_sym_dyck(k, l) * binomial(reduced / 2, k);
    }
  }
  return total;
}

std::string to_string(Formula formula) {
  switch (formula) {
    case Formula::Anderson: return "anderson";
    case Formula::Wang: return "wang";
    case Formula::Bny: return "bny";
    case Formula::Main: return "main";
    case Formula::MainProp: return "mainprop";
    case Formula::FreeMotz: return "freemotz";
    case Formula::CorOne: return "corone";
    case Formula::Corners: return "corners";
    case Formula::CornersTwo: return "corners_two";
    case Formula::SelfConjugateFms: return "sc_fms";
    case Formula::SymDyck: return "sym_dyck";
    case Formula::SelfConjugateMain: return "sc_main";
    case Formula::GenDyckRecurrence: return "gen_dyck_recurrence";
    case Formula::Enumeration: return "enumeration";
  }
  return "unknown";
}

}  // namespace coremotz
