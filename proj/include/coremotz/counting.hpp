#pragma once

#include "coremotz/common.hpp"

#include <map>
#include <string>

namespace coremotz {

// Exact integer arithmetic only. binomial(n, k) = 0 for n < 0, k < 0 or k > n.
BigInt binomial(long n, long k);
// n! / (a! b! c!) when a + b + c = n and all entries are nonnegative, else 0.
BigInt multinomial(long n, long a, long b, long c);
// Throws ExactnessError on a nonzero remainder.
BigInt exact_div(const BigInt& numerator, const BigInt& denominator);

BigInt catalan(long k);

// Number of (s,t)-cores: C(s+t, s) / (s+t).
BigInt count_anderson(int s, int t);
// Number of (s, s+d, s+2d)-cores.
BigInt count_wang(int s, int d);
// Number of (s, s+d, s+2d, s+3d)-cores.
BigInt count_bny(int s, int d);

// Upper limit of the l-sum in the restricted-path formulas:
// min(k-1, floor((s-2k)/(p-2))) for p >= 3 and k-1 for p = 2.
long pattern_sum_limit(int s, int k, int p);

// Number of (s, s+d, ..., s+pd)-cores, p >= 2.
BigInt count_main(int s, int d, int p);
// Rational Motzkin paths of type (s+d, -d) with k up steps avoiding
// U F^i U (i <= p-3). p >= 3, k >= 1; zero when 2k > s.
BigInt count_mainprop(int s, int d, int p, int k);
// Rational Motzkin paths of type (s+d, -d) with k up steps.
BigInt count_freemotz(int s, int d, int k);
// Number of (s, s+1, ..., s+p)-cores via Narayana numbers.
BigInt count_corone(int s, int p);
// N(k, m) = C(k,m) C(k,m-1) / k for 1 <= m <= k, else 0.
BigInt narayana(long k, long m);
// (s, s+1, ..., s+p)-cores with k corners; k = 0 gives 1 (the empty partition).
BigInt count_corners(int s, int p, int k);
// (s, s+1)-cores with k corners: N(s, k+1); (s, 0) gives 1.
BigInt count_corners_two(int s, int k);
// Self-conjugate (s,t)-cores.
BigInt count_sc_fms(int s, int t);
// Symmetric Dyck paths of order k with l UU factors, 0 <= l < k; else 0.
BigInt count_sym_dyck(long k, long l);
// Self-conjugate (s, s+1, ..., s+p)-cores.
BigInt count_sc_main(int s, int p);

enum class Formula {
  Anderson,
  Wang,
  Bny,
  Main,
  MainProp,
  FreeMotz,
  CorOne,
  Corners,
  CornersTwo,
  SelfConjugateFms,
  SymDyck,
  SelfConjugateMain,
  GenDyckRecurrence,
  Enumeration,
};

std::string to_string(Formula formula);

struct CountResult {
  BigInt value;
  std::map<std::string, long> parameters;
  Formula formula = Formula::Main;
};

}  // namespace coremotz
