#pragma once

#include "coremotz/partition.hpp"

#include <span>
#include <string>
#include <vector>

// Brute-force ground truth. Nothing here depends on the bijections or on the
// closed formulas.
namespace coremotz::oracle {

// Largest beta element the residue enumeration supports (exclusive).
inline constexpr int kMaxBetaBound = 512;

// c_r = number of beta elements congruent to r mod s, for r = 1..s-1.
// Encodes beta = union_r {r, r+s, ..., r+(c_r-1)s}, always an s-core.
struct ResidueVector {
  int s = 1;
  std::vector<int> counts;

  BetaSet beta() const;
};

// All partitions that are t-cores for every t in ts, sorted by (size, parts).
// ts must be ascending; ts[0] = 1 gives only the empty partition, otherwise
// gcd(ts[0], ts[1]) = 1 is required so the set is finite. Beta elements are
// bounded by ts[0] * ts[1].
std::vector<Partition> enumerate_cores(std::span<const int> ts);
// Same with an explicit beta-element bound (exclusive), for saturation checks.
std::vector<Partition> enumerate_cores(std::span<const int> ts, int beta_bound);

std::vector<Partition> enumerate_sc_cores(std::span<const int> ts);

enum class PathKind {
  Motzkin,               // length n
  Dyck,                  // order n (length 2n)
  RationalMotzkin,       // type (s+d, -d): n = s, d
  FreeRationalMotzkin,   // type (s+d, -d), line constraint dropped
  GenDyck,               // (s,p): n = s, p
  SymmetricMotzkin,      // length n
  SymmetricDyck,         // order n
  SymmetricGenDyck,      // (s,p)
};

PathKind parse_path_kind(const std::string& name);

struct PathQuery {
  PathKind kind = PathKind::Motzkin;
  int n = 0;
  int d = 0;
  int p = 2;
};

// Largest word length generated before DomainError("cap exceeded").
inline constexpr int kMaxPathLength = 26;

// Depth-first generation over the raw step alphabet with per-prefix
// constraints. Words use the U/F/D serialization; generalized Dyck paths use
// space-separated tokens `U4 F1 D4`.
std::vector<std::string> enumerate_paths_exhaustive(const PathQuery& query);

}  // namespace coremotz::oracle
