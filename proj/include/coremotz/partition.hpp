#pragma once

#include "coremotz/common.hpp"

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coremotz {

// An integer partition: non-increasing positive parts. The empty partition is
// a valid value.
class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  // Parses the bracketed form `[5,4,2,1]`; `[]` is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  int operator[](std::size_t i) const { return parts_[i]; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Finite set of distinct positive integers, stored in decreasing order.
class BetaSet {
 public:
  BetaSet() = default;
  // Accepts any order; throws DomainError on duplicates or nonpositive values.
  explicit BetaSet(std::vector<int> elements);
  BetaSet(std::initializer_list<int> elements);

  const std::vector<int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(int x) const;
  int max() const { return elements_.empty() ? 0 : elements_.front(); }

  std::string to_string() const;

  friend bool operator==(const BetaSet&, const BetaSet&) = default;

 private:
  std::vector<int> elements_;
};

// Parameters of the arithmetic progression s, s+d, ..., s+pd of moduli.
struct CoreFamily {
  int s = 1;
  int d = 1;
  int p = 1;

  // Throws DomainError unless s, d, p >= 1 and gcd(s, d) = 1.
  static CoreFamily make(int s, int d, int p);
  // Parses `s,d,p`.
  static CoreFamily parse(std::string_view text);

  std::vector<int> moduli() const;
  std::string to_string() const;

  friend bool operator==(const CoreFamily&, const CoreFamily&) = default;
};

using HookMatrix = std::vector<std::vector<int>>;

HookMatrix hook_lengths(const Partition& lambda);
Partition conjugate(const Partition& lambda);
BetaSet beta_set(const Partition& lambda);
Partition partition_from_beta(const BetaSet& beta);

// Beta-set criterion: t is not a first-column hook and every x in beta with
// x > t has x - t in beta.
bool is_t_core(const Partition& lambda, int t);
// Scans every hook length of the diagram.
bool is_t_core_by_hooks(const Partition& lambda, int t);
bool is_simultaneous_core(const Partition& lambda, std::span<const int> ts);

int corner_count(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);

}  // namespace coremotz
