#pragma once

#include "coremotz/common.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace coremotz {

// Declaration order is the enumeration order: U < F < D.
enum class Step : char { U, F, D };

char to_char(Step step);

// Word over {U, F, D}; serialized as concatenated letters, e.g. `UFUDDDDD`.
class StepWord {
 public:
  StepWord() = default;
  explicit StepWord(std::vector<Step> steps) : steps_(std::move(steps)) {}
  static StepWord parse(std::string_view text);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }
  int count(Step step) const;
  // Final height (#U - #D).
  int height() const;

  std::string to_string() const;

  friend bool operator==(const StepWord&, const StepWord&) = default;
  friend auto operator<=>(const StepWord&, const StepWord&) = default;

 private:
  std::vector<Step> steps_;
};

// One step of an (s,p)-generalized Dyck path: U_p = (0,p), F_i = (i,i),
// D_p = (p,0). Ordering: U_p < F_1 < ... < F_{p-1} < D_p.
struct GenStep {
  enum class Kind : char { Up, Flat, Down };
  Kind kind = Kind::Flat;
  int size = 1;  // p for Up/Down, i for Flat

  int dx() const { return kind == Kind::Up ? 0 : size; }
  int dy() const { return kind == Kind::Down ? 0 : size; }
  std::string to_string() const;

  friend bool operator==(const GenStep&, const GenStep&) = default;
  friend auto operator<=>(const GenStep&, const GenStep&) = default;
};

// Path (0,0) -> (s,s) weakly above y = x over {U_p, F_1..F_{p-1}, D_p}.
class GenDyckPath {
 public:
  // Throws DomainError if a step is not allowed for p or the path is not a
  // valid generalized Dyck path.
  GenDyckPath(std::vector<GenStep> steps, int p);
  // Parses `U4 F1 F2 D4`; the empty string is the empty path.
  static GenDyckPath parse(std::string_view text, int p);

  const std::vector<GenStep>& steps() const { return steps_; }
  int s() const { return s_; }
  int p() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const GenDyckPath&, const GenDyckPath&) = default;
  friend auto operator<=>(const GenDyckPath&, const GenDyckPath&) = default;

 private:
  std::vector<GenStep> steps_;
  int s_ = 0;
  int p_ = 2;
};

// (s+d)*height + d*x after each prefix; s+d+1 entries.
// Throws DomainError unless |P| = s+d.
std::vector<int> label_vector(const StepWord& path, int s, int d);

// Length s+d and final height -d.
bool is_free_rational(const StepWord& path, int s, int d);

// Rational Motzkin path of type (s+d, -d): min(label_vector) >= 0.
// Throws DomainError unless the path is a free rational path of that type.
bool is_rational(const StepWord& path, int s, int d);

// Motzkin path: final height 0 and no prefix below the x-axis.
bool is_motzkin(const StepWord& path);

// True iff some factor U F^i U with 0 <= i <= p-3 occurs; with `cyclic` the
// factor may wrap around the end of the word.
bool has_forbidden_pattern(const StepWord& path, int p, bool cyclic);

// sigma^j: P_{j+1} ... P_n P_1 ... P_j. Throws DomainError unless 0 <= j < |P|.
StepWord cyclic_shift(const StepWord& path, int j);

struct CanonicalShift {
  int shift = 0;
  StepWord path;
};

// The unique rotation of a free rational path that is rational.
CanonicalShift canonicalize(const StepWord& path, int s, int d);

// Rational Motzkin paths of type (s+d, -d) avoiding U F^i U for i <= p-3,
// lexicographic with U < F < D.
std::vector<StepWord> enumerate_rational_motzkin(int s, int d, int p);

// All (s,p)-generalized Dyck paths, lexicographic on step tokens.
std::vector<GenDyckPath> enumerate_gen_dyck(int s, int p);

// Reverse and swap U <-> D gives back P. Throws unless P is a Motzkin path.
bool is_symmetric_motzkin(const StepWord& path);

// Reverse and swap U_p <-> D_p gives back Q (reflection in the anti-diagonal).
bool is_symmetric_gen_dyck(const GenDyckPath& path);

// C_s^{(p)} = sum_{k=1}^{s} C_{k-p} C_{s-k}, C_s = 1 for s <= 0.
BigInt gen_dyck_count_recurrence(int s, int p);

// SVG of a lattice path with the line y = -d x / (s+d) as a dashed guide.
std::string render_path_svg(const StepWord& path, int s, int d);

}  // namespace coremotz
