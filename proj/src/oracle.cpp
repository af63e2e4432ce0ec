#include "coremotz/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <future>

namespace coremotz::oracle {

namespace {

using Mask = std::bitset<kMaxBetaBound>;

// A residue-class search over beta-sets of s-cores. At every depth the
// moduli are checked on the numbers whose membership is already decided
// (residue 0 and the residues fixed so far), which prunes most of the
// (cap+1)^(s-1) space.
class CoreSearch {
 public:
  CoreSearch(std::span<const int> ts, int bound) : s_(ts[0]), bound_(bound), moduli_(ts.begin() + 1, ts.end()) {
    classes_.resize(s_);
    for (int r = 0; r < s_; ++r) {
      for (int x = r; x < bound_; x += s_) classes_[r].set(x);
    }
  }

  std::vector<BetaSet> run_from(int first_count) const {
    std::vector<BetaSet> found;
    Mask beta;
    for (int m = 0; m < first_count; ++m) beta.set(1 + m * s_);
    Mask decided = classes_[0] | classes_[1];
    if (!consistent(beta, decided)) return found;
    search(2, beta, decided, found);
    return found;
  }

  int cap(int residue) const { return residue < bound_ ? (bound_ - 1 - residue) / s_ + 1 : 0; }

 private:
  // No x in beta with x >= t and x - t decided but missing. x = t maps to 0,
  // which is never a bead, so t itself is excluded too.
  bool consistent(const Mask& beta, const Mask& decided) const {
    for (int t : moduli_) {
      if (((beta >> t) & ~beta & decided).any()) return false;
    }
    return true;
  }

  void search(int residue, const Mask& beta, const Mask& decided, std::vector<BetaSet>& found) const {
    if (residue >= s_) {
      std::vector<int> elements;
      for (int x = 1; x < bound_; ++x)
        if (beta.test(x)) elements.push_back(x);
      found.emplace_back(std::move(elements));
      return;
    }
    const Mask next_decided = decided | classes_[residue];
    Mask next = beta;
    for (int count = 0; count <= cap(residue); ++count) {
      if (count > 0) next.set(residue + (count - 1) * s_);
      if (consistent(next, next_decided)) search(residue + 1, next, next_decided, found);
    }
  }

  int s_;
  int bound_;
  std::vector<int> moduli_;
  std::vector<Mask> classes_;
};

bool by_size_then_parts(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.parts() < b.parts();
}

void validate_moduli(std::span<const int> ts) {
  if (ts.empty()) throw DomainError("need at least one core modulus");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] < 1) throw DomainError("core moduli must be positive");
    if (i > 0 && ts[i] <= ts[i - 1]) throw DomainError("core moduli must be strictly ascending");
  }
  if (ts[0] == 1) return;
  if (ts.size() < 2 || gcd(ts[0], ts[1]) != 1) {
    throw DomainError("infinitely many cores: the first two moduli must be coprime");
  }
}

}  // namespace

BetaSet ResidueVector::beta() const {
  std::vector<int> elements;
  for (std::size_t r = 1; r <= counts.size(); ++r) {
    for (int m = 0; m < counts[r - 1]; ++m) elements.push_back(static_cast<int>(r) + m * s);
  }
  return BetaSet(std::move(elements));
}

std::vector<Partition> enumerate_cores(std::span<const int> ts) {
  validate_moduli(ts);
  if (ts[0] == 1) return {Partition{}};
  return enumerate_cores(ts, ts[0] * ts[1]);
}

std::vector<Partition> enumerate_cores(std::span<const int> ts, int beta_bound) {
  validate_moduli(ts);
  if (ts[0] == 1) return {Partition{}};
  if (beta_bound > kMaxBetaBound) {
    throw DomainError("beta bound " + std::to_string(beta_bound) + " exceeds oracle cap " +
                      std::to_string(kMaxBetaBound));
  }
  const CoreSearch search(ts, beta_bound);
  std::vector<Partition> cores;
  std::vector<std::future<std::vector<BetaSet>>> workers;
  for (int first = 0; first <= search.cap(1); ++first) {
    workers.push_back(std::async(std::launch::async, [&search, first] { return search.run_from(first); }));
  }
  for (auto& worker : workers) {
    for (const BetaSet& beta : worker.get()) cores.push_back(partition_from_beta(beta));
  }
  std::sort(cores.begin(), cores.end(), by_size_then_parts);
  return cores;
}

std::vector<Partition> enumerate_sc_cores(std::span<const int> ts) {
  auto cores = enumerate_cores(ts);
  std::erase_if(cores, [](const Partition& lambda) { return !is_self_conjugate(lambda); });
  return cores;
}

PathKind parse_path_kind(const std::string& name) {
  if (name == "motzkin") return PathKind::Motzkin;
  if (name == "dyck") return PathKind::Dyck;
  if (name == "rational_motzkin") return PathKind::RationalMotzkin;
  if (name == "free") return PathKind::FreeRationalMotzkin;
  if (name == "gen_dyck") return PathKind::GenDyck;
  if (name == "symmetric_motzkin") return PathKind::SymmetricMotzkin;
  if (name == "symmetric_dyck") return PathKind::SymmetricDyck;
  if (name == "symmetric_gen_dyck") return PathKind::SymmetricGenDyck;
  throw DomainError("unknown path kind '" + name + "'");
}

namespace {

// Words over U/F/D (or U/D) of fixed length with a running-height floor
// given as a predicate on (x, height), then an end-height requirement.
template <typename Floor>
std::vector<std::string> words(int length, const std::string& alphabet, int end_height, Floor floor_ok) {
  if (length > kMaxPathLength) {
    throw DomainError("path length " + std::to_string(length) + " exceeds oracle cap " +
                      std::to_string(kMaxPathLength));
  }
  std::vector<std::string> out;
  std::string word;
  auto extend = [&](auto&& self, int height) -> void {
    const int x = static_cast<int>(word.size());
    if (x == length) {
      if (height == end_height) out.push_back(word);
      return;
    }
    for (char c : alphabet) {
      const int next = height + (c == 'U' ? 1 : c == 'D' ? -1 : 0);
      if (std::abs(next - end_height) > length - x - 1) continue;
      if (!floor_ok(x + 1, next)) continue;
      word.push_back(c);
      self(self, next);
      word.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

bool mirror_symmetric(const std::string& word) {
  const std::size_t n = word.size();
  for (std::size_t i = 0; i < n; ++i) {
    char m = word[n - 1 - i];
    m = m == 'U' ? 'D' : m == 'D' ? 'U' : m;
    if (word[i] != m) return false;
  }
  return true;
}

std::vector<std::string> gen_dyck_words(int s, int p) {
  if (s > kMaxPathLength) throw DomainError("generalized Dyck size exceeds oracle cap");
  if (p < 2) throw DomainError("generalized Dyck paths need p >= 2");
  std::vector<std::string> out;
  std::vector<std::string> tokens;
  auto extend = [&](auto&& self, int x, int y) -> void {
    if (x == s && y == s) {
      std::string joined;
      for (std::size_t i = 0; i < tokens.size(); ++i) joined += (i ? " " : "") + tokens[i];
      out.push_back(joined);
      return;
    }
    auto attempt = [&](const std::string& token, int dx, int dy) {
      if (x + dx > s || y + dy > s || y + dy < x + dx) return;
      tokens.push_back(token);
      self(self, x + dx, y + dy);
      tokens.pop_back();
    };
    attempt("U" + std::to_string(p), 0, p);
    for (int i = 1; i < p; ++i) attempt("F" + std::to_string(i), i, i);
    attempt("D" + std::to_string(p), p, 0);
  };
  extend(extend, 0, 0);
  return out;
}

bool gen_dyck_symmetric(const std::string& serialized) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start < serialized.size()) {
    auto space = serialized.find(' ', start);
    if (space == std::string::npos) space = serialized.size();
    tokens.push_back(serialized.substr(start, space - start));
    start = space + 1;
  }
  const std::size_t n = tokens.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::string m = tokens[n - 1 - i];
    if (m[0] == 'U') {
      m[0] = 'D';
    } else if (m[0] == 'D') {
      m[0] = 'U';
    }
    if (tokens[i] != m) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> enumerate_paths_exhaustive(const PathQuery& query) {
  const int n = query.n;
  if (n < 0) throw DomainError("path size must be nonnegative");
  auto nonnegative = [](int, int height) { return height >= 0; };
  switch (query.kind) {
    case PathKind::Motzkin:
      return words(n, "UFD", 0, nonnegative);
    case PathKind::Dyck:
      return words(2 * n, "UD", 0, nonnegative);
    case PathKind::SymmetricMotzkin: {
      auto all = words(n, "UFD", 0, nonnegative);
      std::erase_if(all, [](const std::string& w) { return !mirror_symmetric(w); });
      return all;
    }
    case PathKind::SymmetricDyck: {
      auto all = words(2 * n, "UD", 0, nonnegative);
      std::erase_if(all, [](const std::string& w) { return !mirror_symmetric(w); });
      return all;
    }
    case PathKind::RationalMotzkin:
    case PathKind::FreeRationalMotzkin: {
      const int s = n;
      const int d = query.d;
      if (s < 1 || d < 1) throw DomainError("rational Motzkin paths need s, d >= 1");
      if (query.kind == PathKind::FreeRationalMotzkin) {
        return words(s + d, "UFD", -d, [](int, int) { return true; });
      }
      // weakly above y = -d x / (s+d)
      return words(s + d, "UFD", -d, [s, d](int x, int height) { return (s + d) * height + d * x >= 0; });
    }
    case PathKind::GenDyck:
      return gen_dyck_words(n, query.p);
    case PathKind::SymmetricGenDyck: {
      auto all = gen_dyck_words(n, query.p);
      std::erase_if(all, [](const std::string& w) { return !gen_dyck_symmetric(w); });
      return all;
    }
  }
  return {};
}

}  // namespace coremotz::oracle
