// Acceptance suite: one line per criterion, exact integer equality throughout.

#include "coremotz/abacus.hpp"
#include "coremotz/bijections.hpp"
#include "coremotz/counting.hpp"
#include "coremotz/oracle.hpp"
#include "coremotz/partition.hpp"
#include "coremotz/paths.hpp"
#include "support/independent.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace coremotz;

namespace {

// Collects the first few failures of a criterion.
class Report {
 public:
  template <typename A, typename B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    ++checks_;
    if (actual == expected) return;
    std::ostringstream msg;
    msg << what << ": got " << actual << ", expected " << expected;
    fail(msg.str());
  }
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  long checks() const { return checks_; }
  long failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
};

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::ostream& operator<<(std::ostream& os, const std::vector<int>& xs) { return os << "(" << join(xs) << ")"; }

template <typename Fn>
void each_core_family(Fn&& fn) {
  for (int s = 1; s <= 7; ++s)
    for (int d = 1; d <= 4; ++d) {
      if (gcd(s, d) != 1) continue;
      for (int p = 2; p <= 4; ++p) fn(CoreFamily::make(s, d, p));
    }
}

void criterion_worked_instance(Report& r) {
  r.equal(count_main(3, 2, 2), 6, "count_main(3,2,2)");
  const auto cores = oracle::enumerate_cores(std::vector<int>{3, 5, 7});
  const std::set<Partition> got(cores.begin(), cores.end());
  const std::set<Partition> want{Partition{}, Partition{1}, Partition{1, 1}, Partition{2}, Partition{2, 1, 1},
                                 Partition{3, 1}};
  r.require(got == want && cores.size() == 6, "enumerate_cores([3,5,7]) is {0,(1),(1,1),(2),(2,1,1),(3,1)}");
}

void criterion_five_two_paths(Report& r) {
  const auto paths = enumerate_rational_motzkin(3, 2, 2);
  std::vector<std::string> words;
  for (const auto& w : paths) words.push_back(w.to_string());
  const std::set<std::string> want{"FFDFD", "FFFDD", "UDFDD", "UDDFD", "UFDDD", "FUDDD"};
  r.require(std::set<std::string>(words.begin(), words.end()) == want && words.size() == 6, "six words of type (5,-2)");
  r.require(std::is_sorted(paths.begin(), paths.end()), "lexicographic order with U < F < D");
}

void criterion_golden_mappings(Report& r) {
  r.equal(core_to_path(Partition{9, 5, 3, 2, 2, 1, 1, 1, 1}, CoreFamily::make(5, 3, 3)).to_string(),
          std::string("UFUDDDDD"), "core_to_path((9,5,3,2,2,1,1,1,1),(5,3,3))");
  r.equal(boundary_profile(Partition{6, 4, 3, 1, 1, 1, 1}, 5, 3).values, std::vector<int>{0, 1, 0, 1, 1, 0, -1, -2, -3},
          "boundary_profile((6,4,3,1,1,1,1),5,3)");
  const auto word = StepWord::parse("DDFUD");
  const auto canonical = canonicalize(word, 3, 2);
  r.equal(canonical.shift, 2, "canonicalize(DDFUD) shift");
  r.equal(canonical.path.to_string(), std::string("FUDDD"), "canonicalize(DDFUD) path");
  r.equal(label_vector(word, 3, 2), std::vector<int>{0, -3, -6, -4, 3, 0}, "label_vector(DDFUD)");
  r.equal(phi(StepWord::parse("UFFUFFFUDDUFDUFFDD"), 4).to_string(), std::string("U4 U4 F1 F2 D4 F3 U4 D4 D4"),
          "phi(UFFUFFFUDDUFDUFFDD, 4)");
}

void criterion_cycle_lemma(Report& r) {
  for (int n = 2; n <= 10; ++n) {
    for (int d = 1; d < n; ++d) {
      const int s = n - d;
      if (gcd(s, d) != 1) continue;
      for (const auto& text : oracle::enumerate_paths_exhaustive({oracle::PathKind::FreeRationalMotzkin, s, d, 2})) {
        const auto word = StepWord::parse(text);
        int rational = 0;
        for (int j = 0; j < n; ++j) rational += is_rational(cyclic_shift(word, j), s, d);
        r.equal(rational, 1, "rational rotations of " + text);
      }
    }
  }
}

void criterion_formula_vs_oracle(Report& r) {
  each_core_family([&](const CoreFamily& f) {
    const auto moduli = f.moduli();
    r.equal(count_main(f.s, f.d, f.p), oracle::enumerate_cores(moduli).size(), "count_main vs oracle " + f.to_string());
  });
  for (int t = 2; t <= 9; ++t)
    for (int s = 1; s < t; ++s) {
      if (gcd(s, t) != 1) continue;
      r.equal(count_anderson(s, t), oracle::enumerate_cores(std::vector<int>{s, t}).size(),
              "count_anderson(" + std::to_string(s) + "," + std::to_string(t) + ")");
    }
}

void criterion_cross_formula(Report& r) {
  each_core_family([&](const CoreFamily& f) {
    if (f.p == 2) r.equal(count_main(f.s, f.d, 2), count_wang(f.s, f.d), "main=wang " + f.to_string());
    if (f.p == 3) r.equal(count_main(f.s, f.d, 3), count_bny(f.s, f.d), "main=bny " + f.to_string());
  });
  for (int s = 1; s <= 12; ++s)
    for (int p = 2; p <= 6; ++p) {
      const std::string at = "(" + std::to_string(s) + "," + std::to_string(p) + ")";
      r.equal(count_main(s, 1, p), count_corone(s, p), "main=corone " + at);
      r.equal(count_corone(s, p), gen_dyck_count_recurrence(s, p), "corone=recurrence " + at);
    }
  const std::vector<std::int64_t> motzkin{1, 1, 2, 4, 9, 21, 51, 127, 323};
  const auto independent = testing::motzkin_by_recurrence(8);
  for (int s = 0; s <= 8; ++s) {
    r.equal(independent[s], motzkin[s], "Motzkin recurrence M_" + std::to_string(s));
    r.equal(gen_dyck_count_recurrence(s, 2), motzkin[s], "C_s^(2) for s=" + std::to_string(s));
    r.equal(count_corone(s, 2), motzkin[s], "corone(s,2) for s=" + std::to_string(s));
    if (s >= 1) r.equal(count_main(s, 1, 2), motzkin[s], "main(s,1,2) for s=" + std::to_string(s));
  }
}

void criterion_round_trips(Report& r) {
  each_core_family([&](const CoreFamily& f) {
    const auto moduli = f.moduli();
    for (const auto& lambda : oracle::enumerate_cores(moduli)) {
      r.require(path_to_core(core_to_path(lambda, f), f) == lambda, "core round trip " + lambda.to_string());
    }
    for (const auto& path : enumerate_rational_motzkin(f.s, f.d, f.p)) {
      r.require(core_to_path(path_to_core(path, f), f) == path, "path round trip " + path.to_string());
    }
  });
  for (int p = 2; p <= 5; ++p)
    for (int s = 0; s <= 10; ++s) {
      std::set<GenDyckPath> image;
      for (const auto& text : oracle::enumerate_paths_exhaustive({oracle::PathKind::Motzkin, s, 0, p})) {
        const auto word = StepWord::parse(text);
        if (has_forbidden_pattern(word, p, false)) continue;
        const auto q = phi(word, p);
        r.require(phi_inverse(q) == word, "phi round trip " + text);
        image.insert(q);
      }
      for (const auto& q : enumerate_gen_dyck(s, p)) r.require(phi(phi_inverse(q), p) == q, "phi^-1 round trip");
      r.equal(BigInt(image.size()), gen_dyck_count_recurrence(s, p),
              "|phi image| (" + std::to_string(s) + "," + std::to_string(p) + ")");
    }
}

void criterion_corners(Report& r) {
  const auto catalan = testing::catalan_by_recurrence(10);
  for (int s = 1; s <= 12; ++s)
    for (int p = 2; p <= 6; ++p) {
      BigInt total = 1;
      for (int k = 1; 2 * k <= s; ++k) total += count_corners(s, p, k);
      r.equal(total, count_corone(s, p), "corner split (" + std::to_string(s) + "," + std::to_string(p) + ")");
    }
  for (int s = 1; s <= 8; ++s) {
    for (int k = 1; 2 * k <= s; ++k) {
      r.equal(count_corners(s, 2, k), testing::binomial_small(s, 2 * k) * catalan[k],
              "count_corners(" + std::to_string(s) + ",2," + std::to_string(k) + ")");
    }
    for (int p = 2; p <= 4; ++p) {
      const auto family = CoreFamily::make(s, 1, p);
      const auto moduli = family.moduli();
      std::map<int, std::int64_t> histogram;
      for (const auto& lambda : oracle::enumerate_cores(moduli)) {
        ++histogram[corner_count(lambda)];
        r.require(corners_equal_upsteps(lambda, family), "corners = up steps for " + lambda.to_string());
      }
      for (int k = 0; 2 * k <= s + 1; ++k) {
        r.equal(count_corners(s, p, k), histogram[k],
                "corner histogram " + family.to_string() + " k=" + std::to_string(k));
      }
    }
  }
}

void criterion_self_conjugate(Report& r) {
  for (int t = 2; t <= 9; ++t)
    for (int s = 1; s < t; ++s) {
      if (gcd(s, t) != 1) continue;
      r.equal(count_sc_fms(s, t), oracle::enumerate_sc_cores(std::vector<int>{s, t}).size(),
              "count_sc_fms(" + std::to_string(s) + "," + std::to_string(t) + ")");
    }
  for (int s = 1; s <= 9; ++s)
    for (int p = 2; p <= 4; ++p) {
      const auto moduli = CoreFamily::make(s, 1, p).moduli();
      r.equal(count_sc_main(s, p), oracle::enumerate_sc_cores(moduli).size(),
              "count_sc_main(" + std::to_string(s) + "," + std::to_string(p) + ")");
    }
  for (int k = 1; k <= 8; ++k) {
    std::map<int, std::int64_t> by_uu;
    for (const auto& w : oracle::enumerate_paths_exhaustive({oracle::PathKind::SymmetricDyck, k, 0, 2})) {
      int uu = 0;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) uu += w[i] == 'U' && w[i + 1] == 'U';
      ++by_uu[uu];
    }
    for (int l = 0; l <= k; ++l) {
      r.equal(count_sym_dyck(k, l), by_uu[l], "count_sym_dyck(" + std::to_string(k) + "," + std::to_string(l) + ")");
    }
  }
  for (int s = 0; s <= 10; ++s) {
    r.equal(count_sc_main(s, 2), oracle::enumerate_paths_exhaustive({oracle::PathKind::SymmetricMotzkin, s, 0, 2}).size(),
            "count_sc_main(" + std::to_string(s) + ",2) vs symmetric Motzkin");
  }
}

// Every formula over the union of the grids above; exact_div throws on a
// nonzero remainder, which is counted as a failure here.
void criterion_exactness(Report& r) {
  auto guard = [&](const std::string& what, const std::function<void()>& fn) {
    try {
      fn();
      r.require(true, what);
    } catch (const ExactnessError& e) {
      r.fail(what + ": " + e.what());
    }
  };
  for (int s = 1; s <= 12; ++s)
    for (int d = 1; d <= 7; ++d) {
      if (gcd(s, d) != 1) continue;
      const std::string at = "(" + std::to_string(s) + "," + std::to_string(d) + ")";
      guard("anderson" + at, [&] { count_anderson(s, s + d); });
      guard("wang" + at, [&] { count_wang(s, d); });
      guard("bny" + at, [&] { count_bny(s, d); });
      guard("sc_fms" + at, [&] { count_sc_fms(s, s + d); });
      for (int p = 2; p <= 6; ++p) guard("main" + at, [&] { count_main(s, d, p); });
      for (int p = 3; p <= 6; ++p)
        for (int k = 1; 2 * k <= s; ++k) guard("mainprop" + at, [&] { count_mainprop(s, d, p, k); });
      for (int k = 0; 2 * k <= s; ++k) guard("freemotz" + at, [&] { count_freemotz(s, d, k); });
    }
  for (int s = 0; s <= 12; ++s)
    for (int p = 2; p <= 6; ++p) {
      guard("corone", [&] { count_corone(s, p); });
      guard("sc_main", [&] { count_sc_main(s, p); });
      for (int k = 0; 2 * k <= s; ++k) guard("corners", [&] { count_corners(s, p, k); });
      for (int k = 0; k <= s; ++k) guard("corners_two", [&] { count_corners_two(s, k); });
    }
  for (int k = 1; k <= 12; ++k)
    for (int m = 1; m <= k; ++m) guard("narayana", [&] { narayana(k, m); });
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(Report&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked instance: six (3,5,7)-cores", criterion_worked_instance},
      {2, "rational Motzkin paths of type (5,-2)", criterion_five_two_paths},
      {3, "golden mappings", criterion_golden_mappings},
      {4, "cycle lemma, exhaustive s+d <= 10", criterion_cycle_lemma},
      {5, "closed formulas equal oracle counts", criterion_formula_vs_oracle},
      {6, "cross-formula identities and Motzkin numbers", criterion_cross_formula},
      {7, "bijection round trips", criterion_round_trips},
      {8, "corner statistics", criterion_corners},
      {9, "self-conjugate counts", criterion_self_conjugate},
      {10, "exact division across all grids", criterion_exactness},
  };
  int failed = 0;
  const auto suite_start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    Report report;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(report);
    } catch (const std::exception& e) {
      report.fail(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (report.passed() ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " ("
              << report.checks() << " checks, " << ms << " ms)\n";
    for (const auto& f : report.failures()) std::cout << "      " << f << '\n';
    if (!report.passed()) ++failed;
    if (ms > 10000) std::cout << "      warning: criterion exceeded the 10 s budget\n";
  }
  const auto total_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - suite_start).count();
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in "
            << total_ms << " ms\n";
  return failed == 0 ? 0 : 1;
}
