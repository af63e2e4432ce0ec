#include "coremotz/partition.hpp"
#include "support/independent.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace coremotz;

TEST_CASE("hook lengths of sample partitions") {
  CHECK(hook_lengths(Partition{5, 4, 2, 1}) ==
        HookMatrix{{8, 6, 4, 3, 1}, {6, 4, 2, 1}, {3, 1}, {1}});
  CHECK(hook_lengths(Partition{}).empty());

  const auto hooks = hook_lengths(Partition{6, 4, 3, 1, 1, 1, 1});
  std::vector<int> first_column;
  for (const auto& row : hooks) first_column.push_back(row.front());
  CHECK(first_column == std::vector<int>{12, 9, 7, 4, 3, 2, 1});
  CHECK(hooks[0] == std::vector<int>{12, 7, 6, 4, 2, 1});
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{5, 4, 2, 1}) == Partition{4, 3, 2, 2, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2}) == Partition{1, 1});
}

TEST_CASE("beta sets") {
  CHECK(beta_set(Partition{5, 4, 2, 1}) == BetaSet{8, 6, 3, 1});
  CHECK(beta_set(Partition{9, 5, 3, 2, 2, 1, 1, 1, 1}) == BetaSet{17, 12, 9, 7, 6, 4, 3, 2, 1});
  CHECK(beta_set(Partition{}).empty());

  CHECK(partition_from_beta(BetaSet{8, 6, 3, 1}) == Partition{5, 4, 2, 1});
  CHECK(partition_from_beta(BetaSet{}) == Partition{});
  CHECK(partition_from_beta(BetaSet{3, 2, 1}) == Partition{1, 1, 1});
}

TEST_CASE("t-cores") {
  const Partition lambda{5, 4, 2, 1};
  for (int t = 1; t <= 15; ++t) {
    const bool expected = t == 5 || t == 7 || t >= 9;
    CHECK_MESSAGE(is_t_core(lambda, t) == expected, "t=" << t);
  }
  for (int t = 1; t <= 10; ++t) CHECK(is_t_core(Partition{}, t));
  const Partition fig2{6, 4, 3, 1, 1, 1, 1};
  CHECK(is_t_core(fig2, 5));
  CHECK(is_t_core(fig2, 8));
  CHECK(is_t_core(fig2, 11));
  CHECK_THROWS_AS(is_t_core(lambda, 0), DomainError);
}

TEST_CASE("simultaneous cores") {
  const std::vector<int> ts{3, 5, 7};
  CHECK(is_simultaneous_core(Partition{3, 1}, ts));
  CHECK(is_simultaneous_core(Partition{1, 1}, ts));
  CHECK_FALSE(is_simultaneous_core(Partition{2, 2}, ts));
  CHECK_THROWS_AS(is_simultaneous_core(Partition{}, std::vector<int>{}), DomainError);
}

TEST_CASE("corners and self-conjugacy") {
  CHECK(corner_count(Partition{9, 2, 2, 2, 1}) == 3);
  CHECK(corner_count(Partition{}) == 0);
  for (int k = 1; k <= 6; ++k) CHECK(corner_count(Partition{k}) == 1);

  CHECK(is_self_conjugate(Partition{2, 1}));
  CHECK_FALSE(is_self_conjugate(Partition{2}));
  CHECK(is_self_conjugate(Partition{3, 1, 1}));
  CHECK(is_self_conjugate(Partition{}));
}

TEST_CASE("construction rejects malformed partitions") {
  CHECK_THROWS_AS(Partition({2, 3}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
  CHECK_THROWS_AS(BetaSet({3, 3}), DomainError);
  CHECK_THROWS_AS(BetaSet({0, 2}), DomainError);
  CHECK_THROWS_AS(CoreFamily::make(4, 2, 2), DomainError);
  CHECK_THROWS_AS(CoreFamily::make(3, 2, 0), DomainError);
}

TEST_CASE("textual form") {
  CHECK(Partition::parse("[5,4,2,1]") == Partition{5, 4, 2, 1});
  CHECK(Partition::parse("[]") == Partition{});
  CHECK(Partition::parse(" [ 3, 1 ] ") == Partition{3, 1});
  CHECK(Partition{9, 5, 3}.to_string() == "[9,5,3]");
  CHECK(Partition{}.to_string() == "[]");
  CHECK_THROWS_AS(Partition::parse("5,4"), DomainError);
  CHECK_THROWS_AS(Partition::parse("[5,x]"), DomainError);
  CHECK_THROWS_AS(Partition::parse("[1,2]"), DomainError);
  CHECK(CoreFamily::parse("5,3,3").moduli() == std::vector<int>{5, 8, 11, 14});
  CHECK(CoreFamily::make(3, 2, 2).to_string() == "(3,5,7)");
}

TEST_CASE("property: conjugation, beta sets and hooks over all small partitions") {
  for (const Partition& lambda : testing::partitions_up_to(16)) {
    CHECK(conjugate(conjugate(lambda)) == lambda);
    CHECK(partition_from_beta(beta_set(lambda)) == lambda);
    CHECK(beta_set(lambda).size() == lambda.length());

    int boxes = 0;
    for (const auto& row : hook_lengths(lambda)) boxes += static_cast<int>(row.size());
    CHECK(boxes == lambda.size());

    int runs = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i) runs += (i + 1 == lambda.length() || lambda[i] != lambda[i + 1]);
    CHECK(corner_count(lambda) == runs);
  }
}

TEST_CASE("property: hook multiset is invariant under transpose (size <= 30)") {
  for (int n = 0; n <= 30; n += (n < 20 ? 1 : 5)) {
    for (const Partition& lambda : testing::partitions_of(n)) {
      auto flatten = [](const HookMatrix& m) {
        std::vector<int> v;
        for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
        std::sort(v.begin(), v.end());
        return v;
      };
      REQUIRE(flatten(hook_lengths(lambda)) == flatten(hook_lengths(conjugate(lambda))));
    }
  }
}

TEST_CASE("property: beta-set core criterion agrees with hook scan (size <= 25, t <= 12)") {
  for (const Partition& lambda : testing::partitions_up_to(25)) {
    for (int t = 1; t <= 12; ++t) REQUIRE(is_t_core(lambda, t) == is_t_core_by_hooks(lambda, t));
  }
}

TEST_CASE("property: beta_set after partition_from_beta is the identity") {
  // every subset of {1..12}
  for (unsigned mask = 0; mask < (1u << 12); ++mask) {
    std::vector<int> xs;
    for (int b = 0; b < 12; ++b)
      if (mask & (1u << b)) xs.push_back(b + 1);
    const BetaSet beta(xs);
    REQUIRE(beta_set(partition_from_beta(beta)) == beta);
  }
}
