#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "togliatti/errors.hpp"
#include "togliatti/family.hpp"
#include "togliatti/lefschetz.hpp"
#include "togliatti/polytope.hpp"

using namespace togliatti;
using fixtures::mono;

namespace {

// Counts partitions of `total` into parts <= max_part by recursion on the
// largest part; independent of the enumeration under test.
int count_partitions(int total, int max_part) {
  if (total == 0) return 1;
  int c = 0;
  for (int p = 1; p <= std::min(total, max_part); ++p) c += count_partitions(total - p, p);
  return c;
}

}  // namespace

TEST(PartitionSpec, Validation) {
  EXPECT_EQ(PartitionSpec({2, 1, 1}).n(), 3);
  EXPECT_THROW(PartitionSpec({1, 2, 1}), InvalidArgument);
  EXPECT_THROW(PartitionSpec({3, 1}), InvalidArgument);  // a_1 = n
  EXPECT_THROW(PartitionSpec({0, 1}), InvalidArgument);
  EXPECT_THROW(PartitionSpec(std::vector<int>{}), InvalidArgument);
  EXPECT_EQ(parse_partition("2,2"), PartitionSpec({2, 2}));
  EXPECT_THROW(parse_partition("2,x"), InvalidArgument);
  EXPECT_EQ(PartitionSpec({2, 1, 1}).group_of(), (std::vector<int>{0, 0, 1, 2}));
}

TEST(PartitionSpec, EnumerationCounts) {
  for (int n = 2; n <= 9; ++n) {
    const auto parts = valid_partitions(n);
    EXPECT_EQ(static_cast<int>(parts.size()), count_partitions(n + 1, n - 1)) << n;
    for (std::size_t i = 1; i < parts.size(); ++i) EXPECT_GT(parts[i - 1], parts[i]);
  }
}

TEST(FamilySystem, Examples) {
  const auto t = family_system(PartitionSpec({1, 1, 1}));
  EXPECT_EQ(t.sys, fixtures::togliatti_n2());
  EXPECT_EQ(t.mu, 4);
  EXPECT_EQ(family_system(PartitionSpec({2, 1, 1})).mu, 8);
  EXPECT_EQ(family_system(PartitionSpec({2, 2})).mu, 8);
}

TEST(FamilySystem, CountsMatchClosedForm) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& spec : valid_partitions(n)) {
      const auto f = family_system(spec);
      EXPECT_EQ(static_cast<std::int64_t>(f.sys.generators().size()), mu_formula(spec));
      EXPECT_EQ(f.mu + f.beta, binomial(n + 3, 3));
    }
}

TEST(MuFormula, Examples) {
  EXPECT_EQ(mu_formula(PartitionSpec({1, 1, 1, 1})), 8);
  EXPECT_EQ(mu_formula(PartitionSpec({4, 1, 1})), 26);
  EXPECT_EQ(mu_upper_bound(5), 26);
  EXPECT_EQ(mu_formula(PartitionSpec({1, 1, 1})), 4);
}

TEST(WitnessQuadric, Examples) {
  const auto q = witness_quadric(PartitionSpec({1, 1, 1}));
  EXPECT_EQ(q.evaluate(mono({2, 1, 0})), 0);
  const auto q211 = witness_quadric(PartitionSpec({2, 1, 1}));
  EXPECT_EQ(q211.evaluate(mono({1, 1, 1, 0})), 0);
  EXPECT_EQ(q211.evaluate(mono({3, 0, 0, 0})), 18);
}

TEST(WitnessQuadric, SpansQuadricSpaceAndMissesGenerators) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& spec : valid_partitions(n)) {
      const auto f = family_system(spec);
      for (const auto& p : f.sys.apolar()) EXPECT_EQ(f.witness_quadric.evaluate(p), 0);
      for (const auto& s : f.sys.generators()) EXPECT_NE(f.witness_quadric.evaluate(s), 0);
      const auto qs = quadric_space(f.sys.apolar(), n + 1);
      ASSERT_EQ(qs.size(), 1u) << to_string(spec);
      EXPECT_TRUE(qs[0].proportional_to(f.witness_quadric));
    }
}

TEST(Bound, MaximumAndEqualityCases) {
  for (int n = 3; n <= 8; ++n) {
    std::int64_t best = 0;
    for (const auto& spec : valid_partitions(n)) best = std::max(best, mu_formula(spec));
    EXPECT_EQ(best, mu_upper_bound(n));
    std::vector<PartitionSpec> expected;
    std::vector<int> hook{n - 1, 1, 1}, ones(static_cast<std::size_t>(n + 1), 1);
    expected.emplace_back(hook);
    if (n == 3) expected.emplace_back(std::vector<int>{2, 2});
    expected.emplace_back(ones);
    auto got = equality_partitions(n);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected) << n;
  }
  EXPECT_EQ(equality_partitions(2), (std::vector<PartitionSpec>{PartitionSpec({1, 1, 1})}));
}

TEST(FamilySystem, IsMinimalSmoothTogliatti) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& spec : valid_partitions(n)) {
      const auto f = family_system(spec);
      const auto v = togliatti_verdict(f.sys);
      EXPECT_TRUE(v.togliatti) << to_string(spec);
      ASSERT_TRUE(v.minimality);
      EXPECT_TRUE(v.minimality->minimal) << to_string(spec);
      EXPECT_TRUE(smoothness_check(f.sys.apolar()).smooth) << to_string(spec);
    }
}
