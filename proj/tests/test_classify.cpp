#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "togliatti/classify.hpp"
#include "togliatti/errors.hpp"
#include "togliatti/report.hpp"

using namespace togliatti;

namespace {

std::set<std::string> partitions_of(const ClassificationResult& r) {
  std::set<std::string> out;
  for (const auto& c : r.classes) out.insert(c.partition ? to_string(*c.partition) : "none");
  return out;
}

std::vector<MonomialSystem> systems_of(const ClassificationResult& r) {
  std::vector<MonomialSystem> out;
  for (const auto& c : r.classes) out.push_back(c.system);
  return out;
}

SearchConfig config_for(int n) {
  SearchConfig c;
  c.n = n;
  return c;
}

}  // namespace

TEST(Enumerate, TogliattiIsUniqueForN2) {
  const auto r = enumerate_minimal_smooth(config_for(2));
  EXPECT_TRUE(r.complete);
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_EQ(r.classes[0].system, canonical_form(fixtures::togliatti_n2()));
  EXPECT_EQ(partitions_of(r), (std::set<std::string>{"1,1,1"}));
}

TEST(Enumerate, CardinalityThreeFindsNothing) {
  auto c = config_for(2);
  c.max_s = 3;
  EXPECT_TRUE(enumerate_minimal_smooth(c).classes.empty());
}

TEST(Enumerate, ThreeClassesForN3) {
  const auto r = enumerate_minimal_smooth(config_for(3));
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(partitions_of(r), (std::set<std::string>{"1,1,1,1", "2,1,1", "2,2"}));
  for (const auto& c : r.classes) EXPECT_EQ(c.system.generators().size(), 8u);
}

TEST(Enumerate, SerialAndParallelAgree) {
  for (int n = 2; n <= 3; ++n) {
    const auto serial = enumerate_minimal_smooth_serial(config_for(n));
    const auto parallel = enumerate_minimal_smooth(config_for(n));
    EXPECT_EQ(systems_of(serial), systems_of(parallel));
    EXPECT_EQ(serial.stats, parallel.stats);
  }
}

TEST(Enumerate, ReportIndependentOfJobsSeedAndSplit) {
  auto base = config_for(3);
  base.jobs = 1;
  const std::string ref = to_json(enumerate_minimal_smooth(base)).dump();
  for (int jobs : {2, 4})
    for (std::uint64_t seed : {1u, 99u}) {
      auto c = base;
      c.jobs = jobs;
      c.seed = seed;
      EXPECT_EQ(to_json(enumerate_minimal_smooth(c)).dump(), ref) << jobs << " " << seed;
    }
  auto shallow = base;
  shallow.prefix_depth = 3;
  EXPECT_EQ(systems_of(enumerate_minimal_smooth(shallow)),
            systems_of(enumerate_minimal_smooth(base)));
}

TEST(Enumerate, PruningDoesNotLoseClasses) {
  for (int n = 2; n <= 3; ++n) {
    auto c = config_for(n);
    c.quadric_pruning = false;
    const auto full = enumerate_minimal_smooth(c);
    EXPECT_EQ(systems_of(full), systems_of(enumerate_minimal_smooth(config_for(n))));
    EXPECT_GT(full.stats.candidates, 0u);
  }
}

// Letting the quadric vanish on a cube admits more minimal systems, but none
// of the extra ones is smooth.
TEST(Enumerate, SubsetMinimalityGivesTheSameClasses) {
  for (int n = 2; n <= 3; ++n) {
    auto c = config_for(n);
    c.cubes_in_minimality = false;
    const auto loose = enumerate_minimal_smooth(c);
    const auto strict = enumerate_minimal_smooth(config_for(n));
    EXPECT_TRUE(loose.complete);
    EXPECT_EQ(systems_of(loose), systems_of(strict));
    EXPECT_GE(loose.stats.minimal_orbits, strict.stats.minimal_orbits);
  }
}

// Every S containing the cubes with |S| <= 4, judged by the subset
// definition of minimality instead of the quadric criterion.
TEST(Enumerate, AgreesWithBruteForceAtN2) {
  std::vector<ExponentVector> cubes, rest;
  for (const auto& m : lattice_points_simplex(2, 3)) (m.is_pure_power() ? cubes : rest).push_back(m);
  std::set<std::vector<ExponentVector>> found;
  int candidates = 0;
  for (int pick = -1; pick < static_cast<int>(rest.size()); ++pick) {
    auto gens = cubes;
    if (pick >= 0) gens.push_back(rest[static_cast<std::size_t>(pick)]);
    const auto sys = MonomialSystem::from_generators(2, 3, gens);
    ++candidates;
    if (!fails_wlp_in_degree_dminus1(sys).fails) continue;
    if (!is_minimal_by_subsets(sys)) continue;
    if (!smoothness_check(sys.apolar()).smooth) continue;
    found.insert(canonical_form(sys).generators());
  }
  EXPECT_EQ(candidates, 8);
  std::set<std::vector<ExponentVector>> searched;
  for (const auto& s : systems_of(enumerate_minimal_smooth(config_for(2)))) searched.insert(s.generators());
  EXPECT_EQ(found, searched);
}

TEST(Enumerate, ClassesPassFullCheckAndStructuralProperties) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& c : enumerate_minimal_smooth(config_for(n)).classes) {
      const auto report = check_command(c.system);
      EXPECT_TRUE(report.smooth_minimal_togliatti());
      EXPECT_TRUE(report.symmetric);
      EXPECT_TRUE(report.contains_simplex_vertices);
      EXPECT_TRUE(report.spans_full_lattice);
      EXPECT_TRUE(report.family_match);
      // No path i -> j -> k -> j in G_P without j -> i.
      const auto& g = *report.gp;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
          for (int k = 0; k <= n; ++k) {
            if (i == j || j == k || i == k) continue;
            if (g.has_edge(i, j) && g.has_edge(j, k) && g.has_edge(k, j)) {
              EXPECT_TRUE(g.has_edge(j, i));
            }
          }
    }
}

TEST(Enumerate, BudgetGivesPartialResult) {
  auto c = config_for(4);
  c.budget_seconds = 0.2;
  const auto r = enumerate_minimal_smooth(c);
  EXPECT_FALSE(r.complete);
  EXPECT_LT(r.tasks_done, r.tasks_total);
}

TEST(Enumerate, RejectsUnsupportedConfigs) {
  EXPECT_THROW(enumerate_minimal_smooth(config_for(1)), InvalidArgument);
  EXPECT_THROW(enumerate_minimal_smooth(config_for(5)), InvalidArgument);
  auto c = config_for(2);
  c.budget_seconds = -1;
  EXPECT_THROW(enumerate_minimal_smooth(c), InvalidArgument);
}

TEST(Check, ReportsOnLiteratureSystems) {
  const auto bk = check_command(fixtures::togliatti_n2());
  EXPECT_TRUE(bk.verdict.wlp.fails);
  EXPECT_TRUE(bk.minimal());
  EXPECT_TRUE(bk.smooth());
  ASSERT_TRUE(bk.partition);
  EXPECT_EQ(to_string(*bk.partition), "1,1,1");
  EXPECT_TRUE(bk.family_match);

  const auto nm = check_command(fixtures::non_minimal_n4());
  EXPECT_TRUE(nm.verdict.togliatti);
  EXPECT_FALSE(nm.minimal());

  const auto qs = check_command(fixtures::quasi_smooth_n3());
  EXPECT_TRUE(qs.verdict.togliatti);
  EXPECT_FALSE(qs.smooth());
  EXPECT_FALSE(qs.smooth_minimal_togliatti());

  const auto over = check_command(parse_system("P: x0^2*x1", 2, 3));
  EXPECT_FALSE(over.verdict.cardinality_ok);
  EXPECT_FALSE(over.warnings.empty());
}

TEST(Verify, PassesForN2AndN3) {
  const auto r2 = verify_theorem(2);
  EXPECT_EQ(r2.status, Status::Pass);
  EXPECT_EQ(r2.classes, 1u);
  EXPECT_EQ(r2.bound, 4);
  EXPECT_EQ(r2.equality_found, (std::vector<std::string>{"1,1,1"}));

  const auto r3 = verify_theorem(3);
  EXPECT_EQ(r3.status, Status::Pass);
  EXPECT_EQ(r3.classes, 3u);
  EXPECT_EQ(r3.bound, 8);
  EXPECT_EQ(r3.equality_found.size(), 3u);
  EXPECT_TRUE(r3.failures.empty());
}

TEST(Verify, MutatedFamilyFails) {
  // Drop the squarefree generators: the family no longer matches the search.
  const FamilyGenerator mutated = [](const PartitionSpec& spec) {
    auto f = family_system(spec);
    std::vector<ExponentVector> gens;
    for (const auto& g : f.sys.generators())
      if (!(g[0] == 1 && g[1] == 1)) gens.push_back(g);
    f.sys = MonomialSystem::from_generators(spec.n(), 3, gens);
    return f;
  };
  const auto r = verify_theorem(3, 0, 0, mutated);
  EXPECT_EQ(r.status, Status::Fail);
  EXPECT_FALSE(r.failures.empty());
  const auto j = to_json(r);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_FALSE(j["failures"].empty());
}

TEST(Verify, PartialSearchIsInconclusive) {
  const auto r = verify_theorem(4, 0.2);
  EXPECT_EQ(r.status, Status::Inconclusive);
}
