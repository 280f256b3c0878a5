#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "togliatti/errors.hpp"
#include "togliatti/family.hpp"
#include "togliatti/polytope.hpp"

using namespace togliatti;
using fixtures::mono;

namespace {

void expect_matches_oracle(const std::vector<ExponentVector>& input) {
  const auto model = hull_structure(input);
  const auto oracle = fixtures::brute_force_hull(model.points);
  EXPECT_EQ(model.dimension, oracle.dimension);
  const std::set<std::size_t> verts(model.vertices.begin(), model.vertices.end());
  EXPECT_EQ(verts, oracle.vertices);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : model.edges) edges.insert({std::min(a, b), std::max(a, b)});
  EXPECT_EQ(edges, oracle.edges);
}

std::vector<linalg::IntVector> hyperplane_lattice(int nv) {
  std::vector<linalg::IntVector> out;
  for (int i = 1; i < nv; ++i) {
    linalg::IntVector v(static_cast<std::size_t>(nv), 0);
    v[0] = 1;
    v[static_cast<std::size_t>(i)] = -1;
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(SpannedLattice, Examples) {
  const auto trunc = spanned_lattice(fixtures::truncated_simplex(2).apolar());
  EXPECT_EQ(trunc.rank(), 2u);
  const auto full = linalg::hnf(hyperplane_lattice(3), 3);
  EXPECT_EQ(linalg::lattice_index(trunc.lattice, full).value, 1);

  const std::vector<ExponentVector> cubes{mono({3, 0, 0}), mono({0, 3, 0}), mono({0, 0, 3})};
  const auto c = spanned_lattice(cubes);
  EXPECT_EQ(c.rank(), 2u);
  // Differences are 3 * (unit differences): Smith invariants [3, 3].
  EXPECT_EQ(linalg::lattice_index(c.lattice, full).value, 9);

  const std::vector<ExponentVector> single{mono({1, 1, 1})};
  EXPECT_EQ(spanned_lattice(single).rank(), 0u);
  EXPECT_THROW(spanned_lattice({}), InvalidArgument);
}

TEST(SimplexLattice, IsTheHyperplaneLattice) {
  for (int nv = 2; nv <= 6; ++nv)
    EXPECT_EQ(simplex_difference_lattice(nv), linalg::hnf(hyperplane_lattice(nv), static_cast<std::size_t>(nv)));
}

TEST(Hull, Hexagon) {
  const auto model = hull_structure(fixtures::truncated_simplex(2).apolar());
  EXPECT_EQ(model.dimension, 2u);
  EXPECT_EQ(model.vertices.size(), 6u);
  EXPECT_EQ(model.edges.size(), 6u);
}

TEST(Hull, Triangle) {
  const auto pts = lattice_points_simplex(2, 3);
  const auto model = hull_structure(pts);
  ASSERT_EQ(model.vertices.size(), 3u);
  for (auto v : model.vertices) EXPECT_TRUE(model.points[v].is_pure_power());
  EXPECT_EQ(model.edges.size(), 3u);
}

TEST(Hull, FirstCounterexampleAgainstOracle) {
  const auto sys = fixtures::first_counterexample(3);
  const auto model = hull_structure(sys.apolar());
  // x0*x1*xi is the midpoint of x0^2*xi and x1^2*xi.
  for (auto i = 0u; i < model.points.size(); ++i) {
    const auto& p = model.points[i];
    if (p[0] == 1 && p[1] == 1) {
      EXPECT_TRUE(std::find(model.vertices.begin(), model.vertices.end(), i) == model.vertices.end())
          << to_string(p);
    }
  }
  expect_matches_oracle(sys.apolar());
}

TEST(Hull, FixturesAgainstOracle) {
  expect_matches_oracle(fixtures::truncated_simplex(2).apolar());
  expect_matches_oracle(fixtures::truncated_simplex(3).apolar());
  expect_matches_oracle(fixtures::quasi_smooth_n3().apolar());
  expect_matches_oracle(fixtures::non_minimal_n4().apolar());
  expect_matches_oracle(lattice_points_simplex(3, 3));
  expect_matches_oracle(family_system(PartitionSpec({2, 1, 1})).sys.apolar());
}

TEST(Hull, RandomPointSetsAgainstOracle) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 1 + trial % 4;
    std::set<ExponentVector> pts;
    const std::size_t available = std::size_t{1} << (2 * k);  // 4^k grid points
    const std::size_t count = std::min<std::size_t>(2 + rng() % 14, available);
    while (pts.size() < count) {
      std::vector<int> e(static_cast<std::size_t>(k));
      for (auto& x : e) x = static_cast<int>(rng() % 4);
      pts.insert(ExponentVector(e));
    }
    expect_matches_oracle({pts.begin(), pts.end()});
  }
}

TEST(Hull, Degenerate) {
  const std::vector<ExponentVector> one{mono({1, 2})};
  const auto m1 = hull_structure(one);
  EXPECT_EQ(m1.dimension, 0u);
  EXPECT_EQ(m1.vertices.size(), 1u);
  const std::vector<ExponentVector> seg{mono({3, 0}), mono({2, 1}), mono({1, 2})};
  const auto m2 = hull_structure(seg);
  EXPECT_EQ(m2.dimension, 1u);
  EXPECT_EQ(m2.vertices.size(), 2u);
  EXPECT_EQ(m2.edges.size(), 1u);
  EXPECT_TRUE(smoothness_check(one).smooth);
  EXPECT_TRUE(smoothness_check(seg).smooth);
  // t -> (1, t^2, t^3): the first lattice step from x0^3 is not a point.
  const std::vector<ExponentVector> cusp{mono({3, 0}), mono({1, 2}), mono({0, 3})};
  const auto c = smoothness_check(cusp);
  EXPECT_EQ(hull_structure(cusp).dimension, 1u);
  EXPECT_FALSE(c.smooth);
  EXPECT_THROW(hull_structure({}), InvalidArgument);
}

TEST(Smoothness, Examples) {
  const auto hex = smoothness_check(fixtures::truncated_simplex(2).apolar());
  EXPECT_TRUE(hex.smooth);
  EXPECT_EQ(hex.vertices.size(), 6u);
  for (const auto& v : hex.vertices) {
    EXPECT_EQ(v.edge_count, 2u);
    EXPECT_EQ(v.abs_det, 1);
  }
  ASSERT_TRUE(hex.index_in_simplex_lattice);
  EXPECT_EQ(hex.index_in_simplex_lattice->value, 1);

  EXPECT_TRUE(smoothness_check(family_system(PartitionSpec({2, 1, 1})).sys.apolar()).smooth);

  const auto quasi = smoothness_check(fixtures::quasi_smooth_n3().apolar());
  EXPECT_FALSE(quasi.smooth);
  ASSERT_TRUE(quasi.failure);
  const auto& bad = quasi.vertices[*quasi.failure];
  EXPECT_FALSE(bad.ok);
  // The hull itself is a smooth polytope; only the semigroup condition fails.
  for (const auto& v : quasi.vertices) {
    EXPECT_EQ(v.edge_count, 3u);
    EXPECT_EQ(v.abs_det, 1);
  }
  EXPECT_FALSE(bad.edge_steps_present);
  ASSERT_TRUE(bad.missing_step);
  EXPECT_FALSE(quasi.failure_reason.empty());
}

TEST(Smoothness, SimplicesAreSmooth) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(smoothness_check(lattice_points_simplex(n, 3)).smooth) << n;
}

TEST(Smoothness, InvariantUnderPermutation) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 2;
    const auto sys = fixtures::random_artinian(n, rng() % 8, rng);
    if (sys.apolar().empty()) continue;
    const auto perm = fixtures::random_permutation(n + 1, rng);
    EXPECT_EQ(smoothness_check(sys.apolar()).smooth,
              smoothness_check(sys.permuted(perm).apolar()).smooth)
        << serialize(sys);
  }
}

TEST(LatticeProperties, SimplexVertices) {
  EXPECT_TRUE(contains_all_simplex_vertices(fixtures::togliatti_n2().apolar()));
  const std::vector<ExponentVector> pair{mono({2, 1}), mono({1, 2})};
  EXPECT_TRUE(contains_all_simplex_vertices(pair));
  const std::vector<ExponentVector> center{mono({1, 1, 1})};
  EXPECT_FALSE(contains_all_simplex_vertices(center));
}

TEST(LatticeProperties, FullSpan) {
  for (int n = 2; n <= 4; ++n) EXPECT_TRUE(spans_full_lattice(fixtures::truncated_simplex(n).apolar()));
  const std::vector<ExponentVector> cubes{mono({3, 0, 0}), mono({0, 3, 0}), mono({0, 0, 3})};
  EXPECT_FALSE(spans_full_lattice(cubes));
  EXPECT_TRUE(spans_full_lattice(family_system(PartitionSpec({1, 1, 1, 1})).sys.apolar()));
}
