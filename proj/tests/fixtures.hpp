#pragma once

// Systems from the literature used across the tests, plus slow reference
// oracles that share no code path with the library routines they check.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "togliatti/linalg.hpp"
#include "togliatti/monomial.hpp"

namespace fixtures {

using togliatti::ExponentVector;
using togliatti::MonomialSystem;

inline ExponentVector mono(std::vector<int> e) { return ExponentVector(std::move(e)); }

inline MonomialSystem parse(const std::string& text, int n = -1) {
  return togliatti::parse_system(text, n, 3);
}

/// S = (x0^3, x1^3, x2^3, x0x1x2).
inline MonomialSystem togliatti_n2() { return parse("S: x0^3 x1^3 x2^3 x0*x1*x2"); }

/// P = {x_i^2 x_j : i != j}.
inline MonomialSystem truncated_simplex(int n) {
  std::vector<ExponentVector> p;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) {
        std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
        e[static_cast<std::size_t>(i)] = 2;
        e[static_cast<std::size_t>(j)] = 1;
        p.emplace_back(std::move(e));
      }
  return MonomialSystem::from_apolar(n, 3, std::move(p));
}

/// P = {x_i^2 x_j : {i,j} != {0,1}} plus {x0 x1 x_i : i >= 2}.
inline MonomialSystem first_counterexample(int n) {
  std::vector<ExponentVector> p;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j || (std::min(i, j) == 0 && std::max(i, j) == 1)) continue;
      std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
      e[static_cast<std::size_t>(i)] = 2;
      e[static_cast<std::size_t>(j)] = 1;
      p.emplace_back(std::move(e));
    }
  for (int i = 2; i <= n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
    e[0] = e[1] = e[static_cast<std::size_t>(i)] = 1;
    p.emplace_back(std::move(e));
  }
  return MonomialSystem::from_apolar(n, 3, std::move(p));
}

/// Togliatti but not minimal (n = 4, 15 monomials).
inline MonomialSystem non_minimal_n4() {
  return parse(
      "P: x0^2*x1 x0*x1^2 x0*x1*x2 x0^2*x3 x0*x2*x3 x2^2*x3 x1*x2*x3 x1^2*x3 "
      "x0*x1*x3 x0^2*x4 x0*x1*x4 x1^2*x4 x0*x2*x4 x2^2*x4 x1*x2*x4",
      4);
}

/// a, b, c, d = x0..x3: a quasi-smooth Togliatti system that is not smooth.
inline MonomialSystem quasi_smooth_n3() {
  return parse(
      "P: x0*x2*x3 x1*x2*x3 x0^2*x2 x0^2*x3 x0*x2^2 x0*x3^2 x1^2*x2 x1^2*x3 "
      "x1*x2^2 x1*x3^2 x2^2*x3 x2*x3^2",
      3);
}

inline std::vector<int> random_permutation(int size, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Artinian cubic system with `extra` random non-cube generators.
inline MonomialSystem random_artinian(int n, std::size_t extra, std::mt19937_64& rng) {
  std::vector<ExponentVector> cubes, rest;
  for (const auto& m : togliatti::lattice_points_simplex(n, 3))
    (m.is_pure_power() ? cubes : rest).push_back(m);
  std::shuffle(rest.begin(), rest.end(), rng);
  rest.resize(std::min(extra, rest.size()));
  cubes.insert(cubes.end(), rest.begin(), rest.end());
  return MonomialSystem::from_generators(n, 3, std::move(cubes));
}

// ---------------------------------------------------------------------------
// Hull oracle: enumerate every hyperplane through affinely independent point
// subsets inside the affine hull, keep the supporting ones (facets), and read
// vertices and edges off intersections of facets.

struct HullOracle {
  std::size_t dimension = 0;
  std::set<std::size_t> vertices;
  std::set<std::pair<std::size_t, std::size_t>> edges;
};

namespace detail {

using togliatti::linalg::Rational;
using togliatti::linalg::RationalMatrix;
using togliatti::linalg::RatVector;

inline RatVector diff(const ExponentVector& a, const ExponentVector& b) {
  RatVector v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] - b[i];
  return v;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::size_t affine_rank(const std::vector<ExponentVector>& pts,
                               const std::vector<std::size_t>& idx) {
  if (idx.size() < 2) return 0;
  std::vector<RatVector> rows;
  for (std::size_t t = 1; t < idx.size(); ++t) rows.push_back(diff(pts[idx[t]], pts[idx[0]]));
  return togliatti::linalg::rank(RationalMatrix::from_rows(rows, pts[0].size()));
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    const auto& visit) {
  if (cur.size() == k) {
    visit(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace detail

inline HullOracle brute_force_hull(const std::vector<ExponentVector>& pts) {
  using namespace detail;
  HullOracle out;
  const std::size_t n = pts.size();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const std::size_t m = affine_rank(pts, all);
  out.dimension = m;
  if (m == 0) {
    out.vertices.insert(0);
    return out;
  }

  // Basis of the direction space: greedily chosen independent differences.
  std::vector<RatVector> basis;
  for (std::size_t i = 1; i < n && basis.size() < m; ++i) {
    auto trial = basis;
    trial.push_back(diff(pts[i], pts[0]));
    if (togliatti::linalg::rank(RationalMatrix::from_rows(trial, pts[0].size())) == trial.size())
      basis = trial;
  }
  auto lift = [&](const RatVector& y) {
    RatVector c(pts[0].size(), Rational(0));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t j = 0; j < c.size(); ++j) c[j] += y[r] * basis[r][j];
    return c;
  };

  std::vector<std::vector<std::size_t>> facets;  // point sets on each facet
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> cur;
  subsets(n, m, 0, cur, [&](const std::vector<std::size_t>& sub) {
    if (affine_rank(pts, sub) != m - 1) return;
    // Functional c = B^T y vanishing on the differences inside sub.
    std::vector<RatVector> rows;
    for (std::size_t t = 1; t < sub.size(); ++t) {
      RatVector d = diff(pts[sub[t]], pts[sub[0]]);
      RatVector row(m);
      for (std::size_t r = 0; r < m; ++r) row[r] = dot(basis[r], d);
      rows.push_back(row);
    }
    RatVector y;
    if (rows.empty()) {
      y.assign(m, Rational(0));
      y[0] = 1;  // m == 1: any nonzero functional on the line
    } else {
      auto ker = togliatti::linalg::kernel_basis(RationalMatrix::from_rows(rows, m));
      if (ker.size() != 1) return;
      for (const auto& k : ker[0]) y.emplace_back(k);
    }
    const RatVector c = lift(y);
    const Rational h = dot(c, diff(pts[sub[0]], pts[0]));
    bool pos = false, neg = false;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational v = dot(c, diff(pts[i], pts[0])) - h;
      if (v > 0) pos = true;
      if (v < 0) neg = true;
      if (v == 0) on.push_back(i);
    }
    if (pos && neg) return;
    if (seen.insert(on).second) facets.push_back(on);
  });

  // The face generated by a set of points: intersection of facets holding it.
  auto face_of = [&](const std::vector<std::size_t>& pts_in) {
    std::vector<std::size_t> face = all;
    for (const auto& f : facets) {
      if (!std::includes(f.begin(), f.end(), pts_in.begin(), pts_in.end())) continue;
      std::vector<std::size_t> tmp;
      std::set_intersection(face.begin(), face.end(), f.begin(), f.end(), std::back_inserter(tmp));
      face = tmp;
    }
    return face;
  };

  for (std::size_t v = 0; v < n; ++v) {
    const auto face = face_of({v});
    if (affine_rank(pts, face) == 0) out.vertices.insert(v);
  }
  for (auto a = out.vertices.begin(); a != out.vertices.end(); ++a)
    for (auto b = std::next(a); b != out.vertices.end(); ++b) {
      const auto face = face_of({*a, *b});
      if (affine_rank(pts, face) != 1) continue;
      // Both must be extreme on the line: no other vertex in the face.
      bool clean = true;
      for (auto p : face)
        if (p != *a && p != *b && out.vertices.count(p)) clean = false;
      if (clean) out.edges.insert({*a, *b});
    }
  return out;
}

}  // namespace fixtures
