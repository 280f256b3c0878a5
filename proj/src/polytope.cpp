#include "togliatti/polytope.hpp"

#include <algorithm>
#include <sstream>

#include "exact_lp.hpp"
#include "togliatti/errors.hpp"

namespace togliatti {

using linalg::Integer;
using linalg::IntVector;
using linalg::Rational;
using linalg::RationalMatrix;
using linalg::RatVector;

namespace {

IntVector difference(const ExponentVector& p, const ExponentVector& base) {
  IntVector d(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] - base[i];
  return d;
}

}  // namespace

bool AffineLattice::contains(const ExponentVector& p) const {
  return lattice.contains(difference(p, base));
}

IntVector AffineLattice::coordinates(const ExponentVector& p) const {
  auto c = lattice.coordinates(difference(p, base));
  if (!c) throw ContainmentError(to_string(p) + " is not in the spanned lattice");
  return *c;
}

AffineLattice spanned_lattice(std::span<const ExponentVector> points) {
  if (points.empty()) throw InvalidArgument("spanned_lattice of an empty set");
  const ExponentVector base = *std::min_element(points.begin(), points.end());
  std::vector<IntVector> diffs;
  diffs.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != base.size()) throw InvalidArgument("points of mixed dimension");
    diffs.push_back(difference(p, base));
  }
  return {base, linalg::hnf(diffs, base.size())};
}

linalg::IntegerLatticeBasis simplex_difference_lattice(int num_vars) {
  std::vector<IntVector> gens;
  for (int i = 1; i < num_vars; ++i) {
    IntVector v(static_cast<std::size_t>(num_vars));
    v[0] = 1;
    v[static_cast<std::size_t>(i)] = -1;
    gens.push_back(std::move(v));
  }
  return linalg::hnf(gens, static_cast<std::size_t>(num_vars));
}

namespace {

// Is target a convex combination of the given points?
bool in_convex_hull(const std::vector<RatVector>& pts, const RatVector& target) {
  if (pts.empty()) return false;
  const std::size_t m = target.size();
  RationalMatrix a(m + 1, pts.size());
  RatVector b(m + 1);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t i = 0; i < m; ++i) a(i, j) = pts[j][i];
    a(m, j) = 1;
  }
  for (std::size_t i = 0; i < m; ++i) b[i] = target[i];
  b[m] = 1;
  return detail::lp_feasible(a, b);
}

bool collinear(const IntVector& v, const IntVector& w, const IntVector& p) {
  // p - v parallel to w - v
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if ((p[i] - v[i]) * (w[j] - v[j]) != (p[j] - v[j]) * (w[i] - v[i]))
        return false;
  return true;
}

// [v, w] is an edge iff every convex combination of the points that hits
// the midpoint puts all its weight on the line through v and w.
bool is_edge(const std::vector<IntVector>& coords, std::size_t v, std::size_t w) {
  const std::size_t m = coords[v].size();
  const std::size_t k = coords.size();
  RationalMatrix a(m + 1, k);
  RatVector b(m + 1), c(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < m; ++i) a(i, j) = coords[j][i];
    a(m, j) = 1;
    c[j] = collinear(coords[v], coords[w], coords[j]) ? 0 : 1;
  }
  for (std::size_t i = 0; i < m; ++i) b[i] = Rational(coords[v][i] + coords[w][i], 2);
  b[m] = 1;
  auto best = detail::lp_maximize(a, b, c);
  if (!best) throw InternalError("midpoint of two hull points outside the hull");
  return *best == 0;
}

}  // namespace

LatticePolytopeModel hull_structure(std::span<const ExponentVector> points) {
  if (points.empty()) throw InvalidArgument("hull of an empty set");
  LatticePolytopeModel model;
  model.points.assign(points.begin(), points.end());
  std::sort(model.points.begin(), model.points.end());
  model.points.erase(std::unique(model.points.begin(), model.points.end()),
                     model.points.end());
  model.lattice = spanned_lattice(model.points);
  model.dimension = model.lattice.rank();
  for (const auto& p : model.points) model.coords.push_back(model.lattice.coordinates(p));

  const std::size_t k = model.points.size();
  std::vector<RatVector> rat(k);
  for (std::size_t i = 0; i < k; ++i)
    rat[i].assign(model.coords[i].begin(), model.coords[i].end());

  std::vector<char> is_vertex(k, 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<RatVector> others;
    others.reserve(k - 1);
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) others.push_back(rat[j]);
    is_vertex[i] = !in_convex_hull(others, rat[i]);
  }
  for (std::size_t i = 0; i < k; ++i)
    if (is_vertex[i]) model.vertices.push_back(i);

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t a = 0; a < model.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < model.vertices.size(); ++b)
      candidates.emplace_back(model.vertices[a], model.vertices[b]);
  std::vector<char> edge(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t t = 0; t < candidates.size(); ++t)
    edge[t] = is_edge(model.coords, candidates[t].first, candidates[t].second);
  for (std::size_t t = 0; t < candidates.size(); ++t)
    if (edge[t]) model.edges.push_back(candidates[t]);
  return model;
}

std::string dump_model(const LatticePolytopeModel& model) {
  std::ostringstream out;
  auto coords = [&](std::size_t i) {
    std::string s = "(";
    for (std::size_t j = 0; j < model.coords[i].size(); ++j)
      s += (j ? "," : "") + model.coords[i][j].get_str();
    return s + ")";
  };
  out << "dimension " << model.dimension << "\n";
  out << "base " << to_string(model.lattice.base) << "\n";
  out << "vertices " << model.vertices.size() << "\n";
  for (auto v : model.vertices)
    out << "  " << to_string(model.points[v]) << " " << coords(v) << "\n";
  out << "edges " << model.edges.size() << "\n";
  for (const auto& [a, b] : model.edges)
    out << "  " << to_string(model.points[a]) << " -- " << to_string(model.points[b])
        << "\n";
  return out.str();
}

SmoothnessCertificate smoothness_check(std::span<const ExponentVector> points) {
  return smoothness_check(hull_structure(points));
}

SmoothnessCertificate smoothness_check(const LatticePolytopeModel& model) {
  SmoothnessCertificate cert;
  cert.dimension = model.dimension;
  const std::size_t m = model.dimension;

  const bool same_degree =
      std::all_of(model.points.begin(), model.points.end(), [&](const auto& p) {
        return p.degree() == model.points.front().degree();
      });
  if (same_degree && model.points.front().size() >= 2)
    cert.index_in_simplex_lattice = linalg::lattice_index(
        model.lattice.lattice,
        simplex_difference_lattice(static_cast<int>(model.points.front().size())));

  std::vector<std::vector<std::size_t>> neighbours(model.points.size());
  for (const auto& [a, b] : model.edges) {
    neighbours[a].push_back(b);
    neighbours[b].push_back(a);
  }

  cert.smooth = true;
  for (auto v : model.vertices) {
    VertexRecord rec;
    rec.vertex = model.points[v];
    rec.edge_count = neighbours[v].size();
    std::sort(neighbours[v].begin(), neighbours[v].end());
    rec.edge_steps_present = true;
    for (auto w : neighbours[v]) {
      IntVector d(m);
      for (std::size_t i = 0; i < m; ++i) d[i] = model.coords[w][i] - model.coords[v][i];
      const Integer g = linalg::content(d);
      for (auto& x : d) x /= g;
      if (g != 1) {
        IntVector step(m);
        for (std::size_t i = 0; i < m; ++i) step[i] = model.coords[v][i] + d[i];
        if (std::find(model.coords.begin(), model.coords.end(), step) == model.coords.end()) {
          if (rec.edge_steps_present) rec.missing_step = model.points[w];
          rec.edge_steps_present = false;
        }
      }
      rec.directions.push_back(std::move(d));
    }
    if (!rec.directions.empty()) {
      linalg::IntegerMatrix dm(rec.directions.size(), m);
      for (std::size_t r = 0; r < rec.directions.size(); ++r)
        for (std::size_t c = 0; c < m; ++c) dm(r, c) = rec.directions[r][c];
      rec.smith = linalg::smith_diagonal(dm);
      if (rec.edge_count == m) rec.abs_det = abs(linalg::determinant(dm));
    }
    rec.ok = rec.edge_count == m && (m == 0 || rec.abs_det == 1) && rec.edge_steps_present;
    if (!rec.ok && cert.smooth) {
      cert.smooth = false;
      cert.failure = cert.vertices.size();
      std::ostringstream why;
      if (rec.edge_count != m)
        why << "vertex " << to_string(rec.vertex) << " has " << rec.edge_count
            << " edges, expected " << m;
      else if (rec.abs_det != 1)
        why << "edge directions at " << to_string(rec.vertex)
            << " span a sublattice of index " << rec.abs_det.get_str();
      else
        why << "edge from " << to_string(rec.vertex) << " towards "
            << to_string(*rec.missing_step) << " skips its first lattice point";
      cert.failure_reason = why.str();
    }
    cert.vertices.push_back(std::move(rec));
  }
  return cert;
}

bool contains_all_simplex_vertices(std::span<const ExponentVector> points) {
  if (points.empty()) return false;
  const AffineLattice lat = spanned_lattice(points);
  const int nv = static_cast<int>(points.front().size());
  const int d = points.front().degree();
  for (int i = 0; i < nv; ++i)
    if (!lat.contains(ExponentVector::pure_power(nv, i, d))) return false;
  return true;
}

bool spans_full_lattice(std::span<const ExponentVector> points) {
  if (points.empty()) return false;
  const AffineLattice lat = spanned_lattice(points);
  const auto full =
      simplex_difference_lattice(static_cast<int>(points.front().size()));
  const auto idx = linalg::lattice_index(lat.lattice, full);
  return !idx.infinite && idx.value == 1;
}

}  // namespace togliatti
