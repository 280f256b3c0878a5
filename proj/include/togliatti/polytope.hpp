#pragma once

// Convex hull structure (vertices and edges only) and lattice smoothness of
// point configurations, computed exactly in the affine lattice the points
// span.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "togliatti/linalg.hpp"
#include "togliatti/monomial.hpp"

namespace togliatti {

/// base + Z-span of {p - base : p in points}.
struct AffineLattice {
  ExponentVector base;
  linalg::IntegerLatticeBasis lattice;

  std::size_t rank() const noexcept { return lattice.rank(); }
  bool contains(const ExponentVector& p) const;
  /// Coordinates of p - base in the lattice basis; throws ContainmentError
  /// when p is not in the affine lattice.
  linalg::IntVector coordinates(const ExponentVector& p) const;
};

/// Base point is the lexicographically smallest point. Throws
/// InvalidArgument on empty input.
AffineLattice spanned_lattice(std::span<const ExponentVector> points);

/// {v in Z^{num_vars} : sum v = 0}, the difference lattice of dΔ.
linalg::IntegerLatticeBasis simplex_difference_lattice(int num_vars);

struct LatticePolytopeModel {
  std::vector<ExponentVector> points;  ///< sorted, distinct
  AffineLattice lattice;
  std::vector<linalg::IntVector> coords;  ///< per point, in lattice coordinates
  std::size_t dimension = 0;              ///< rank of the lattice
  std::vector<std::size_t> vertices;      ///< indices into points, ascending
  /// Pairs of point indices (first < second), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Vertices and edges of conv(points), decided by exact linear programs.
LatticePolytopeModel hull_structure(std::span<const ExponentVector> points);

/// Plain-text dump of vertices and edges in lattice coordinates.
std::string dump_model(const LatticePolytopeModel& model);

struct VertexRecord {
  ExponentVector vertex;
  std::size_t edge_count = 0;
  std::vector<linalg::IntVector> directions;  ///< primitive, lattice coords
  std::vector<linalg::Integer> smith;         ///< of the direction matrix
  linalg::Integer abs_det = 0;                ///< 0 unless edge_count == dim
  /// The first lattice point along every edge is itself one of the points,
  /// so the semigroup at this vertex is generated by the directions.
  bool edge_steps_present = false;
  std::optional<ExponentVector> missing_step;  ///< far end of the first such edge
  bool ok = false;
};

struct SmoothnessCertificate {
  bool smooth = false;
  std::size_t dimension = 0;
  /// Index of the spanned lattice in the difference lattice of dΔ; absent
  /// when the points do not share a degree.
  std::optional<linalg::LatticeIndex> index_in_simplex_lattice;
  std::vector<VertexRecord> vertices;
  std::optional<std::size_t> failure;  ///< index into vertices
  std::string failure_reason;
};

/// Every vertex has exactly dim edges whose primitive directions form a
/// basis of the spanned lattice, and each of those directions is realised
/// by a point of the set (the semigroup at the vertex is free).
SmoothnessCertificate smoothness_check(std::span<const ExponentVector> points);
SmoothnessCertificate smoothness_check(const LatticePolytopeModel& model);

/// Every x_i^d lies in the affine lattice spanned by the points.
bool contains_all_simplex_vertices(std::span<const ExponentVector> points);

/// The spanned lattice is the whole difference lattice of dΔ (index 1).
bool spans_full_lattice(std::span<const ExponentVector> points);

}  // namespace togliatti
