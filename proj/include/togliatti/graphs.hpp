#pragma once

// Combinatorial graphs attached to a cubic system: the directed graph G_P
// (i -> j iff x_i^2 x_j is in P), its undirected complement G_P', and the
// a/b/c-typed graph at a vertex x_{i0}^3 of 3Δ.

#include <span>
#include <string>
#include <vector>

#include "togliatti/family.hpp"
#include "togliatti/monomial.hpp"

namespace togliatti {

struct DirectedSystemGraph {
  int num_vertices = 0;
  std::vector<std::vector<bool>> adj;  ///< adj[i][j]: edge i -> j

  bool has_edge(int i, int j) const {
    return adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  std::size_t edge_count() const;
};

struct ComplementSystemGraph {
  int num_vertices = 0;
  std::vector<std::vector<bool>> adj;  ///< symmetric
  /// Pairs where exactly one of x_i^2 x_j, x_j^2 x_i is in P.
  std::vector<std::string> warnings;

  bool has_edge(int i, int j) const {
    return adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  std::size_t edge_count() const;
};

/// d == 3 required (PreconditionError otherwise).
DirectedSystemGraph build_gp(const MonomialSystem& sys);
ComplementSystemGraph build_gp_complement(const MonomialSystem& sys);

/// Every edge of G_P has its reverse.
bool check_symmetry(const MonomialSystem& sys);

/// Component sizes of G_P' as a partition. Throws StructureFailure when a
/// component is not complete (witness (i, j, k) with ij, jk edges and ik
/// missing) or when the sizes do not form a partition of the classified
/// family; PreconditionError when G_P is not symmetric.
PartitionSpec extract_partition(const MonomialSystem& sys);

/// Connected components of G_P', each sorted, ordered by smallest member.
std::vector<std::vector<int>> complement_components(const ComplementSystemGraph& g);

enum class EdgeType { A, B, C, Both };

struct TypedVertexGraph {
  int i0 = 0;
  /// x_{i0}^3 lies in the spanned lattice; the typing is then vacuous.
  bool degenerate = false;
  std::vector<int> labels;         ///< the indices i != i0, ascending
  std::vector<EdgeType> types;     ///< parallel to labels
  std::vector<std::vector<bool>> adj;  ///< over positions in labels
};

/// Types each edge x_{i0}^3 -- x_i^3 of 3Δ by affine-lattice membership of
/// x_{i0}^2 x_i (a) and x_{i0} x_i^2 (b); joins i, j when x_{i0} x_i x_j is
/// in the lattice.
TypedVertexGraph typed_vertex_graph(std::span<const ExponentVector> points, int i0);

char to_char(EdgeType t);

/// Adjacency-list dumps, one vertex per line.
std::string dump_graph(const DirectedSystemGraph& g);
std::string dump_graph(const ComplementSystemGraph& g);

}  // namespace togliatti
