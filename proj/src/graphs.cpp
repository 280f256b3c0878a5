#include "togliatti/graphs.hpp"

#include <algorithm>
#include <sstream>

#include "togliatti/errors.hpp"
#include "togliatti/polytope.hpp"

namespace togliatti {

namespace {

void require_cubic(const MonomialSystem& sys) {
  if (sys.d() != 3) throw PreconditionError("graphs are defined for cubic systems");
}

ExponentVector cubic(int nv, int i, int ei, int j, int ej, int k = -1, int ek = 0) {
  std::vector<int> e(static_cast<std::size_t>(nv), 0);
  e[static_cast<std::size_t>(i)] += ei;
  e[static_cast<std::size_t>(j)] += ej;
  if (k >= 0) e[static_cast<std::size_t>(k)] += ek;
  return ExponentVector(std::move(e));
}

std::size_t count_edges(const std::vector<std::vector<bool>>& adj) {
  std::size_t c = 0;
  for (const auto& row : adj) c += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  return c;
}

}  // namespace

std::size_t DirectedSystemGraph::edge_count() const { return count_edges(adj); }
std::size_t ComplementSystemGraph::edge_count() const { return count_edges(adj) / 2; }

DirectedSystemGraph build_gp(const MonomialSystem& sys) {
  require_cubic(sys);
  const int nv = sys.num_vars();
  DirectedSystemGraph g{nv, std::vector<std::vector<bool>>(
                                static_cast<std::size_t>(nv),
                                std::vector<bool>(static_cast<std::size_t>(nv), false))};
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j)
      if (i != j && sys.in_apolar(cubic(nv, i, 2, j, 1)))
        g.adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  return g;
}

ComplementSystemGraph build_gp_complement(const MonomialSystem& sys) {
  const DirectedSystemGraph gp = build_gp(sys);
  const int nv = gp.num_vertices;
  ComplementSystemGraph g{nv,
                          std::vector<std::vector<bool>>(
                              static_cast<std::size_t>(nv),
                              std::vector<bool>(static_cast<std::size_t>(nv), false)),
                          {}};
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      const bool ij = gp.has_edge(i, j), ji = gp.has_edge(j, i);
      if (ij != ji) {
        g.warnings.push_back("asymmetric pair (" + std::to_string(i) + "," +
                             std::to_string(j) + "): only x" +
                             std::to_string(ij ? i : j) + "^2*x" +
                             std::to_string(ij ? j : i) + " is in P");
      }
      if (!ij && !ji) {
        g.adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        g.adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
      }
    }
  }
  return g;
}

bool check_symmetry(const MonomialSystem& sys) {
  const DirectedSystemGraph g = build_gp(sys);
  for (int i = 0; i < g.num_vertices; ++i)
    for (int j = i + 1; j < g.num_vertices; ++j)
      if (g.has_edge(i, j) != g.has_edge(j, i)) return false;
  return true;
}

std::vector<std::vector<int>> complement_components(const ComplementSystemGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.num_vertices), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.num_vertices; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w = 0; w < g.num_vertices; ++w)
        if (g.has_edge(v, w) && comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

PartitionSpec extract_partition(const MonomialSystem& sys) {
  if (!check_symmetry(sys))
    throw PreconditionError("G_P is not symmetric; partition extraction undefined");
  const ComplementSystemGraph g = build_gp_complement(sys);
  std::vector<int> sizes;
  for (const auto& comp : complement_components(g)) {
    for (int j : comp)
      for (int i : comp)
        for (int k : comp)
          if (i < k && i != j && k != j && g.has_edge(i, j) && g.has_edge(j, k) &&
              !g.has_edge(i, k))
            throw StructureFailure("component of G_P' is not complete: (" +
                                       std::to_string(i) + "," + std::to_string(j) +
                                       "), (" + std::to_string(j) + "," +
                                       std::to_string(k) + ") present, (" +
                                       std::to_string(i) + "," + std::to_string(k) +
                                       ") missing",
                                   i, j, k);
    sizes.push_back(static_cast<int>(comp.size()));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  try {
    return PartitionSpec(sizes);
  } catch (const InvalidArgument& e) {
    throw StructureFailure(std::string("components do not form a family partition: ") +
                               e.what(),
                           -1, -1, -1);
  }
}

TypedVertexGraph typed_vertex_graph(std::span<const ExponentVector> points, int i0) {
  if (points.empty()) throw InvalidArgument("typed graph of an empty set");
  const int nv = static_cast<int>(points.front().size());
  if (points.front().degree() != 3)
    throw PreconditionError("typed graph is defined for cubic points");
  if (i0 < 0 || i0 >= nv) throw InvalidArgument("i0 out of range");

  const AffineLattice lat = spanned_lattice(points);
  TypedVertexGraph g;
  g.i0 = i0;
  g.degenerate = lat.contains(ExponentVector::pure_power(nv, i0, 3));
  for (int i = 0; i < nv; ++i) {
    if (i == i0) continue;
    const bool a = lat.contains(cubic(nv, i0, 2, i, 1));
    const bool b = lat.contains(cubic(nv, i0, 1, i, 2));
    g.labels.push_back(i);
    g.types.push_back(a && b ? EdgeType::Both : a ? EdgeType::A : b ? EdgeType::B : EdgeType::C);
  }
  const std::size_t k = g.labels.size();
  g.adj.assign(k, std::vector<bool>(k, false));
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p + 1; q < k; ++q)
      if (lat.contains(cubic(nv, i0, 1, g.labels[p], 1, g.labels[q], 1)))
        g.adj[p][q] = g.adj[q][p] = true;
  return g;
}

char to_char(EdgeType t) {
  switch (t) {
    case EdgeType::A: return 'a';
    case EdgeType::B: return 'b';
    case EdgeType::C: return 'c';
    case EdgeType::Both: return '*';
  }
  return '?';
}

namespace {

template <class G>
std::string dump_adjacency(const G& g, const char* arrow) {
  std::ostringstream out;
  for (int i = 0; i < g.num_vertices; ++i) {
    out << "v" << i << " " << arrow;
    for (int j = 0; j < g.num_vertices; ++j)
      if (g.has_edge(i, j)) out << " v" << j;
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string dump_graph(const DirectedSystemGraph& g) { return dump_adjacency(g, "->"); }
std::string dump_graph(const ComplementSystemGraph& g) { return dump_adjacency(g, "--"); }

}  // namespace togliatti
