#pragma once

// Exhaustive search for minimal smooth monomial Togliatti systems of cubics,
// the full per-system report behind `check`, and the theorem verifier
// behind `verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "togliatti/family.hpp"
#include "togliatti/graphs.hpp"
#include "togliatti/lefschetz.hpp"
#include "togliatti/monomial.hpp"
#include "togliatti/polytope.hpp"

namespace togliatti {

struct SearchConfig {
  int n = 2;
  /// Largest |S| considered; defaults to C(n+2, 3).
  std::optional<int> max_s;
  /// Cut a branch as soon as no quadric passes through the points already
  /// placed in P. Off means every full assignment is visited.
  bool quadric_pruning = true;
  /// The unique quadric must also be nonzero on the pure cubes. Off applies
  /// the subset definition instead: no non-cube generator can be dropped.
  bool cubes_in_minimality = true;
  double budget_seconds = 0;  ///< 0 means unlimited
  int jobs = 0;               ///< OpenMP threads; 0 uses the runtime default
  /// Shuffles the order in which prefix tasks are scheduled. Results never
  /// depend on it.
  std::uint64_t seed = 0;
  int prefix_depth = 8;  ///< decisions fixed per parallel task

  int effective_max_s() const;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;  ///< full (S, P) pairs reached
  std::uint64_t pruned_no_quadric = 0;
  std::uint64_t pruned_cardinality = 0;
  std::uint64_t pruned_not_minimal = 0;
  std::uint64_t minimal_orbits = 0;  ///< distinct minimal systems up to symmetry
  std::uint64_t rejected_not_smooth = 0;
  std::uint64_t unchecked = 0;  ///< orbits left unexamined when the budget ran out

  SearchStats& operator+=(const SearchStats& o);
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct ClassEntry {
  MonomialSystem system;  ///< canonical form
  std::optional<PartitionSpec> partition;
  TogliattiVerdict verdict;
  SmoothnessCertificate smoothness;
};

struct ClassificationResult {
  int n = 0;
  int max_s = 0;
  bool complete = true;
  std::size_t tasks_done = 0;
  std::size_t tasks_total = 0;
  std::vector<ClassEntry> classes;  ///< sorted by canonical generators
  SearchStats stats;
  double wall_seconds = 0;  ///< not part of the deterministic report
};

/// OpenMP search over disjoint prefix tasks; results merged in task order.
ClassificationResult enumerate_minimal_smooth(const SearchConfig& config);

/// Single-threaded depth-first search from the root; kept as the reference
/// the parallel search is tested against.
ClassificationResult enumerate_minimal_smooth_serial(const SearchConfig& config);

/// Exit-code style outcome.
enum class Status { Pass = 0, Fail = 1, Inconclusive = 3 };
const char* to_string(Status s);

struct CheckReport {
  MonomialSystem system;
  TogliattiVerdict verdict;
  std::optional<SmoothnessCertificate> smoothness;  ///< d == 3, P nonempty
  std::optional<LatticePolytopeModel> model;
  std::optional<DirectedSystemGraph> gp;
  std::optional<ComplementSystemGraph> gp_complement;
  bool symmetric = false;
  bool contains_simplex_vertices = false;
  bool spans_full_lattice = false;
  std::optional<PartitionSpec> partition;  ///< extracted from G_P'
  bool family_match = false;  ///< system is a permuted family_system(partition)
  std::string partition_note;
  std::vector<std::string> warnings;

  bool minimal() const {
    return verdict.minimality && verdict.minimality->minimal;
  }
  bool smooth() const { return smoothness && smoothness->smooth; }
  bool smooth_minimal_togliatti() const {
    return verdict.togliatti && minimal() && smooth();
  }
};

/// Every predicate on one system, mutually cross-checked. Inconsistent
/// sub-verdicts raise InternalError.
CheckReport check_command(const MonomialSystem& sys);

struct VerifyReport {
  int n = 0;
  Status status = Status::Pass;
  std::int64_t bound = 0;
  std::size_t classes = 0;
  std::vector<std::string> class_partitions;  ///< "2,1,1" or "none"
  std::vector<std::int64_t> class_sizes;      ///< |S| per class
  std::vector<std::string> expected_partitions;
  std::vector<std::string> equality_expected;
  std::vector<std::string> equality_found;
  std::vector<std::string> failures;  ///< counterexample payloads
  ClassificationResult search;
};

/// Compares the enumerated classes with the partition family, checks the
/// cardinality bound and its equality cases, and the structural properties
/// of every class. A partial search yields Inconclusive, never Pass.
VerifyReport verify_theorem(int n, double budget_seconds = 0, int jobs = 0,
                            const FamilyGenerator& generator = family_system);

}  // namespace togliatti
