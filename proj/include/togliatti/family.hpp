#pragma once

// The partition family: for n+1 = a_1 + ... + a_s with n-1 >= a_1 >= ... >=
// a_s >= 1, the generators are all cubics supported in a single group of
// consecutive variables plus the squarefree cubics meeting three different
// groups.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "togliatti/lefschetz.hpp"
#include "togliatti/monomial.hpp"

namespace togliatti {

class PartitionSpec {
 public:
  /// Validates: positive, non-increasing, a_1 <= n-1 where n = sum - 1.
  explicit PartitionSpec(std::vector<int> parts);

  int n() const noexcept { return n_; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  /// Group index of each variable x_0..x_n.
  std::vector<int> group_of() const;

  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
  friend auto operator<=>(const PartitionSpec& a, const PartitionSpec& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::string to_string(const PartitionSpec& p);  // "2,1,1"

/// Parses "2,1,1"; throws InvalidArgument.
PartitionSpec parse_partition(const std::string& text);

/// All valid specs with the given n, in decreasing lexicographic order.
std::vector<PartitionSpec> valid_partitions(int n);

struct FamilySystem {
  PartitionSpec spec;
  MonomialSystem sys;
  std::int64_t mu = 0;
  std::int64_t beta = 0;
  QuadricForm witness_quadric;
};

FamilySystem family_system(const PartitionSpec& spec);

/// C(a_1+2, 3) + ... + C(a_s+2, 3) + sum_{i<j<h} a_i a_j a_h
std::int64_t mu_formula(const PartitionSpec& spec);

/// C(n+1, 3) + n + 1
std::int64_t mu_upper_bound(int n);

/// 2 on the diagonal, 4 for pairs inside a group, -5 across groups.
QuadricForm witness_quadric(const PartitionSpec& spec);

/// Valid partitions attaining mu_upper_bound(n), found by enumeration.
std::vector<PartitionSpec> equality_partitions(int n);

/// Hook for negative-control tests of the theorem verifier.
using FamilyGenerator = std::function<FamilySystem(const PartitionSpec&)>;

}  // namespace togliatti
