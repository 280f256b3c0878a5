#include "togliatti/family.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "togliatti/errors.hpp"

namespace togliatti {

PartitionSpec::PartitionSpec(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("empty partition");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be non-increasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0) - 1;
  if (parts_.front() > n_ - 1)
    throw InvalidArgument("largest part " + std::to_string(parts_.front()) +
                          " exceeds n-1 = " + std::to_string(n_ - 1));
}

std::vector<int> PartitionSpec::group_of() const {
  std::vector<int> out;
  for (std::size_t g = 0; g < parts_.size(); ++g)
    out.insert(out.end(), static_cast<std::size_t>(parts_[g]), static_cast<int>(g));
  return out;
}

std::string to_string(const PartitionSpec& p) {
  std::string s;
  for (std::size_t i = 0; i < p.parts().size(); ++i)
    s += (i ? "," : "") + std::to_string(p.parts()[i]);
  return s;
}

PartitionSpec parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw InvalidArgument("bad part");
      parts.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidArgument("malformed partition '" + text + "'");
    }
  }
  return PartitionSpec(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PartitionSpec> valid_partitions(int n) {
  if (n < 2) return {};
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  partitions_rec(n + 1, n - 1, cur, raw);
  std::vector<PartitionSpec> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

std::int64_t mu_formula(const PartitionSpec& spec) {
  const auto& a = spec.parts();
  std::int64_t mu = 0;
  for (int ai : a) mu += binomial(ai + 2, 3);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      for (std::size_t h = j + 1; h < a.size(); ++h)
        mu += static_cast<std::int64_t>(a[i]) * a[j] * a[h];
  return mu;
}

std::int64_t mu_upper_bound(int n) { return binomial(n + 1, 3) + n + 1; }

QuadricForm witness_quadric(const PartitionSpec& spec) {
  const int nv = spec.n() + 1;
  const auto group = spec.group_of();
  QuadricForm q(nv);
  for (int i = 0; i < nv; ++i) {
    q.set_diag(i, 2);
    for (int j = i + 1; j < nv; ++j)
      q.set_cross(i, j, group[static_cast<std::size_t>(i)] == group[static_cast<std::size_t>(j)] ? 4 : -5);
  }
  return q;
}

FamilySystem family_system(const PartitionSpec& spec) {
  const int n = spec.n();
  const auto group = spec.group_of();
  std::vector<ExponentVector> gens;
  for (const auto& m : lattice_points_simplex(n, 3)) {
    std::vector<int> support;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) support.push_back(group[i]);
    const bool one_group =
        std::all_of(support.begin(), support.end(),
                    [&](int g) { return g == support.front(); });
    bool three_groups = false;
    if (support.size() == 3) {
      std::sort(support.begin(), support.end());
      three_groups = std::adjacent_find(support.begin(), support.end()) == support.end();
    }
    if (one_group || three_groups) gens.push_back(m);
  }
  auto sys = MonomialSystem::from_generators(n, 3, std::move(gens));
  const auto mu = static_cast<std::int64_t>(sys.generators().size());
  const auto beta = static_cast<std::int64_t>(sys.apolar().size());
  if (mu != mu_formula(spec))
    throw InternalError("generator count " + std::to_string(mu) +
                        " differs from the closed formula for " + to_string(spec));
  return FamilySystem{spec, std::move(sys), mu, beta, witness_quadric(spec)};
}

std::vector<PartitionSpec> equality_partitions(int n) {
  std::vector<PartitionSpec> out;
  for (auto& p : valid_partitions(n))
    if (mu_formula(p) == mu_upper_bound(n)) out.push_back(std::move(p));
  return out;
}

}  // namespace togliatti
