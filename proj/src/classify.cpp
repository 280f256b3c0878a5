#include "togliatti/classify.hpp"

#include <algorithm>
#include <map>

#include "togliatti/errors.hpp"

namespace togliatti {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

CheckReport check_command(const MonomialSystem& sys) {
  CheckReport r{sys, togliatti_verdict(sys), {}, {}, {}, {}, false, false, false, {}, false, {}, {}};
  if (!r.verdict.cardinality_ok)
    r.warnings.push_back("|S| = " + std::to_string(sys.generators().size()) +
                         " exceeds C(n+d-1, n-1) = " +
                         std::to_string(togliatti_cardinality_bound(sys.n(), sys.d())));
  if (!r.verdict.artinian) r.warnings.push_back("S misses a pure power; not artinian");

  const auto& p = sys.apolar();
  if (!p.empty()) {
    r.model = hull_structure(p);
    r.smoothness = smoothness_check(*r.model);
    r.contains_simplex_vertices = contains_all_simplex_vertices(p);
    r.spans_full_lattice = spans_full_lattice(p);
  }
  if (sys.d() != 3) {
    r.partition_note = "graphs are defined for cubics only";
    return r;
  }

  r.gp = build_gp(sys);
  r.gp_complement = build_gp_complement(sys);
  r.symmetric = check_symmetry(sys);
  for (const auto& w : r.gp_complement->warnings) r.warnings.push_back(w);
  if (!r.symmetric) {
    r.partition_note = "G_P is not symmetric";
    return r;
  }
  try {
    r.partition = extract_partition(sys);
    r.family_match =
        canonical_form(family_system(*r.partition).sys) == canonical_form(sys);
    if (!r.family_match) r.partition_note = "system differs from the family member";
  } catch (const StructureFailure& e) {
    r.partition_note = e.what();
  }
  return r;
}

namespace {

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

VerifyReport verify_theorem(int n, double budget_seconds, int jobs,
                            const FamilyGenerator& generator) {
  if (n < 2) throw InvalidArgument("verify needs n >= 2");
  VerifyReport rep;
  rep.n = n;
  rep.bound = mu_upper_bound(n);

  SearchConfig config;
  config.n = n;
  config.budget_seconds = budget_seconds;
  config.jobs = jobs;
  rep.search = enumerate_minimal_smooth(config);
  rep.classes = rep.search.classes.size();

  std::map<std::vector<ExponentVector>, std::string> expected;
  for (const auto& part : valid_partitions(n)) {
    const std::string name = to_string(part);
    rep.expected_partitions.push_back(name);
    expected.emplace(canonical_form(generator(part).sys).generators(), name);
  }
  for (const auto& part : equality_partitions(n))
    rep.equality_expected.push_back(to_string(part));

  // Failures that a partial search cannot undo.
  std::vector<std::string> definite;
  std::map<std::string, bool> seen;
  for (const auto& c : rep.search.classes) {
    const auto& gens = c.system.generators();
    const auto size = static_cast<std::int64_t>(gens.size());
    const auto it = expected.find(gens);
    const std::string name = it == expected.end() ? "none" : it->second;
    rep.class_partitions.push_back(name);
    rep.class_sizes.push_back(size);
    if (it == expected.end())
      definite.push_back("class outside the family: " + serialize(c.system));
    else
      seen[name] = true;
    if (size > rep.bound)
      definite.push_back("|S| = " + std::to_string(size) + " exceeds bound " +
                         std::to_string(rep.bound) + ": " + serialize(c.system));
    if (size == rep.bound) rep.equality_found.push_back(name);

    const auto& pts = c.system.apolar();
    if (!check_symmetry(c.system))
      definite.push_back("G_P not symmetric: " + serialize(c.system));
    if (!contains_all_simplex_vertices(pts))
      definite.push_back("P's lattice misses a vertex of 3Δ: " + serialize(c.system));
    if (!spans_full_lattice(pts))
      definite.push_back("P does not span the full lattice: " + serialize(c.system));
  }

  std::vector<std::string> missing;
  for (const auto& name : rep.expected_partitions)
    if (!seen.count(name)) missing.push_back("family class not found: partition " + name);
  if (sorted(rep.equality_found) != sorted(rep.equality_expected)) {
    std::string found, want;
    for (const auto& s : sorted(rep.equality_found)) found += " (" + s + ")";
    for (const auto& s : sorted(rep.equality_expected)) want += " (" + s + ")";
    missing.push_back("equality cases differ: found" + found + ", expected" + want);
  }

  rep.failures = definite;
  if (!definite.empty()) {
    rep.status = Status::Fail;
  } else if (!rep.search.complete) {
    rep.status = Status::Inconclusive;
  } else if (!missing.empty()) {
    rep.status = Status::Fail;
  }
  if (rep.search.complete)
    rep.failures.insert(rep.failures.end(), missing.begin(), missing.end());
  return rep;
}

}  // namespace togliatti
