#include "togliatti/report.hpp"

#include <algorithm>
#include <sstream>

namespace togliatti {

using nlohmann::json;

namespace {

json exponents(const ExponentVector& m) {
  return json(std::vector<int>(m.entries().begin(), m.entries().end()));
}

json exponent_list(const std::vector<ExponentVector>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(exponents(m));
  return out;
}

json integers(const std::vector<linalg::Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json polynomial(const Polynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({{"monomial", exponents(m)}, {"coefficient", c.get_str()}});
  return out;
}

json edges(const std::vector<std::vector<bool>>& adj, bool undirected) {
  json out = json::array();
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = undirected ? i + 1 : 0; j < adj.size(); ++j)
      if (adj[i][j]) out.push_back({i, j});
  return out;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : json(nullptr);
}

json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"candidates", s.candidates},
          {"pruned_no_quadric", s.pruned_no_quadric},
          {"pruned_cardinality", s.pruned_cardinality},
          {"pruned_not_minimal", s.pruned_not_minimal},
          {"minimal_orbits", s.minimal_orbits},
          {"rejected_not_smooth", s.rejected_not_smooth},
          {"unchecked", s.unchecked}};
}

std::string generators_line(const MonomialSystem& sys) {
  std::string s;
  const auto& g = sys.generators();
  for (auto it = g.rbegin(); it != g.rend(); ++it) s += (s.empty() ? "" : " ") + to_string(*it);
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::vector<BoundRow> bound_table(int n_max) {
  std::vector<BoundRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    BoundRow row;
    row.n = n;
    row.bound = mu_upper_bound(n);
    const std::int64_t total = binomial(n + 3, 3);
    for (auto& p : valid_partitions(n)) {
      const std::int64_t mu = mu_formula(p);
      row.mu.push_back(mu);
      row.beta.push_back(total - mu);
      row.partitions.push_back(std::move(p));
    }
    row.max_mu = *std::max_element(row.mu.begin(), row.mu.end());
    for (std::size_t i = 0; i < row.mu.size(); ++i)
      if (row.mu[i] == row.max_mu) row.argmax.push_back(row.partitions[i]);
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const MonomialSystem& sys) {
  return {{"n", sys.n()},
          {"d", sys.d()},
          {"generators", exponent_list(sys.generators())},
          {"apolar", exponent_list(sys.apolar())},
          {"text", generators_line(sys)}};
}

json to_json(const QuadricForm& q) {
  json coeffs = json::array();
  for (const auto& c : q.coefficients()) coeffs.push_back(c.get_str());
  return {{"coefficients", coeffs}, {"text", to_string(q)}};
}

json to_json(const TogliattiVerdict& v) {
  json wlp = {{"fails", v.wlp.fails},
              {"has_kernel", v.wlp.has_kernel},
              {"rank", v.wlp.rank},
              {"source_dim", v.wlp.source_dim},
              {"target_dim", v.wlp.target_dim},
              {"within_bound", v.wlp.within_bound},
              {"witness", v.wlp.witness ? polynomial(*v.wlp.witness) : json(nullptr)}};
  json quadrics = json::array();
  for (const auto& q : v.quadrics) quadrics.push_back(to_json(q));
  json laplace = nullptr;
  if (v.laplace)
    laplace = {{"delta", v.laplace->delta},
               {"rank", v.laplace->rank},
               {"expected", v.laplace->expected}};
  json minimality = nullptr;
  if (v.minimality) {
    const auto& m = *v.minimality;
    minimality = {{"minimal", m.minimal},
                  {"quadric_space_dim", m.quadric_space_dim},
                  {"unique_quadric", optional_json(m.unique_quadric)},
                  {"violating_point",
                   m.violating_point ? exponents(*m.violating_point) : json(nullptr)},
                  {"vanishing_quadric", optional_json(m.vanishing_quadric)}};
  }
  return {{"artinian", v.artinian},
          {"cardinality_ok", v.cardinality_ok},
          {"wlp", wlp},
          {"restricted_dependent", v.restricted_dependent},
          {"quadric_space_dim", v.quadrics.size()},
          {"quadrics", quadrics},
          {"laplace", laplace},
          {"togliatti", v.togliatti},
          {"minimality", minimality}};
}

json to_json(const SmoothnessCertificate& s) {
  json vertices = json::array();
  for (const auto& r : s.vertices) {
    json dirs = json::array();
    for (const auto& d : r.directions) dirs.push_back(integers(d));
    vertices.push_back({{"vertex", exponents(r.vertex)},
                        {"edge_count", r.edge_count},
                        {"directions", dirs},
                        {"smith", integers(r.smith)},
                        {"abs_det", r.abs_det.get_str()},
                        {"edge_steps_present", r.edge_steps_present},
                        {"missing_step",
                         r.missing_step ? exponents(*r.missing_step) : json(nullptr)},
                        {"ok", r.ok}});
  }
  return {{"smooth", s.smooth},
          {"dimension", s.dimension},
          {"index_in_simplex_lattice",
           s.index_in_simplex_lattice ? json(s.index_in_simplex_lattice->to_string())
                                      : json(nullptr)},
          {"vertices", vertices},
          {"failure", s.failure ? json(*s.failure) : json(nullptr)},
          {"failure_reason", s.failure_reason}};
}

json to_json(const CheckReport& r) {
  json model = nullptr;
  if (r.model) {
    json verts = json::array();
    for (auto v : r.model->vertices) verts.push_back(exponents(r.model->points[v]));
    json es = json::array();
    for (const auto& [a, b] : r.model->edges)
      es.push_back({exponents(r.model->points[a]), exponents(r.model->points[b])});
    model = {{"dimension", r.model->dimension}, {"vertices", verts}, {"edges", es}};
  }
  return {{"system", to_json(r.system)},
          {"verdict", to_json(r.verdict)},
          {"smoothness", optional_json(r.smoothness)},
          {"polytope", model},
          {"gp_edges", r.gp ? edges(r.gp->adj, false) : json(nullptr)},
          {"gp_complement_edges",
           r.gp_complement ? edges(r.gp_complement->adj, true) : json(nullptr)},
          {"symmetric", r.symmetric},
          {"contains_simplex_vertices", r.contains_simplex_vertices},
          {"spans_full_lattice", r.spans_full_lattice},
          {"partition", r.partition ? json(to_string(*r.partition)) : json(nullptr)},
          {"family_match", r.family_match},
          {"partition_note", r.partition_note},
          {"warnings", r.warnings},
          {"minimal", r.minimal()},
          {"smooth", r.smooth()},
          {"smooth_minimal_togliatti", r.smooth_minimal_togliatti()}};
}

json to_json(const ClassificationResult& r) {
  json classes = json::array();
  for (const auto& c : r.classes)
    classes.push_back(
        {{"system", to_json(c.system)},
         {"partition", c.partition ? json(to_string(*c.partition)) : json(nullptr)},
         {"verdict", to_json(c.verdict)},
         {"smoothness", to_json(c.smoothness)}});
  return {{"n", r.n},
          {"max_s", r.max_s},
          {"complete", r.complete},
          {"tasks_done", r.tasks_done},
          {"tasks_total", r.tasks_total},
          {"stats", stats_json(r.stats)},
          {"classes", classes}};
}

json to_json(const VerifyReport& r) {
  json classes = json::array();
  for (std::size_t i = 0; i < r.class_sizes.size(); ++i)
    classes.push_back({{"partition", r.class_partitions[i]},
                       {"size", r.class_sizes[i]},
                       {"generators", exponent_list(r.search.classes[i].system.generators())}});
  return {{"n", r.n},
          {"status", to_string(r.status)},
          {"bound", r.bound},
          {"class_count", r.classes},
          {"classes", classes},
          {"expected_partitions", r.expected_partitions},
          {"equality_expected", r.equality_expected},
          {"equality_found", r.equality_found},
          {"failures", r.failures},
          {"search_complete", r.search.complete},
          {"tasks_done", r.search.tasks_done},
          {"tasks_total", r.search.tasks_total},
          {"stats", stats_json(r.search.stats)}};
}

json to_json(const FamilySystem& f, const CheckReport& check) {
  return {{"partition", to_string(f.spec)},
          {"n", f.spec.n()},
          {"mu", f.mu},
          {"beta", f.beta},
          {"bound", mu_upper_bound(f.spec.n())},
          {"witness_quadric", to_json(f.witness_quadric)},
          {"check", to_json(check)}};
}

json to_json(const std::vector<BoundRow>& table) {
  json rows = json::array();
  for (const auto& row : table) {
    json parts = json::array();
    for (std::size_t i = 0; i < row.partitions.size(); ++i)
      parts.push_back({{"partition", to_string(row.partitions[i])},
                       {"mu", row.mu[i]},
                       {"beta", row.beta[i]}});
    json argmax = json::array();
    for (const auto& p : row.argmax) argmax.push_back(to_string(p));
    rows.push_back({{"n", row.n},
                    {"bound", row.bound},
                    {"max_mu", row.max_mu},
                    {"argmax", argmax},
                    {"partitions", parts}});
  }
  return rows;
}

json envelope(const std::string& command, json payload) {
  return {{"schema", kReportSchema}, {"command", command}, {"result", std::move(payload)}};
}

std::string render_text(const CheckReport& r, bool verbose) {
  std::ostringstream out;
  const auto& v = r.verdict;
  out << "system      n=" << r.system.n() << " d=" << r.system.d()
      << " |S|=" << r.system.generators().size() << " |P|=" << r.system.apolar().size()
      << "\n";
  out << "S           " << generators_line(r.system) << "\n";
  out << "artinian    " << yes_no(v.artinian) << "\n";
  out << "|S| bound   " << (v.cardinality_ok ? "ok" : "exceeded") << " (C(n+d-1,n-1) = "
      << togliatti_cardinality_bound(r.system.n(), r.system.d()) << ")\n";
  out << "WLP         " << (v.wlp.fails ? "fails" : "holds") << " in degree d-1 (rank "
      << v.wlp.rank << " of " << v.wlp.target_dim << "x" << v.wlp.source_dim << ")\n";
  if (v.wlp.witness) out << "  kernel    " << to_string(*v.wlp.witness) << "\n";
  out << "restricted  " << (v.restricted_dependent ? "dependent" : "independent") << "\n";
  out << "quadrics    dim " << v.quadrics.size() << "\n";
  for (const auto& q : v.quadrics) out << "  " << to_string(q) << "\n";
  if (v.laplace) out << "laplace     delta " << v.laplace->delta << "\n";
  out << "togliatti   " << yes_no(v.togliatti) << "\n";
  if (v.minimality) {
    out << "minimal     " << yes_no(v.minimality->minimal) << "\n";
    if (v.minimality->violating_point)
      out << "  witness   " << to_string(*v.minimality->violating_point) << "\n";
  }
  if (r.smoothness) {
    out << "smooth      " << yes_no(r.smoothness->smooth) << " (dim "
        << r.smoothness->dimension << ")\n";
    if (!r.smoothness->smooth && !r.smoothness->failure_reason.empty())
      out << "  reason    " << r.smoothness->failure_reason << "\n";
    if (r.smoothness->index_in_simplex_lattice)
      out << "  index     " << r.smoothness->index_in_simplex_lattice->to_string() << "\n";
  }
  if (r.gp) {
    out << "G_P         " << r.gp->edge_count() << " arcs, "
        << (r.symmetric ? "symmetric" : "not symmetric") << "\n";
    out << "G_P'        " << r.gp_complement->edge_count() << " edges\n";
  }
  out << "vertices    " << yes_no(r.contains_simplex_vertices) << "\n";
  out << "full span   " << yes_no(r.spans_full_lattice) << "\n";
  out << "partition   " << (r.partition ? to_string(*r.partition) : "none");
  if (r.partition) out << (r.family_match ? " (family member)" : " (no family match)");
  out << "\n";
  if (!r.partition_note.empty()) out << "  note      " << r.partition_note << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  if (verbose) {
    if (r.model) out << "\npolytope\n" << dump_model(*r.model);
    if (r.gp) out << "\nG_P\n" << dump_graph(*r.gp) << "\nG_P'\n" << dump_graph(*r.gp_complement);
  }
  return out.str();
}

std::string render_text(const ClassificationResult& r) {
  std::ostringstream out;
  out << "n=" << r.n << " max|S|=" << r.max_s << " classes=" << r.classes.size()
      << (r.complete ? "" : " (search incomplete)") << "\n";
  out << "tasks " << r.tasks_done << "/" << r.tasks_total << ", nodes " << r.stats.nodes
      << ", candidates " << r.stats.candidates << ", minimal orbits "
      << r.stats.minimal_orbits << ", not smooth " << r.stats.rejected_not_smooth << "\n";
  for (const auto& c : r.classes)
    out << "  [" << (c.partition ? to_string(*c.partition) : "none") << "] |S|="
        << c.system.generators().size() << "  " << generators_line(c.system) << "\n";
  return out.str();
}

std::string render_text(const VerifyReport& r) {
  std::ostringstream out;
  out << "verify n=" << r.n << ": " << to_string(r.status) << "\n";
  out << "classes " << r.classes << ", expected " << r.expected_partitions.size()
      << ", bound " << r.bound << "\n";
  for (std::size_t i = 0; i < r.class_sizes.size(); ++i)
    out << "  [" << r.class_partitions[i] << "] |S|=" << r.class_sizes[i]
        << (r.class_sizes[i] == r.bound ? " (equality)" : "") << "\n";
  if (!r.search.complete)
    out << "search stopped after " << r.search.tasks_done << "/" << r.search.tasks_total
        << " tasks\n";
  for (const auto& f : r.failures) out << "failure: " << f << "\n";
  return out.str();
}

std::string render_text(const FamilySystem& f, const CheckReport& check) {
  std::ostringstream out;
  out << "partition " << to_string(f.spec) << " (n=" << f.spec.n() << ")\n";
  out << "mu=" << f.mu << " beta=" << f.beta << " bound=" << mu_upper_bound(f.spec.n())
      << "\n";
  out << "quadric   " << to_string(f.witness_quadric) << "\n";
  out << render_text(check, false);
  return out.str();
}

std::string render_text(const std::vector<BoundRow>& table) {
  std::ostringstream out;
  for (const auto& row : table) {
    out << "n=" << row.n << " bound=" << row.bound << " max_mu=" << row.max_mu
        << " argmax:";
    for (const auto& p : row.argmax) out << " (" << to_string(p) << ")";
    out << "\n";
    for (std::size_t i = 0; i < row.partitions.size(); ++i)
      out << "  (" << to_string(row.partitions[i]) << ") mu=" << row.mu[i]
          << " beta=" << row.beta[i] << "\n";
  }
  return out.str();
}

}  // namespace togliatti
