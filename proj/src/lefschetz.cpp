#include "togliatti/lefschetz.hpp"

#include <algorithm>
#include <map>

#include "togliatti/errors.hpp"

namespace togliatti {

using linalg::Integer;
using linalg::IntVector;
using linalg::Rational;
using linalg::RationalMatrix;
using linalg::RatVector;

std::int64_t togliatti_cardinality_bound(int n, int d) {
  return binomial(n + d - 1, n - 1);
}

namespace {

void require_artinian(const MonomialSystem& sys) {
  if (!sys.is_artinian())
    throw PreconditionError("system is not artinian: some x_i^d is not a generator");
}

std::size_t index_of(const std::vector<ExponentVector>& sorted,
                     const ExponentVector& m) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), m);
  if (it == sorted.end() || *it != m) return sorted.size();
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

MultiplicationMap build_multiplication_map(const MonomialSystem& sys) {
  require_artinian(sys);
  MultiplicationMap out;
  out.source = sys.d() >= 2 ? lattice_points_simplex(sys.n(), sys.d() - 1)
                            : std::vector<ExponentVector>{
                                  ExponentVector(std::vector<int>(
                                      static_cast<std::size_t>(sys.num_vars()), 0))};
  out.target = sys.apolar();
  out.matrix = RationalMatrix(out.target.size(), out.source.size());
  for (std::size_t c = 0; c < out.source.size(); ++c) {
    for (int i = 0; i < sys.num_vars(); ++i) {
      ExponentVector prod =
          out.source[c] + ExponentVector::pure_power(sys.num_vars(), i, 1);
      std::size_t r = index_of(out.target, prod);
      if (r < out.target.size()) out.matrix(r, c) += 1;
    }
  }
  return out;
}

WlpResult fails_wlp_in_degree_dminus1(const MonomialSystem& sys) {
  MultiplicationMap map = build_multiplication_map(sys);
  WlpResult out;
  out.source_dim = map.source.size();
  out.target_dim = map.target.size();
  out.within_bound = static_cast<std::int64_t>(sys.generators().size()) <=
                     togliatti_cardinality_bound(sys.n(), sys.d());
  auto kernel = linalg::kernel_basis(map.matrix);
  out.rank = out.source_dim - kernel.size();
  out.has_kernel = !kernel.empty();
  out.fails = out.rank < std::min(out.source_dim, out.target_dim);
  if (!kernel.empty()) {
    Polynomial f(sys.num_vars());
    for (std::size_t c = 0; c < map.source.size(); ++c)
      f.add_term(map.source[c], Rational(kernel.front()[c]));
    out.witness = std::move(f);
  }
  return out;
}

bool product_lies_in_ideal(const MonomialSystem& sys, const Polynomial& f) {
  Polynomial lf = Polynomial::sum_of_variables(sys.num_vars()) * f;
  return std::all_of(lf.terms().begin(), lf.terms().end(),
                     [&](const auto& t) { return sys.in_generators(t.first); });
}

bool restricted_dependence(const MonomialSystem& sys) {
  require_artinian(sys);
  const int vars = sys.n();  // x_0..x_{n-1} survive the substitution
  Polynomial minus_sum(vars);
  for (int i = 0; i < vars; ++i)
    minus_sum.add_term(ExponentVector::pure_power(vars, i, 1), -1);

  std::vector<Polynomial> restricted;
  restricted.reserve(sys.generators().size());
  std::map<ExponentVector, std::size_t> column;
  for (const auto& g : sys.generators()) {
    std::vector<int> head(g.entries().begin(), g.entries().end() - 1);
    Polynomial p(vars);
    p.add_term(ExponentVector(std::move(head)), 1);
    for (int k = 0; k < g[static_cast<std::size_t>(vars)]; ++k) p = p * minus_sum;
    for (const auto& [m, c] : p.terms()) column.try_emplace(m, column.size());
    restricted.push_back(std::move(p));
  }

  RationalMatrix coeffs(restricted.size(), column.size());
  for (std::size_t r = 0; r < restricted.size(); ++r)
    for (const auto& [m, c] : restricted[r].terms()) coeffs(r, column.at(m)) = c;
  return linalg::rank(coeffs) < restricted.size();
}

// ---------------------------------------------------------------------------
// Quadrics

QuadricForm::QuadricForm(int num_vars)
    : num_vars_(num_vars),
      diag_(static_cast<std::size_t>(num_vars)),
      cross_(static_cast<std::size_t>(num_vars * (num_vars - 1) / 2)) {}

QuadricForm QuadricForm::from_coefficients(int num_vars,
                                           std::span<const Rational> coeffs) {
  QuadricForm q(num_vars);
  if (coeffs.size() != q.diag_.size() + q.cross_.size())
    throw InvalidArgument("wrong number of quadric coefficients");
  std::copy_n(coeffs.begin(), q.diag_.size(), q.diag_.begin());
  std::copy(coeffs.begin() + static_cast<std::ptrdiff_t>(q.diag_.size()),
            coeffs.end(), q.cross_.begin());
  return q;
}

std::size_t QuadricForm::cross_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == j || i < 0 || j >= num_vars_) throw InvalidArgument("bad cross index");
  // Pairs (0,1),(0,2),...,(0,n),(1,2),...
  return static_cast<std::size_t>(i * (2 * num_vars_ - i - 1) / 2 + (j - i - 1));
}

const Rational& QuadricForm::cross(int i, int j) const {
  return cross_[cross_index(i, j)];
}

void QuadricForm::set_cross(int i, int j, Rational v) {
  cross_[cross_index(i, j)] = std::move(v);
}

Rational QuadricForm::evaluate(const ExponentVector& a) const {
  Rational s = 0;
  for (int i = 0; i < num_vars_; ++i) {
    const int ai = a[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    s += diag_[static_cast<std::size_t>(i)] * (ai * ai);
    for (int j = i + 1; j < num_vars_; ++j)
      s += cross(i, j) * (ai * a[static_cast<std::size_t>(j)]);
  }
  return s;
}

RatVector QuadricForm::coefficients() const {
  RatVector out = diag_;
  out.insert(out.end(), cross_.begin(), cross_.end());
  return out;
}

bool QuadricForm::proportional_to(const QuadricForm& other) const {
  if (num_vars_ != other.num_vars_) return false;
  RatVector a = coefficients(), b = other.coefficients();
  std::size_t k = 0;
  while (k < a.size() && a[k] == 0) ++k;
  if (k == a.size() || b[k] == 0)
    return k == a.size() && std::all_of(b.begin(), b.end(),
                                        [](const Rational& x) { return x == 0; });
  const Rational scale = b[k] / a[k];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] * scale != b[i]) return false;
  return true;
}

std::string to_string(const QuadricForm& q) {
  Polynomial p(q.num_vars());
  for (int i = 0; i < q.num_vars(); ++i) {
    p.add_term(ExponentVector::pure_power(q.num_vars(), i, 2), q.diag(i));
    for (int j = i + 1; j < q.num_vars(); ++j)
      p.add_term(ExponentVector::pure_power(q.num_vars(), i, 1) +
                     ExponentVector::pure_power(q.num_vars(), j, 1),
                 q.cross(i, j));
  }
  return to_string(p);
}

RationalMatrix quadric_evaluation_matrix(std::span<const ExponentVector> points,
                                         int num_vars) {
  const auto nv = static_cast<std::size_t>(num_vars);
  RationalMatrix m(points.size(), nv + nv * (nv - 1) / 2);
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto& a = points[r];
    if (a.size() != nv) throw InvalidArgument("point has wrong dimension");
    std::size_t c = 0;
    for (std::size_t i = 0; i < nv; ++i) m(r, c++) = a[i] * a[i];
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = i + 1; j < nv; ++j) m(r, c++) = a[i] * a[j];
  }
  return m;
}

std::vector<QuadricForm> quadric_space(std::span<const ExponentVector> points,
                                       int num_vars) {
  std::vector<QuadricForm> out;
  for (const auto& v :
       linalg::kernel_basis(quadric_evaluation_matrix(points, num_vars))) {
    RatVector coeffs(v.begin(), v.end());
    out.push_back(QuadricForm::from_coefficients(num_vars, coeffs));
  }
  return out;
}

MinimalityCertificate is_minimal_togliatti(const MonomialSystem& sys) {
  if (sys.d() != 3) throw PreconditionError("minimality criterion needs d == 3");
  require_artinian(sys);
  if (static_cast<std::int64_t>(sys.generators().size()) >
      togliatti_cardinality_bound(sys.n(), 3))
    throw PreconditionError("|S| exceeds C(n+2, 3): not a Togliatti system");
  if (!fails_wlp_in_degree_dminus1(sys).fails)
    throw PreconditionError("system has the WLP in degree 2: not a Togliatti system");

  MinimalityCertificate out;
  auto quadrics = quadric_space(sys.apolar(), sys.num_vars());
  out.quadric_space_dim = quadrics.size();
  if (quadrics.size() == 1) {
    out.unique_quadric = quadrics.front();
    for (const auto& m : sys.generators()) {
      if (quadrics.front().evaluate(m) == 0) {
        out.violating_point = m;
        out.vanishing_quadric = quadrics.front();
        return out;
      }
    }
    out.minimal = true;
    return out;
  }
  // dim >= 2: some nonzero quadric through P also passes through any chosen
  // extra point. Prefer a generator that is not a pure cube.
  auto it = std::find_if(sys.generators().begin(), sys.generators().end(),
                         [](const ExponentVector& m) { return !m.is_pure_power(); });
  if (it == sys.generators().end()) it = sys.generators().begin();
  std::vector<ExponentVector> extended = sys.apolar();
  extended.push_back(*it);
  auto through = quadric_space(extended, sys.num_vars());
  if (through.empty())
    throw InternalError("quadric space of dim >= 2 lost all quadrics at one point");
  out.violating_point = *it;
  out.vanishing_quadric = through.front();
  return out;
}

bool is_minimal_by_subsets(const MonomialSystem& sys) {
  require_artinian(sys);
  for (const auto& m : sys.generators()) {
    if (m.is_pure_power()) continue;
    std::vector<ExponentVector> smaller;
    for (const auto& g : sys.generators())
      if (g != m) smaller.push_back(g);
    auto sub = MonomialSystem::from_generators(sys.n(), sys.d(), std::move(smaller));
    if (fails_wlp_in_degree_dminus1(sub).fails) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Laplace equations

namespace {

// Multi-indices on x_1..x_n with |alpha| <= order (x_0 is dehomogenized).
std::vector<std::vector<int>> derivative_orders(int n, int order) {
  std::vector<std::vector<int>> out;
  for (const auto& e : lattice_points_simplex(n, order))
    out.emplace_back(e.entries().begin() + 1, e.entries().end());
  return out;
}

Integer falling(int a, int k) {
  Integer r = 1;
  for (int t = 0; t < k; ++t) r *= a - t;
  return r;
}

// Coefficient of the alpha-derivative of x^a (dehomogenized): the monomial
// part is x^{a' - alpha}.
Integer derivative_coefficient(const ExponentVector& a,
                               const std::vector<int>& alpha) {
  Integer c = 1;
  for (std::size_t i = 0; i < alpha.size() && c != 0; ++i)
    c *= falling(a[i + 1], alpha[i]);
  return c;
}

std::vector<Integer> evaluation_primes(std::size_t count, std::size_t round) {
  std::vector<Integer> out;
  Integer p = 1000003 + 7919 * static_cast<unsigned long>(round);
  while (out.size() < count) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    out.push_back(p);
  }
  return out;
}

}  // namespace

LaplaceResult laplace_delta(std::span<const ExponentVector> points, int order) {
  if (points.empty()) throw PreconditionError("empty point set");
  const int num_vars = static_cast<int>(points.front().size());
  const int n = num_vars - 1;
  if (n < 1 || order < 1) throw InvalidArgument("need n >= 1 and order >= 1");

  {
    RationalMatrix diffs(points.size(), static_cast<std::size_t>(num_vars));
    for (std::size_t r = 0; r < points.size(); ++r)
      for (int i = 0; i < num_vars; ++i)
        diffs(r, static_cast<std::size_t>(i)) =
            points[r][static_cast<std::size_t>(i)] - points[0][static_cast<std::size_t>(i)];
    if (linalg::rank(diffs) != static_cast<std::size_t>(n))
      throw PreconditionError("degenerate parametrization: P spans less than n dimensions");
  }

  const auto alphas = derivative_orders(n, order);
  LaplaceResult out;
  out.expected = alphas.size();

  // Specialized ranks at three deterministic prime points. Specialization can
  // only lower the rank, so the maximum is a lower bound for the generic rank.
  std::size_t eval_rank = 0;
  for (std::size_t round = 0; round < 3; ++round) {
    const auto x = evaluation_primes(static_cast<std::size_t>(n), round);
    RationalMatrix m(alphas.size(), points.size());
    for (std::size_t r = 0; r < alphas.size(); ++r) {
      for (std::size_t c = 0; c < points.size(); ++c) {
        Integer coeff = derivative_coefficient(points[c], alphas[r]);
        if (coeff == 0) continue;
        for (int i = 0; i < n; ++i) {
          Integer pw;
          mpz_pow_ui(pw.get_mpz_t(), x[static_cast<std::size_t>(i)].get_mpz_t(),
                     static_cast<unsigned long>(points[c][static_cast<std::size_t>(i + 1)] -
                                                alphas[r][static_cast<std::size_t>(i)]));
          coeff *= pw;
        }
        m(r, c) = coeff;
      }
    }
    eval_rank = std::max(eval_rank, linalg::rank(m));
  }

  // Upper bound: exhibit kernel vectors over the function field. Scaling
  // column a by x^{-a'} turns the symbolic matrix into the constant matrix
  // of derivative coefficients; each constant kernel vector k gives the
  // candidate u_a = k_a x^{-a'}, which is verified term by term.
  RationalMatrix constant(alphas.size(), points.size());
  for (std::size_t r = 0; r < alphas.size(); ++r)
    for (std::size_t c = 0; c < points.size(); ++c)
      constant(r, c) = derivative_coefficient(points[c], alphas[r]);
  const auto kernel = linalg::kernel_basis(constant);
  for (const auto& k : kernel) {
    for (std::size_t r = 0; r < alphas.size(); ++r) {
      std::map<std::vector<int>, Integer> laurent;
      for (std::size_t c = 0; c < points.size(); ++c) {
        Integer coeff = derivative_coefficient(points[c], alphas[r]) * k[c];
        if (coeff == 0) continue;
        // x^{a' - alpha} * x^{-a'}
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
          e[static_cast<std::size_t>(i)] =
              (points[c][static_cast<std::size_t>(i + 1)] - alphas[r][static_cast<std::size_t>(i)]) -
              points[c][static_cast<std::size_t>(i + 1)];
        laurent[e] += coeff;
      }
      for (const auto& [e, coeff] : laurent)
        if (coeff != 0)
          throw InternalError("osculating kernel vector failed symbolic check");
    }
  }
  const std::size_t upper = points.size() - kernel.size();
  if (eval_rank != upper)
    throw InternalError("specialized osculating rank " + std::to_string(eval_rank) +
                        " disagrees with symbolic bound " + std::to_string(upper));
  out.rank = eval_rank;
  out.delta = static_cast<int>(out.expected) - static_cast<int>(out.rank);
  return out;
}

// ---------------------------------------------------------------------------

TogliattiVerdict togliatti_verdict(const MonomialSystem& sys) {
  TogliattiVerdict v;
  v.artinian = sys.is_artinian();
  v.cardinality_ok = static_cast<std::int64_t>(sys.generators().size()) <=
                     togliatti_cardinality_bound(sys.n(), sys.d());
  if (!v.artinian) return v;

  v.wlp = fails_wlp_in_degree_dminus1(sys);
  v.restricted_dependent = restricted_dependence(sys);
  if (v.wlp.has_kernel != v.restricted_dependent)
    throw InternalError("multiplication-map kernel and hyperplane restriction disagree");
  if (v.wlp.witness && !product_lies_in_ideal(sys, *v.wlp.witness))
    throw InternalError("kernel witness f has (x_0+...+x_n) f outside the ideal");

  if (sys.d() == 3) v.quadrics = quadric_space(sys.apolar(), sys.num_vars());
  try {
    if (sys.d() >= 2) v.laplace = laplace_delta(sys.apolar(), sys.d() - 1);
  } catch (const PreconditionError&) {
    v.laplace.reset();
  }

  if (sys.d() == 3 && v.laplace &&
      static_cast<std::size_t>(v.laplace->delta) != v.quadrics.size())
    throw InternalError("Laplace count differs from the dimension of quadrics through P");
  if (v.cardinality_ok) {
    if (sys.d() == 3 && v.wlp.fails != !v.quadrics.empty())
      throw InternalError("WLP failure and quadric containment disagree");
    if (v.laplace && v.wlp.fails != (v.laplace->delta >= 1))
      throw InternalError("WLP failure and Laplace equation disagree");
  }

  v.togliatti = v.cardinality_ok && v.wlp.fails;
  if (v.togliatti && sys.d() == 3) v.minimality = is_minimal_togliatti(sys);
  return v;
}

}  // namespace togliatti
