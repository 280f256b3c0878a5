#pragma once

// Algebraic predicates on monomial systems: the multiplication map by
// x_0 + ... + x_n, failure of the weak Lefschetz property in degree d-1,
// dependence of the generators on the hyperplane x_0 + ... + x_n = 0, the
// space of quadrics through the apolar points, minimality, and the number of
// Laplace equations of the apolar parametrization.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "togliatti/linalg.hpp"
#include "togliatti/monomial.hpp"
#include "togliatti/polynomial.hpp"

namespace togliatti {

/// C(n+d-1, n-1): the largest |S| for which Laplace equations coming from
/// WLP failure are non-trivial.
std::int64_t togliatti_cardinality_bound(int n, int d);

/// ×(x_0 + ... + x_n): (R/I)_{d-1} -> (R/I)_d in monomial bases. Rows are
/// indexed by `target` (degree-d monomials outside S), columns by `source`
/// (all degree-(d-1) monomials).
struct MultiplicationMap {
  std::vector<ExponentVector> source;
  std::vector<ExponentVector> target;
  linalg::RationalMatrix matrix;
};

/// Throws PreconditionError unless sys is artinian.
MultiplicationMap build_multiplication_map(const MonomialSystem& sys);

struct WlpResult {
  bool fails = false;          ///< the map does not have maximal rank
  bool has_kernel = false;     ///< the map is not injective
  std::size_t rank = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool within_bound = true;    ///< |S| <= C(n+d-1, n-1)
  std::optional<Polynomial> witness;  ///< first kernel basis vector, as a form
};

WlpResult fails_wlp_in_degree_dminus1(const MonomialSystem& sys);

/// True iff every monomial of (x_0 + ... + x_n) * f lies in S.
bool product_lies_in_ideal(const MonomialSystem& sys, const Polynomial& f);

/// Substitutes x_n = -(x_0 + ... + x_{n-1}) into each generator and reports
/// whether the restricted forms are linearly dependent.
bool restricted_dependence(const MonomialSystem& sys);

/// sum_i diag_i x_i^2 + sum_{i<j} cross_ij x_i x_j.
class QuadricForm {
 public:
  QuadricForm() = default;
  explicit QuadricForm(int num_vars);

  /// Coefficients in the column order of the evaluation matrix: diagonal
  /// terms first, then (i, j) pairs with i < j in lexicographic order.
  static QuadricForm from_coefficients(int num_vars,
                                       std::span<const linalg::Rational> coeffs);

  int num_vars() const noexcept { return num_vars_; }
  const linalg::Rational& diag(int i) const { return diag_.at(static_cast<std::size_t>(i)); }
  const linalg::Rational& cross(int i, int j) const;
  void set_diag(int i, linalg::Rational v) { diag_.at(static_cast<std::size_t>(i)) = std::move(v); }
  void set_cross(int i, int j, linalg::Rational v);

  linalg::Rational evaluate(const ExponentVector& a) const;
  linalg::RatVector coefficients() const;

  /// Equal up to a nonzero scalar.
  bool proportional_to(const QuadricForm& other) const;

  friend bool operator==(const QuadricForm&, const QuadricForm&) = default;

 private:
  std::size_t cross_index(int i, int j) const;
  int num_vars_ = 0;
  linalg::RatVector diag_;
  linalg::RatVector cross_;
};

std::string to_string(const QuadricForm& q);

/// Row (a_0^2, ..., a_n^2, a_0 a_1, ..., a_{n-1} a_n) per point.
linalg::RationalMatrix quadric_evaluation_matrix(
    std::span<const ExponentVector> points, int num_vars);

/// Basis of quadrics vanishing at every point; each primitive integral.
std::vector<QuadricForm> quadric_space(std::span<const ExponentVector> points,
                                       int num_vars);

struct MinimalityCertificate {
  bool minimal = false;
  std::size_t quadric_space_dim = 0;
  /// Set when the quadric space is one-dimensional.
  std::optional<QuadricForm> unique_quadric;
  /// When not minimal: a point of 3Δ \ P together with a nonzero quadric
  /// through P and that point.
  std::optional<ExponentVector> violating_point;
  std::optional<QuadricForm> vanishing_quadric;
};

/// d == 3 only. Throws PreconditionError unless sys is artinian, within the
/// cardinality bound and fails the WLP in degree 2.
MinimalityCertificate is_minimal_togliatti(const MonomialSystem& sys);

/// Minimality straight from the definition: no artinian proper subset of S
/// fails the WLP in degree d-1. Exponential; meant for cross-checks.
bool is_minimal_by_subsets(const MonomialSystem& sys);

struct LaplaceResult {
  int delta = 0;
  std::size_t rank = 0;      ///< rank of the osculating matrix
  std::size_t expected = 0;  ///< C(n+order, order)
};

/// Number of Laplace equations of the given order satisfied by the toric
/// parametrization x -> (x^a)_{a in P}. Throws PreconditionError when the
/// parametrization is degenerate (P does not span an n-dimensional affine
/// space).
LaplaceResult laplace_delta(std::span<const ExponentVector> points, int order = 2);

/// All cubic-system predicates in one value.
struct TogliattiVerdict {
  bool artinian = false;
  bool cardinality_ok = false;
  WlpResult wlp;
  bool restricted_dependent = false;
  std::vector<QuadricForm> quadrics;
  std::optional<LaplaceResult> laplace;  ///< absent for degenerate P
  bool togliatti = false;  ///< artinian, cardinality_ok and fails the WLP
  std::optional<MinimalityCertificate> minimality;  ///< only when togliatti
};

/// Computes every predicate and cross-checks the equivalences that hold
/// within the cardinality bound. Throws InternalError on disagreement.
TogliattiVerdict togliatti_verdict(const MonomialSystem& sys);

}  // namespace togliatti
