#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "togliatti/monomial.hpp"

namespace togliatti {

/// Sparse polynomial with exact rational coefficients. Zero terms are never
/// stored.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, mpq_class>;

  Polynomial() = default;
  explicit Polynomial(int num_vars) : num_vars_(num_vars) {}

  /// x_0 + x_1 + ... + x_{num_vars-1}
  static Polynomial sum_of_variables(int num_vars);

  int num_vars() const noexcept { return num_vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const ExponentVector& m, const mpq_class& c);
  mpq_class coefficient(const ExponentVector& m) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  int num_vars_ = 0;
  Terms terms_;
};

/// Human-readable form, e.g. "x0^2 - x0*x1 + 2*x1^2".
std::string to_string(const Polynomial& p);

}  // namespace togliatti
