#include "togliatti/polynomial.hpp"

#include "togliatti/errors.hpp"

namespace togliatti {

Polynomial Polynomial::sum_of_variables(int num_vars) {
  Polynomial p(num_vars);
  for (int i = 0; i < num_vars; ++i)
    p.add_term(ExponentVector::pure_power(num_vars, i, 1), 1);
  return p;
}

void Polynomial::add_term(const ExponentVector& m, const mpq_class& c) {
  if (static_cast<int>(m.size()) != num_vars_)
    throw InvalidArgument("term has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class Polynomial::coefficient(const ExponentVector& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_)
    throw InvalidArgument("polynomials over different rings");
  Polynomial out(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_)
    throw InvalidArgument("polynomials over different rings");
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest monomial first reads more naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    mpq_class c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = to_string(it->first);
    if (c != 1 || mono == "1") {
      out += c.get_str();
      if (mono != "1") out += "*" + mono;
    } else {
      out += mono;
    }
  }
  return out;
}

}  // namespace togliatti
