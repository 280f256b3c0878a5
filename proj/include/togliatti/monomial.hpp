#pragma once

// Monomials as exponent vectors, monomial systems (S, P), the text format,
// and canonicalization under coordinate permutations.

#include <compare>
#include <initializer_list>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace togliatti {

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Exponents of x_0..x_n; a lattice point of dΔ where d is the entry sum.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> entries);
  ExponentVector(std::initializer_list<int> entries)
      : ExponentVector(std::vector<int>(entries)) {}

  /// x_index^degree in num_vars variables.
  static ExponentVector pure_power(int num_vars, int index, int degree);

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int degree() const noexcept { return degree_; }
  std::span<const int> entries() const noexcept { return entries_; }
  bool is_pure_power() const noexcept;

  /// Image under x_i -> x_{perm[i]}.
  ExponentVector permuted(std::span<const int> perm) const;

  friend ExponentVector operator+(const ExponentVector& a,
                                  const ExponentVector& b);

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const ExponentVector& a,
                                          const ExponentVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  int degree_ = 0;
};

/// "x0^2*x1"; the constant monomial prints as "1".
std::string to_string(const ExponentVector& m);

/// All C(n+d, d) exponent vectors of n+1 variables summing to d, sorted.
std::vector<ExponentVector> lattice_points_simplex(int n, int d);

enum class SystemSide { Generators, Apolar };

/// A pair (S, P) of complementary sets of degree-d monomials in x_0..x_n.
/// Both sides are kept sorted; the value is immutable after construction.
class MonomialSystem {
 public:
  static MonomialSystem from_generators(int n, int d,
                                        std::vector<ExponentVector> generators);
  static MonomialSystem from_apolar(int n, int d,
                                    std::vector<ExponentVector> apolar);
  static MonomialSystem from_side(SystemSide side, int n, int d,
                                  std::vector<ExponentVector> monomials);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  int num_vars() const noexcept { return n_ + 1; }
  const std::vector<ExponentVector>& generators() const noexcept {
    return generators_;
  }
  const std::vector<ExponentVector>& apolar() const noexcept { return apolar_; }

  bool in_generators(const ExponentVector& m) const;
  bool in_apolar(const ExponentVector& m) const;

  /// All pure powers x_i^d are generators.
  bool is_artinian() const;

  MonomialSystem permuted(std::span<const int> perm) const;

  friend bool operator==(const MonomialSystem&, const MonomialSystem&) = default;

 private:
  MonomialSystem(int n, int d, std::vector<ExponentVector> generators,
                 std::vector<ExponentVector> apolar)
      : n_(n), d_(d), generators_(std::move(generators)),
        apolar_(std::move(apolar)) {}

  int n_ = 1;
  int d_ = 3;
  std::vector<ExponentVector> generators_;
  std::vector<ExponentVector> apolar_;
};

/// Parses the "S:"/"P:" text format. Pass n < 0 to infer n from the largest
/// variable index (or tuple length) that appears.
MonomialSystem parse_system(std::string_view text, int n = -1, int d = 3);

/// Inverse of parse_system: a comment line with n and d, then the chosen side.
std::string serialize(const MonomialSystem& sys,
                      SystemSide side = SystemSide::Generators);

/// Lexicographically smallest sorted generator list over all (n+1)!
/// coordinate permutations.
MonomialSystem canonical_form(const MonomialSystem& sys);

}  // namespace togliatti
