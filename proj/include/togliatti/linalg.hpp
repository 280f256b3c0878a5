#pragma once

// Exact linear algebra over Q and Z: rank, kernels, Hermite and Smith normal
// forms, lattice indices. Everything is arbitrary precision; there is no
// floating point in this module.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace togliatti::linalg {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r].at(c);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

RationalMatrix to_rational(const IntegerMatrix& m);

/// Reduced row echelon form. Pivot choice is the first nonzero entry of the
/// column at or below the current row, so the result is reproducible.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};
RowEchelon reduced_row_echelon(RationalMatrix a);

std::size_t rank(const RationalMatrix& a);
std::size_t rank(const IntegerMatrix& a);

/// Basis of the right null space. Each vector is primitive (content 1) with
/// a positive first nonzero entry; one vector per free column, in column
/// order.
std::vector<IntVector> kernel_basis(const RationalMatrix& a);

/// Clears denominators and divides out the content; first nonzero > 0.
/// The zero vector is returned unchanged.
IntVector primitive(std::span<const Rational> v);
IntVector primitive(std::span<const Integer> v);

Integer content(std::span<const Integer> v);

RatVector multiply(const RationalMatrix& a, std::span<const Rational> v);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(IntegerMatrix a);

/// A lattice in Z^k held in row-style Hermite normal form: pivots strictly
/// increase, are positive, and the entries above each pivot lie in
/// [0, pivot). The HNF of a lattice is unique, so equality of bases is
/// equality of lattices.
class IntegerLatticeBasis {
 public:
  IntegerLatticeBasis() = default;
  explicit IntegerLatticeBasis(std::size_t ambient_dim)
      : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<IntVector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const noexcept { return pivots_; }

  /// Integer coordinates of v in this basis, or nullopt if v is not in the
  /// lattice.
  std::optional<IntVector> coordinates(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const {
    return coordinates(v).has_value();
  }

  friend bool operator==(const IntegerLatticeBasis&,
                         const IntegerLatticeBasis&) = default;

 private:
  friend IntegerLatticeBasis hnf(std::span<const IntVector>, std::size_t);
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// HNF basis of the Z-span of `vectors` (each of length ambient_dim).
IntegerLatticeBasis hnf(std::span<const IntVector> vectors,
                        std::size_t ambient_dim);

/// [super : sub]. Infinite when sub has smaller rank than super.
struct LatticeIndex {
  bool infinite = false;
  Integer value = 1;

  std::string to_string() const {
    return infinite ? std::string("inf") : value.get_str();
  }
  friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
};

/// Throws ContainmentError if some basis vector of sub is not in super.
LatticeIndex lattice_index(const IntegerLatticeBasis& sub,
                           const IntegerLatticeBasis& super);

/// Smith invariant factors d_1 | d_2 | ... of length min(rows, cols); zero
/// factors come last.
std::vector<Integer> smith_diagonal(IntegerMatrix a);

}  // namespace togliatti::linalg
