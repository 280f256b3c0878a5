#include "togliatti/linalg.hpp"

#include <algorithm>
#include <utility>

#include "togliatti/errors.hpp"

namespace togliatti::linalg {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

RowEchelon reduced_row_echelon(RationalMatrix a) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const RationalMatrix& a) {
  return reduced_row_echelon(a).pivot_cols.size();
}

std::size_t rank(const IntegerMatrix& a) { return rank(to_rational(a)); }

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVector primitive(std::span<const Integer> v) {
  IntVector out(v.begin(), v.end());
  Integer g = content(v);
  if (g == 0) return out;
  auto first = std::find_if(out.begin(), out.end(),
                            [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

IntVector primitive(std::span<const Rational> v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVector scaled;
  scaled.reserve(v.size());
  for (const auto& x : v) scaled.push_back(x.get_num() * (den / x.get_den()));
  return primitive(std::span<const Integer>(scaled));
}

std::vector<IntVector> kernel_basis(const RationalMatrix& a) {
  const RowEchelon e = reduced_row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<IntVector> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      v[e.pivot_cols[r]] = -e.reduced(r, f);
    out.push_back(primitive(std::span<const Rational>(v)));
  }
  return out;
}

RatVector multiply(const RationalMatrix& a, std::span<const Rational> v) {
  if (v.size() != a.cols()) throw InvalidArgument("dimension mismatch");
  RatVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0 && v[c] != 0) out[r] += a(r, c) * v[c];
  return out;
}

Integer determinant(IntegerMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InvalidArgument("determinant of non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Lattices

IntegerLatticeBasis hnf(std::span<const IntVector> vectors,
                        std::size_t ambient_dim) {
  std::vector<IntVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw InvalidArgument("vector length mismatch");
    if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; }))
      rows.push_back(v);
  }

  IntegerLatticeBasis out(ambient_dim);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ambient_dim && r < rows.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 &&
            (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < ambient_dim; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < ambient_dim; ++j) rows[i][j] -= q * rows[r][j];
    }
    out.pivots_.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.basis_ = std::move(rows);
  return out;
}

std::optional<IntVector> IntegerLatticeBasis::coordinates(
    std::span<const Integer> v) const {
  if (v.size() != ambient_dim_) throw InvalidArgument("vector length mismatch");
  IntVector rest(v.begin(), v.end());
  IntVector coords(basis_.size());
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    const std::size_t p = pivots_[t];
    if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_[t][p].get_mpz_t()))
      return std::nullopt;
    coords[t] = rest[p] / basis_[t][p];
    if (coords[t] == 0) continue;
    for (std::size_t j = p; j < ambient_dim_; ++j) rest[j] -= coords[t] * basis_[t][j];
  }
  if (std::any_of(rest.begin(), rest.end(), [](const Integer& x) { return x != 0; }))
    return std::nullopt;
  return coords;
}

LatticeIndex lattice_index(const IntegerLatticeBasis& sub,
                           const IntegerLatticeBasis& super) {
  if (sub.ambient_dim() != super.ambient_dim())
    throw InvalidArgument("lattices in different ambient spaces");
  const std::size_t m = super.rank();
  IntegerMatrix change(sub.rank(), m);
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto coords = super.coordinates(sub.basis()[i]);
    if (!coords) throw ContainmentError("sublattice vector not in superlattice");
    for (std::size_t j = 0; j < m; ++j) change(i, j) = (*coords)[j];
  }
  if (sub.rank() < m) return {true, 0};
  return {false, abs(determinant(std::move(change)))};
}

std::vector<Integer> smith_diagonal(IntegerMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t k = std::min(rows, cols);

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, x), a(i, y));
  };

  for (std::size_t t = 0; t < k; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (bi == rows || abs(a(i, j)) < abs(a(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    a.swap_rows(t, bi);
    swap_cols(t, bj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder is smaller than the pivot; move it into place.
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi2, bj2))) { bi2 = i; bj2 = t; }
        for (std::size_t j = t; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi2, bj2))) { bi2 = t; bj2 = j; }
        a.swap_rows(t, bi2);
        swap_cols(t, bj2);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a(t, j) += a(bad, j);
    }
    if (a(t, t) < 0) a(t, t) = -a(t, t);
  }

  std::vector<Integer> diag(k);
  for (std::size_t i = 0; i < k; ++i) diag[i] = a(i, i);
  return diag;
}

}  // namespace togliatti::linalg
