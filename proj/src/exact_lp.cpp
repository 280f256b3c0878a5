#include "exact_lp.hpp"

#include "togliatti/errors.hpp"

namespace togliatti::detail {

using linalg::Rational;
using linalg::RationalMatrix;
using linalg::RatVector;

namespace {

class Tableau {
 public:
  Tableau(const RationalMatrix& a, const RatVector& b)
      : m_(a.rows()), n_(a.cols()), width_(n_ + m_ + 1) {
    rows_.assign(m_, RatVector(width_));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? -a(i, j) : a(i, j);
      rows_[i][n_ + i] = 1;
      rows_[i][width_ - 1] = flip ? -b[i] : b[i];
      basis_[i] = n_ + i;
    }
  }

  /// Runs the simplex for max cost.x over columns [0, ncols); returns the
  /// optimal objective.
  Rational optimize(const RatVector& cost, std::size_t ncols) {
    std::vector<bool> basic(width_, false);
    while (true) {
      std::fill(basic.begin(), basic.end(), false);
      for (auto j : basis_) basic[j] = true;

      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols && enter == ncols; ++j) {
        if (basic[j]) continue;
        Rational rc = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i)
          if (rows_[i][j] != 0) rc -= cost[basis_[i]] * rows_[i][j];
        if (rc > 0) enter = j;
      }
      if (enter == ncols) break;

      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][width_ - 1] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_.size()) throw InternalError("unbounded linear program");
      pivot(leave, enter);
    }
    Rational value = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      value += cost[basis_[i]] * rows_[i][width_ - 1];
    return value;
  }

  /// After phase one: pivots artificial columns out of the basis, dropping
  /// rows that turn out to be redundant.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < n_ && rows_[i][j] == 0) ++j;
      if (j == n_) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, j);
      ++i;
    }
  }

  std::size_t num_original() const { return n_; }
  std::size_t width() const { return width_; }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r])
      if (x != 0) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j < width_; ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t m_, n_, width_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> basis_;
};

// Phase one; false when infeasible.
bool phase_one(Tableau& t) {
  RatVector cost(t.width() - 1, 0);
  for (std::size_t j = t.num_original(); j < cost.size(); ++j) cost[j] = -1;
  if (t.optimize(cost, cost.size()) < 0) return false;
  t.expel_artificials();
  return true;
}

}  // namespace

std::optional<Rational> lp_maximize(const RationalMatrix& a, const RatVector& b,
                                    const RatVector& c) {
  if (b.size() != a.rows() || c.size() != a.cols())
    throw InvalidArgument("LP dimension mismatch");
  Tableau t(a, b);
  if (!phase_one(t)) return std::nullopt;
  RatVector cost(t.width() - 1, 0);
  for (std::size_t j = 0; j < c.size(); ++j) cost[j] = c[j];
  return t.optimize(cost, a.cols());
}

bool lp_feasible(const RationalMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw InvalidArgument("LP dimension mismatch");
  Tableau t(a, b);
  return phase_one(t);
}

}  // namespace togliatti::detail
