#include "btk/linalg.hpp"

#include <stdexcept>

namespace btk {

bool lex_less(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

bool lex_less(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

QMat q_inverse(const QMat& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("q_inverse: not square");
  QMat a = m;
  QMat inv = QMat::Zero(n, n);
  for (int i = 0; i < n; ++i) inv(i, i) = Rat(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) throw std::invalid_argument("q_inverse: singular matrix");
    a.row(col).swap(a.row(piv));
    inv.row(col).swap(inv.row(piv));
    Rat p = a(col, col);
    for (int j = 0; j < n; ++j) { a(col, j) /= p; inv(col, j) /= p; }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Rat f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::optional<QVec> q_solve(const QMat& m, const QVec& rhs) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  QMat a(rows, cols + 1);
  a.block(0, 0, rows, cols) = m;
  a.col(cols) = rhs;
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!a(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    a.row(rank).swap(a.row(piv));
    Rat p = a(rank, col);
    for (int j = col; j <= cols; ++j) a(rank, j) /= p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a(r, col).is_zero()) continue;
      Rat f = a(r, col);
      for (int j = col; j <= cols; ++j) a(r, j) -= f * a(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (!a(r, cols).is_zero()) return std::nullopt;
  QVec x = QVec::Zero(cols);
  for (int i = 0; i < rank; ++i) x[pivot_col[i]] = a(i, cols);
  return x;
}

namespace {

// One Fourier-Motzkin state: strict inequalities coef . y < rhs over the
// remaining variables.
struct FMRow { QVec coef; Rat rhs; };

}  // namespace

std::optional<QVec> Feasibility::solve() const {
  // Stage 1: eliminate equalities.  Maintain x = x0 + N y with N a basis of
  // the solution space of the equality system.
  QVec x0 = QVec::Zero(dim_);
  QMat basis = QMat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) basis(i, i) = Rat(1);
  int free_dim = dim_;

  for (const LinEq& eq : eqs_) {
    // Rewrite eq in the current free coordinates: c . (x0 + N y) = rhs.
    QVec c = QVec::Zero(free_dim);
    for (int j = 0; j < free_dim; ++j) {
      Rat s(0);
      for (int i = 0; i < dim_; ++i) s += eq.coef[i] * basis(i, j);
      c[j] = s;
    }
    Rat r = eq.rhs;
    for (int i = 0; i < dim_; ++i) r -= eq.coef[i] * x0[i];
    int piv = -1;
    for (int j = 0; j < free_dim; ++j)
      if (!c[j].is_zero()) { piv = j; break; }
    if (piv < 0) {
      if (!r.is_zero()) return std::nullopt;  // inconsistent equality
      continue;
    }
    // y[piv] = (r - sum_{j!=piv} c_j y_j) / c_piv; substitute into x0, N.
    QVec pcol(dim_);
    for (int i = 0; i < dim_; ++i) pcol[i] = basis(i, piv);
    for (int i = 0; i < dim_; ++i) x0[i] += pcol[i] * (r / c[piv]);
    QMat nb = QMat::Zero(dim_, free_dim - 1);
    int out = 0;
    for (int j = 0; j < free_dim; ++j) {
      if (j == piv) continue;
      for (int i = 0; i < dim_; ++i)
        nb(i, out) = basis(i, j) - pcol[i] * (c[j] / c[piv]);
      ++out;
    }
    basis = nb;
    --free_dim;
  }

  // Stage 2: rewrite the strict inequalities over the free coordinates.
  std::vector<FMRow> rows;
  for (const LinLt& lt : lts_) {
    FMRow row;
    row.coef = QVec::Zero(free_dim);
    for (int j = 0; j < free_dim; ++j) {
      Rat s(0);
      for (int i = 0; i < dim_; ++i) s += lt.coef[i] * basis(i, j);
      row.coef[j] = s;
    }
    row.rhs = lt.rhs;
    for (int i = 0; i < dim_; ++i) row.rhs -= lt.coef[i] * x0[i];
    rows.push_back(std::move(row));
  }

  // Stage 3: Fourier-Motzkin elimination, back-substituting a witness.
  std::vector<std::vector<FMRow>> stages;  // rows involving var k, per level
  int nvars = free_dim;
  for (int var = nvars - 1; var >= 0; --var) {
    std::vector<FMRow> with_var, rest;
    for (const FMRow& r : rows)
      (r.coef[var].is_zero() ? rest : with_var).push_back(r);
    // Combine each (coef>0, coef<0) pair.
    std::vector<FMRow> combined;
    for (const FMRow& up : with_var) {
      if (up.coef[var].sign() <= 0) continue;
      for (const FMRow& lo : with_var) {
        if (lo.coef[var].sign() >= 0) continue;
        Rat cu = up.coef[var], cl = -lo.coef[var];
        FMRow r;
        r.coef = QVec::Zero(var);
        for (int j = 0; j < var; ++j)
          r.coef[j] = up.coef[j] * cl + lo.coef[j] * cu;
        r.rhs = up.rhs * cl + lo.rhs * cu;
        combined.push_back(std::move(r));
      }
    }
    for (FMRow& r : rest) {
      FMRow t;
      t.coef = QVec::Zero(var);
      for (int j = 0; j < var; ++j) t.coef[j] = r.coef[j];
      t.rhs = r.rhs;
      combined.push_back(std::move(t));
    }
    stages.push_back(with_var);
    rows = std::move(combined);
  }
  for (const FMRow& r : rows)
    if (!(Rat(0) < r.rhs)) return std::nullopt;  // residual constant 0 < rhs

  // Back-substitute: choose each variable inside its interval.
  QVec y = QVec::Zero(nvars);
  for (int var = 0; var < nvars; ++var) {
    const std::vector<FMRow>& cons = stages[nvars - 1 - var];
    bool has_lo = false, has_hi = false;
    Rat lo(0), hi(0);
    for (const FMRow& r : cons) {
      Rat bound = r.rhs;
      for (int j = 0; j < var; ++j) bound -= r.coef[j] * y[j];
      bound /= r.coef[var];
      if (r.coef[var].sign() > 0) {  // y[var] < bound
        if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
      } else {  // y[var] > bound
        if (!has_lo || lo < bound) { lo = bound; has_lo = true; }
      }
    }
    if (has_lo && has_hi) y[var] = (lo + hi) / Rat(2);
    else if (has_lo) y[var] = lo + Rat(1);
    else if (has_hi) y[var] = hi - Rat(1);
  }
  QVec x = x0;
  for (int j = 0; j < nvars; ++j)
    for (int i = 0; i < dim_; ++i) x[i] += basis(i, j) * y[j];
  return x;
}

}  // namespace btk
