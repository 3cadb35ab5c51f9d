#ifndef BTK_LINALG_HPP
#define BTK_LINALG_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "btk/rational.hpp"

namespace btk {

using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::VectorXi;
using ZMat = Eigen::MatrixXi;

inline QVec to_q(const ZVec& v) {
  QVec r(v.size());
  for (int i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}
inline QMat to_q(const ZMat& m) {
  QMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline bool q_eq(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

/// Lexicographic order, usable as a std::map comparator.
bool lex_less(const QVec& a, const QVec& b);
bool lex_less(const ZVec& a, const ZVec& b);
struct QVecLess { bool operator()(const QVec& a, const QVec& b) const { return lex_less(a, b); } };
struct ZVecLess { bool operator()(const ZVec& a, const ZVec& b) const { return lex_less(a, b); } };

/// Exact inverse by Gauss-Jordan elimination; throws on singular input.
QMat q_inverse(const QMat& m);

/// Solves m x = rhs exactly; std::nullopt if inconsistent (m need not be
/// square; when underdetermined an arbitrary solution is returned).
std::optional<QVec> q_solve(const QMat& m, const QVec& rhs);

/// A rational linear constraint: coef . x  (op)  rhs, with op one of = or <.
struct LinEq { QVec coef; Rat rhs; };
struct LinLt { QVec coef; Rat rhs; };  // coef . x < rhs, strict

/// Decides feasibility of { x : equalities, strict inequalities } over the
/// rationals and, when feasible, produces a witness point.  Equalities are
/// eliminated by Gaussian substitution, the rest by Fourier-Motzkin; both are
/// exact, so the answer has no tolerance.
class Feasibility {
public:
  explicit Feasibility(int dim) : dim_(dim) {}
  void add_eq(const QVec& coef, const Rat& rhs) { eqs_.push_back({coef, rhs}); }
  void add_lt(const QVec& coef, const Rat& rhs) { lts_.push_back({coef, rhs}); }
  /// coef . x > rhs
  void add_gt(const QVec& coef, const Rat& rhs) { lts_.push_back({-coef, -rhs}); }

  std::optional<QVec> solve() const;
  bool feasible() const { return solve().has_value(); }

private:
  int dim_;
  std::vector<LinEq> eqs_;
  std::vector<LinLt> lts_;
};

}  // namespace btk

#endif
