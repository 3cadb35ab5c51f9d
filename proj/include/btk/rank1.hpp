#ifndef BTK_RANK1_HPP
#define BTK_RANK1_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "btk/echelonnage.hpp"
#include "btk/funcfield.hpp"

namespace btk {

/// SL_2 over the top field of a tower; root-group elements are kept as
/// full 2x2 matrices so conjugation is plain matrix arithmetic.
struct Mat2 {
  FF a, b, c, d;
  static Mat2 identity(const FieldTower& tw);
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};
Mat2 mul(const Mat2& x, const Mat2& y);
Mat2 inverse_sl2(const Mat2& x);  // uses det = 1

struct SL2Realization {
  FieldTower tower;  // K_a; omega normalized on the base K

  Mat2 x_plus(const FF& r) const;   // upper unipotent
  Mat2 x_minus(const FF& r) const;  // lower unipotent
  Mat2 torus(const FF& c) const;    // diag(c, c^-1)
  /// m(x_a(r)) = x_{-a}(-1/r) x_a(r) x_{-a}(-1/r)
  Mat2 m_element(const FF& r) const;
};

/// A point of the unipotent H(L, L2): v + sigma(v) = u sigma(u).
struct SU3Point {
  FF u, v;
  friend bool operator==(const SU3Point& x, const SU3Point& y) {
    return x.u == y.u && x.v == y.v;
  }
};

/// A point of the twisted model H^lambda: y + sigma(y) = 0.
struct HLambdaPoint {
  FF x, y;
  friend bool operator==(const HLambdaPoint& a, const HLambdaPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

struct SU3Realization {
  FieldTower tower;  // L with sigma; the base is L2 (e2 = 1 towers)
  FF lambda;         // trace 1

  bool in_group(const SU3Point& p) const;
  SU3Point identity() const { return {tower.zero(), tower.zero()}; }
  /// (u1+u2, v1+v2+sigma(u1) u2); throws if an argument fails the constraint.
  SU3Point mul(const SU3Point& p, const SU3Point& q) const;
  SU3Point inverse(const SU3Point& p) const;  // (-u, sigma(v))
  /// j_lambda(u, v) = (u, v - lambda u sigma(u)); lambda must have trace 1.
  HLambdaPoint j_lambda(const SU3Point& p) const;
  /// (x1+x2, y1+y2 - lambda x1 sigma(x2) + sigma(lambda x1) x2)
  HLambdaPoint h_mul(const HLambdaPoint& p, const HLambdaPoint& q) const;
  bool in_h_lambda(const HLambdaPoint& p) const;
  /// Torus action of c in L^x: (u, v) -> (sigma(c)^2 c^-1 u, c sigma(c) v).
  SU3Point torus_conj(const FF& c, const SU3Point& p) const;
};

struct BC1Point {
  FF x, y;  // x in K_a = K^(1/2), y in the base K
};

struct BC1Realization {
  FieldTower tower;  // K_a = K^(1/2), characteristic 2
  FF alpha;          // omega(alpha) odd in the half-integer grid

  BC1Point mul(const BC1Point& p, const BC1Point& q) const;  // additive law
  BC1Point inverse(const BC1Point& p) const;
  /// Torus action of c in K_a^x: (x, y) -> (c x, c^2 y).
  BC1Point torus_conj(const FF& c, const BC1Point& p) const;
};

using Rank1Realization =
    std::variant<SL2Realization, SU3Realization, BC1Realization>;

/// phi_a of a root-group element (the three closed formulas).
/// SL2: phi(x_a(r)) = omega(r); SU3: phi(u,v) = omega(v)/2;
/// BC1: phi(x,y) = omega(alpha x^2 + y)/2.  Zero arguments give +infinity.
std::pair<bool, Rat> phi_sl2(const SL2Realization& r, const Mat2& unipotent);
std::pair<bool, Rat> phi_su3(const SU3Realization& r, const SU3Point& p);
std::pair<bool, Rat> phi_h_lambda(const SU3Realization& r, const HLambdaPoint& p);
std::pair<bool, Rat> phi_bc1(const BC1Realization& r, const BC1Point& p);

/// The ray case this realization instantiates (e2 = 1 towers).
RayCase realization_case(const Rank1Realization& r);
std::string realization_name(const Rank1Realization& r);

/// Canonical realizations per ray case over small function fields; returns
/// nullopt when no exact realization is shipped (SU3_RAM in residue
/// characteristic 2, or e2 > 1).
std::optional<Rank1Realization> make_realization(const RayCase& rc,
                                                 long long residue_char);

struct AxiomLine {
  std::string name;
  long long instances = 0;
  long long failures = 0;
  std::string detail;  // first failure, or a summary
};

struct AxiomReport {
  std::string realization;
  std::vector<AxiomLine> lines;
  bool ok() const {
    for (const auto& l : lines)
      if (l.failures > 0) return false;
    return true;
  }
};

struct AxiomOptions {
  unsigned long long seed = 0;
  int random_samples = 100;
  Rat window_lo = Rat(-2);
  Rat window_hi = Rat(2);
};

/// Executable check of the valuation axioms on exact samples: the
/// filtration inequality, inversion invariance, the group law (identity,
/// inverses, associativity, constraint preservation), torus compatibility
/// phi(z u z^-1) - phi(u) = omega(a(z)), and agreement of the attained
/// values with the ray's level sets.
AxiomReport axiom_report(const Rank1Realization& r, const AxiomOptions& opt);

}  // namespace btk

#endif
