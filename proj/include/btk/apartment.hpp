#ifndef BTK_APARTMENT_HPP
#define BTK_APARTMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "btk/echelonnage.hpp"

namespace btk {

/// A rational with +infinity, the codomain of filtration indices.
struct RatX {
  bool inf = false;
  Rat x;

  RatX() : inf(false), x(0) {}
  RatX(Rat v) : inf(false), x(v) {}
  static RatX infinity() { RatX r; r.inf = true; return r; }

  friend RatX operator+(const RatX& a, const RatX& b) {
    if (a.inf || b.inf) return infinity();
    return RatX(a.x + b.x);
  }
  friend bool operator==(const RatX& a, const RatX& b) {
    return a.inf == b.inf && (a.inf || a.x == b.x);
  }
  friend bool operator<(const RatX& a, const RatX& b) {
    if (a.inf) return false;
    if (b.inf) return true;
    return a.x < b.x;
  }
  friend bool operator<=(const RatX& a, const RatX& b) { return a < b || a == b; }
  std::string str() const { return inf ? "+inf" : x.str(); }
};

/// A function Phi -> Q u {+inf}, indexed like the root list.
struct ConcaveFn {
  std::vector<RatX> values;

  const RatX& operator[](int a) const { return values[a]; }
  RatX& operator[](int a) { return values[a]; }
  friend bool operator==(const ConcaveFn& f, const ConcaveFn& g) {
    return f.values == g.values;
  }
};

/// Per-root facet data: either on the wall of level k (k in Gamma'_a,
/// a(x) + k = 0 on the facet) or strictly between the consecutive levels
/// lo < -a(x) < hi of Gamma'_a.
struct FacetEntry {
  bool wall = false;
  Rat k;        // wall level, valid when wall
  Rat lo, hi;   // gap brackets, valid when !wall

  friend bool operator==(const FacetEntry& a, const FacetEntry& b) {
    if (a.wall != b.wall) return false;
    return a.wall ? a.k == b.k : (a.lo == b.lo && a.hi == b.hi);
  }
};

struct Facet {
  std::vector<FacetEntry> entries;  // by root index

  friend bool operator==(const Facet& a, const Facet& b) {
    return a.entries == b.entries;
  }
  bool operator<(const Facet& o) const;

  /// Roots whose wall passes through the facet.
  std::vector<int> wall_roots() const;
};

/// The facet of the apartment containing x.
Facet locate_facet(const ValuedRootDatum& vrd, const QVec& x);

/// f_Omega(a) = max over points of -a(psi)  (exact sup of the half-space
/// indices over the bounded set Omega).
ConcaveFn f_omega(const ValuedRootDatum& vrd, const std::vector<QVec>& omega);

/// Gamma'-optimization f' of f: the least k in Gamma'_a with k >= f(a), or,
/// when a/2 is a root, k >= 2 f(a/2).
ConcaveFn optimize(const ValuedRootDatum& vrd, const ConcaveFn& f);

/// f*: strict successor in Gamma'_a where f(a) + f(-a) = 0, f otherwise.
ConcaveFn star_fn(const ValuedRootDatum& vrd, const ConcaveFn& f);

/// The filtration function of a facet (wall level on wall roots, upper
/// bracket elsewhere); equals optimize(f_{x}) for interior points x.
ConcaveFn facet_fn(const ValuedRootDatum& vrd, const Facet& f);

/// One concavity finding: which rule, which roots, the two sides.
struct ConcavityFinding {
  std::string rule;  // "C0", "C1", "C2", note: "C2'" satisfied after rounding
  std::vector<int> roots;
  RatX lhs, rhs;
  bool violation = true;  // false for informational C2' notes
  std::string describe(const RootSystem& rs) const;
};

struct ConcavityReport {
  std::vector<ConcavityFinding> findings;
  bool ok() const {
    for (const auto& f : findings)
      if (f.violation) return false;
    return true;
  }
};

/// Checks C0: f(a)+f(-a) >= 0;  C1: f(a+b) <= f(a)+f(b) for root sums;
/// C2: f(2a) <= 2 f(a) for multipliable a.  A C2 failure that is repaired
/// by rounding the bound up inside Gamma_{2a} (i.e. f(2a) <=
/// least_geq(Gamma_{2a}, 2 f(a))) is reported as an informational "C2'"
/// finding, not a violation; the level sets make the plain inequality
/// unattainable at walls of divisible roots.
ConcavityReport concavity_check(const ValuedRootDatum& vrd, const ConcaveFn& f);

/// Phi_f = { a : f(a) + f(-a) = 0 } with its type decomposition.
struct LeviDescriptor {
  std::vector<int> roots;                               // indices into vrd.rs
  std::vector<std::pair<std::string, int>> factors;     // (label, rank)
  int torus_rank = 0;
  std::string str() const;
};

LeviDescriptor phi_f(const ValuedRootDatum& vrd, const ConcaveFn& f);

/// All facets whose closure contains f, f itself included.
std::vector<Facet> star_of_facet(const ValuedRootDatum& vrd, const Facet& f);

/// Is g contained in the closure of h?  (Both must come from the same
/// arrangement.)
bool facet_in_closure(const ValuedRootDatum& vrd, const Facet& g, const Facet& h);

/// The star <-> parabolic correspondence at F, with its verification.
struct CorrespondenceRow {
  Facet facet;
  std::vector<int> parabolic;  // subset of Phi_F, as root indices of vrd.rs
};

struct CorrespondenceReport {
  std::vector<int> phi_f_roots;
  std::vector<CorrespondenceRow> rows;              // one per star facet
  size_t parabolic_count = 0;                       // |parabolic_subsets(Phi_F)|
  bool bijective = false;
  bool order_reversing = false;
  std::vector<std::string> failures;
  bool ok() const { return bijective && order_reversing && failures.empty(); }
};

CorrespondenceReport parabolic_correspondence(const ValuedRootDatum& vrd,
                                             const Facet& f);

/// An interior rational point of the facet; throws if infeasible (which
/// would mean the facet data is inconsistent).
QVec interior_point(const ValuedRootDatum& vrd, const Facet& f);

/// Deterministic interior samples for property checks.
std::vector<QVec> interior_samples(const ValuedRootDatum& vrd, const Facet& f,
                                   int count, unsigned long long seed);

}  // namespace btk

#endif
