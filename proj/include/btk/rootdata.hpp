#ifndef BTK_ROOTDATA_HPP
#define BTK_ROOTDATA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "btk/linalg.hpp"

namespace btk {

/// A finite root system, possibly non-reduced (label "BC").
///
/// Roots are stored as integer vectors of coordinates in the base Delta of
/// non-divisible simple roots; coroots as integer vectors of pairings
/// (<alpha_1, a^vee>, ..., <alpha_r, a^vee>).  Points of the apartment
/// V = span(Phi^vee) are represented by the same dual coordinates
/// x |-> (alpha_1(x), ..., alpha_r(x)), so that a(x) is the plain dot
/// product of the root's coordinates with the point's.  An ambient
/// orthogonal-style realization is kept alongside for lengths, orbit naming
/// and base changes between systems.
class RootSystem {
public:
  std::string label;
  int rank = 0;
  int amb_dim = 0;

  std::vector<ZVec> roots;        // coords in the base
  std::vector<ZVec> coroots;      // dual coords (pairings with the base)
  std::vector<QVec> amb_roots;    // ambient realization
  std::vector<QVec> amb_coroots;  // ambient coroots (2a/(a,a))
  std::vector<int> simple;        // indices of the base inside `roots`
  std::vector<Rat> len2;          // ambient squared length per root

  static RootSystem build(const std::string& label, int rank);

  int count() const { return static_cast<int>(roots.size()); }

  /// <b, a^vee>
  long long pairing(int b, int a) const;
  /// a(x) for a point x in dual coordinates.
  Rat eval(int a, const QVec& x) const;
  /// The root's coordinate vector viewed as a covector on points.
  QVec covector(int a) const { return to_q(roots[a]); }

  int index_of(const ZVec& coords) const;          // -1 if absent
  int negative(int a) const;
  std::optional<int> sum(int a, int b) const;      // index of a+b if a root
  std::optional<int> twice(int a) const;           // index of 2a
  std::optional<int> half(int a) const;            // index of a/2
  bool multipliable(int a) const { return twice(a).has_value(); }
  bool divisible(int a) const { return half(a).has_value(); }
  bool positive(int a) const;

  /// s_a(b) as an index.
  int reflect_root(int a, int b) const;
  /// v - <v, a^vee> a  on covectors (root-space vectors).
  QVec reflect_covector(int a, const QVec& v) const;
  /// The linear reflection s_a on points (dual coordinates).
  QVec reflect_point(int a, const QVec& x) const;

  /// Orbits of root indices under the finite Weyl group.
  std::vector<std::vector<int>> weyl_orbits() const;
  /// Positive non-divisible roots, one per wall direction.
  std::vector<int> positive_nondivisible() const;
  /// All Weyl elements as permutations of the root list (BFS closure);
  /// throws if the group exceeds `cap`.
  std::vector<std::vector<int>> weyl_permutations(size_t cap = 1200000) const;

  /// The closed symmetric subsystem spanned by the given root indices,
  /// rebuilt as a standalone system (base chosen from a generic functional).
  /// Returns the new system plus the parent index of each of its roots.
  RootSystem subsystem(const std::vector<int>& indices,
                       std::vector<int>* parent_index = nullptr) const;

  /// Conversion matrices between dual coordinates and the ambient model.
  QMat ambient_to_dual() const;  // rank x amb_dim
  QMat dual_to_ambient() const;  // amb_dim x rank, image in span(Phi^vee)

private:
  void finish();  // derives base coords, coroot coords, len2, index map
  std::map<ZVec, int, ZVecLess> index_;
};

/// A parabolic subset P of Phi: closed and P u -P = Phi.
struct ParabolicSubset {
  std::vector<int> indices;  // sorted root indices
  std::uint64_t mask = 0;

  friend bool operator==(const ParabolicSubset& a, const ParabolicSubset& b) {
    return a.mask == b.mask;
  }
  friend bool operator<(const ParabolicSubset& a, const ParabolicSubset& b) {
    if (a.indices.size() != b.indices.size())
      return a.indices.size() < b.indices.size();
    return a.mask < b.mask;
  }
};

/// All parabolic subsets of rs; requires rank <= 4.
std::vector<ParabolicSubset> parabolic_subsets(const RootSystem& rs);

/// Checks closure and P u -P = Phi directly.
bool is_parabolic_subset(const RootSystem& rs, const std::vector<int>& subset);

/// Irreducible factors as (label, rank) pairs, e.g. {("A",2)}, {("BC",1)}.
std::vector<std::pair<std::string, int>> classify_factors(const RootSystem& rs);

/// Long/short swap of the Dynkin label (B <-> C, everything else fixed).
std::string dual_label(const std::string& label);

/// Human-readable root name from base coordinates, e.g. "a1+2a2", "-a1".
std::string root_name(const RootSystem& rs, int a);

}  // namespace btk

#endif
