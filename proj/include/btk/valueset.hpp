#ifndef BTK_VALUESET_HPP
#define BTK_VALUESET_HPP

#include <string>
#include <vector>

#include "btk/rational.hpp"

namespace btk {

/// The arithmetic progression { offset + n * step : n in Z }, step > 0.
/// Canonical form keeps 0 <= offset < step.
struct ArithProg {
  Rat offset;
  Rat step;

  ArithProg(Rat o, Rat s);
  bool contains(const Rat& x) const;
  /// min { k in progression : k >= x }.
  Rat least_geq(const Rat& x) const;
  /// max { k in progression : k <= x }.
  Rat greatest_leq(const Rat& x) const;

  friend bool operator==(const ArithProg& a, const ArithProg& b) {
    return a.offset == b.offset && a.step == b.step;
  }
  friend bool operator<(const ArithProg& a, const ArithProg& b) {
    return a.offset != b.offset ? a.offset < b.offset : a.step < b.step;
  }
};

/// An exact subset of Q of the form (union of progressions) minus (union of
/// progressions).  On construction the set is rewritten as a plain union of
/// cosets of its minimal period, so two ValueSets denote the same subset of Q
/// iff their stored progressions are identical; the exclusion lists exist
/// only at the constructor interface.
///
/// These sets carry the level data of a valued root datum: the wall levels
/// of one root direction always form such a set, and the BC cases genuinely
/// need a difference (odd quarter-integers arise as (1/4)Z minus (1/2)Z).
class ValueSet {
public:
  ValueSet() = default;  // the empty set
  explicit ValueSet(std::vector<ArithProg> include,
                    std::vector<ArithProg> exclude = {});

  /// Convenience: step * Z + offset.
  static ValueSet lattice(const Rat& step, const Rat& offset = Rat(0));

  bool empty() const { return progs_.empty(); }
  const std::vector<ArithProg>& progressions() const { return progs_; }
  /// The minimal period (all progressions share it).  Requires nonempty.
  Rat period() const;

  bool member(const Rat& x) const;
  /// min { k in S : k >= x }; throws std::domain_error("empty value set").
  Rat least_geq(const Rat& x) const;
  /// min { k in S : k > x }.
  Rat least_gt(const Rat& x) const;
  /// max { k in S : k <= x }.
  Rat greatest_leq(const Rat& x) const;
  /// max { k in S : k < x }.
  Rat greatest_lt(const Rat& x) const;

  /// { c*s + d : s in S };  c must be nonzero.
  ValueSet affine_image(const Rat& c, const Rat& d) const;

  ValueSet unite(const ValueSet& other) const;
  ValueSet intersect(const ValueSet& other) const;

  /// All members in the closed interval [lo, hi], ascending.
  std::vector<Rat> members_in(const Rat& lo, const Rat& hi) const;
  /// Number of members in the open interval (lo, hi).
  long long count_in_open(const Rat& lo, const Rat& hi) const;

  friend bool operator==(const ValueSet& a, const ValueSet& b) {
    return a.progs_ == b.progs_;
  }
  friend bool operator!=(const ValueSet& a, const ValueSet& b) { return !(a == b); }

  /// Renders the grammar "p/q*Z + r/s", unions joined by ", ".
  std::string str() const;
  /// Parses "A [minus B]" where A, B are comma-joined progressions in the
  /// grammar above.  Whitespace-insensitive.
  static ValueSet parse(const std::string& text);

private:
  void canonicalize(const std::vector<ArithProg>& include,
                    const std::vector<ArithProg>& exclude);

  // Canonical: all steps equal the minimal period, offsets reduced and
  // strictly increasing.
  std::vector<ArithProg> progs_;
};

}  // namespace btk

#endif
