#ifndef BTK_AFFWEYL_HPP
#define BTK_AFFWEYL_HPP

#include <string>
#include <vector>

#include "btk/apartment.hpp"

namespace btk {

/// An affine transformation x |-> L x + t of the apartment whose linear
/// part lies in the finite Weyl group (so it preserves the wall
/// arrangement of the valued root datum it belongs to).
struct AffineElement {
  QMat lin;
  QVec t;

  static AffineElement identity(int dim);
  QVec apply(const QVec& x) const { return lin * x + t; }
  bool is_identity() const;

  friend bool operator==(const AffineElement& a, const AffineElement& b);
  bool operator<(const AffineElement& o) const;  // lexicographic, for maps
};

AffineElement compose(const AffineElement& a, const AffineElement& b);
AffineElement invert(const AffineElement& a);

/// The simple affine reflections bounding the fundamental alcove (the
/// alcove adjacent to the origin in the dominant direction), with the
/// Coxeter matrix of the generated group.
struct CoxeterDatum {
  ValuedRootDatum vrd;
  std::vector<AffineElement> gens;
  std::vector<int> gen_ray;     // ray root index of each generator's wall
  std::vector<Rat> gen_level;   // wall position: a(x) = level
  ZMat coxeter;                 // order of g_i g_j; 0 marks infinite
  Facet alcove;
  QVec alcove_center;
  // The affine Weyl group lifts canonically into the Iwahori-Weyl group for
  // the cases modeled here; kept as a plain flag, the torsion part of the
  // extension is out of scope.
  bool canonical_lift = true;
};

CoxeterDatum alcove_basis(const ValuedRootDatum& vrd);

/// True when w maps the wall arrangement onto itself.
bool wall_preserving(const CoxeterDatum& cd, const AffineElement& w);

/// Wall-separation length: the number of walls strictly between the
/// fundamental alcove and its image under w.  Throws for elements that do
/// not preserve the arrangement.
long long length(const CoxeterDatum& cd, const AffineElement& w);

/// The lexicographically smallest reduced word for w (indices into gens).
/// Throws if w is not generated by the simple reflections.
std::vector<int> reduced_word(const CoxeterDatum& cd, const AffineElement& w);

AffineElement evaluate_word(const CoxeterDatum& cd, const std::vector<int>& word);

struct EnumeratedElement {
  AffineElement w;
  long long len = 0;
  std::vector<int> word;  // canonical reduced word
};

/// All elements of length <= bound, sorted by (length, word); bound <= 14.
std::vector<EnumeratedElement> enumerate_elements(const CoxeterDatum& cd,
                                                  long long bound);

struct DoubleCoset {
  AffineElement rep;
  long long len = 0;
  std::vector<int> word;
  long long size_within_bound = 0;  // elements of the coset with length <= L
  bool truncated = false;           // coset reaches beyond the length bound
};

/// Minimal-length (W_J, W_J') double coset representatives among the
/// elements of length <= bound.  J and Jp are generator index sets whose
/// parabolic subgroups must be finite.
std::vector<DoubleCoset> double_cosets(const CoxeterDatum& cd,
                                       const std::vector<int>& J,
                                       const std::vector<int>& Jp,
                                       long long bound);

struct DemazureResult {
  long long dim = 0;
  bool reduced = false;
  long long eval_length = 0;
};

/// Dimension bookkeeping of the Demazure variety of a word: the word length
/// when the word is reduced, otherwise the length of its evaluation with a
/// non-reduced flag.
DemazureResult demazure_dim(const CoxeterDatum& cd, const std::vector<int>& word);

std::string word_str(const std::vector<int>& word);

}  // namespace btk

#endif
