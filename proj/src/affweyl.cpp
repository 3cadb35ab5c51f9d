#include "btk/affweyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace btk {

AffineElement AffineElement::identity(int dim) {
  AffineElement e;
  e.lin = QMat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) e.lin(i, i) = Rat(1);
  e.t = QVec::Zero(dim);
  return e;
}

bool AffineElement::is_identity() const {
  for (int i = 0; i < lin.rows(); ++i) {
    if (!t[i].is_zero()) return false;
    for (int j = 0; j < lin.cols(); ++j)
      if (!(lin(i, j) == Rat(i == j ? 1 : 0))) return false;
  }
  return true;
}

bool operator==(const AffineElement& a, const AffineElement& b) {
  if (a.lin.rows() != b.lin.rows()) return false;
  for (int i = 0; i < a.lin.rows(); ++i) {
    if (!(a.t[i] == b.t[i])) return false;
    for (int j = 0; j < a.lin.cols(); ++j)
      if (!(a.lin(i, j) == b.lin(i, j))) return false;
  }
  return true;
}

bool AffineElement::operator<(const AffineElement& o) const {
  for (int i = 0; i < lin.rows(); ++i)
    for (int j = 0; j < lin.cols(); ++j) {
      if (lin(i, j) < o.lin(i, j)) return true;
      if (o.lin(i, j) < lin(i, j)) return false;
    }
  for (int i = 0; i < t.size(); ++i) {
    if (t[i] < o.t[i]) return true;
    if (o.t[i] < t[i]) return false;
  }
  return false;
}

AffineElement compose(const AffineElement& a, const AffineElement& b) {
  AffineElement c;
  c.lin = a.lin * b.lin;
  c.t = a.lin * b.t + a.t;
  return c;
}

AffineElement invert(const AffineElement& a) {
  AffineElement c;
  c.lin = q_inverse(a.lin);
  c.t = -(c.lin * a.t);
  return c;
}

namespace {

AffineElement wall_reflection(const RootSystem& rs, int ray, const Rat& level) {
  // x - (a(x) - level) a^vee fixes { a(x) = level }.
  const int n = rs.rank;
  AffineElement w = AffineElement::identity(n);
  QVec cov = rs.covector(ray);
  QVec cv = to_q(rs.coroots[ray]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.lin(i, j) -= cv[i] * cov[j];
  w.t = level * cv;
  return w;
}

}  // namespace

CoxeterDatum alcove_basis(const ValuedRootDatum& vrd) {
  const RootSystem& rs = vrd.rs;
  if (rs.count() == 0) throw std::invalid_argument("empty root system");
  CoxeterDatum cd;
  cd.vrd = vrd;

  // The cell met first along the dominant direction: on every positive ray,
  // the gap of wall positions containing 0+.
  std::vector<int> rays = rs.positive_nondivisible();
  std::vector<Rat> lo(rays.size()), hi(rays.size());
  Feasibility fs(rs.rank);
  for (size_t i = 0; i < rays.size(); ++i) {
    ValueSet pos = vrd.wall_positions(rays[i]);
    lo[i] = pos.member(Rat(0)) ? Rat(0) : pos.greatest_lt(Rat(0));
    hi[i] = pos.least_gt(Rat(0));
    fs.add_gt(rs.covector(rays[i]), lo[i]);
    fs.add_lt(rs.covector(rays[i]), hi[i]);
  }
  auto center = fs.solve();
  if (!center) throw std::logic_error("fundamental alcove is empty");
  cd.alcove_center = *center;
  cd.alcove = locate_facet(vrd, cd.alcove_center);

  // Bounding walls: an endpoint supports a facet of the alcove iff pinning
  // the ray to it keeps the other constraints satisfiable.
  for (size_t i = 0; i < rays.size(); ++i) {
    for (const Rat& level : {lo[i], hi[i]}) {
      Feasibility face(rs.rank);
      for (size_t j = 0; j < rays.size(); ++j) {
        if (j == i) continue;
        face.add_gt(rs.covector(rays[j]), lo[j]);
        face.add_lt(rs.covector(rays[j]), hi[j]);
      }
      face.add_eq(rs.covector(rays[i]), level);
      if (!face.feasible()) continue;
      cd.gens.push_back(wall_reflection(rs, rays[i], level));
      cd.gen_ray.push_back(rays[i]);
      cd.gen_level.push_back(level);
    }
  }

  const int n = static_cast<int>(cd.gens.size());
  cd.coxeter = ZMat::Zero(n, n);
  for (int i = 0; i < n; ++i) cd.coxeter(i, i) = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      AffineElement prod = compose(cd.gens[i], cd.gens[j]);
      AffineElement acc = prod;
      int order = 0;
      for (int k = 1; k <= 48; ++k) {
        if (acc.is_identity()) { order = k; break; }
        acc = compose(acc, prod);
      }
      cd.coxeter(i, j) = cd.coxeter(j, i) = order;  // 0 marks infinity
    }
  return cd;
}

bool wall_preserving(const CoxeterDatum& cd, const AffineElement& w) {
  const RootSystem& rs = cd.vrd.rs;
  AffineElement wi = invert(w);
  for (int ray : rs.positive_nondivisible()) {
    QVec cov = rs.covector(ray);
    QVec c = wi.lin.transpose() * cov;  // linear part of a o w^-1
    Rat shift(0);
    for (int i = 0; i < rs.rank; ++i) shift += cov[i] * wi.t[i];
    int image = -1;
    for (int b = 0; b < rs.count(); ++b)
      if (!rs.divisible(b) && q_eq(rs.covector(b), c)) { image = b; break; }
    if (image < 0) return false;
    // Wall positions must transport:  a(w^-1 y) = c . y + shift, so the
    // image of { a = p } is { b = p - shift }; read on the positive ray of
    // the image this is p - shift, or shift - p when the image is negative.
    ValueSet transported =
        rs.positive(image)
            ? cd.vrd.wall_positions(ray).affine_image(Rat(1), -shift)
            : cd.vrd.wall_positions(ray).affine_image(Rat(-1), shift);
    int ray_im = rs.positive(image) ? image : rs.negative(image);
    if (transported != cd.vrd.wall_positions(ray_im)) return false;
  }
  return true;
}

namespace {

long long wall_count(const CoxeterDatum& cd, const AffineElement& w) {
  const RootSystem& rs = cd.vrd.rs;
  QVec img = w.apply(cd.alcove_center);
  long long n = 0;
  for (int ray : rs.positive_nondivisible()) {
    Rat u = rs.eval(ray, cd.alcove_center);
    Rat v = rs.eval(ray, img);
    if (v < u) std::swap(u, v);
    n += cd.vrd.wall_positions(ray).count_in_open(u, v);
  }
  return n;
}

}  // namespace

long long length(const CoxeterDatum& cd, const AffineElement& w) {
  if (!wall_preserving(cd, w))
    throw std::invalid_argument("element does not preserve the wall arrangement");
  return wall_count(cd, w);
}

std::vector<int> reduced_word(const CoxeterDatum& cd, const AffineElement& w) {
  std::vector<int> word;
  AffineElement cur = w;
  long long len = wall_count(cd, cur);
  while (!cur.is_identity()) {
    bool found = false;
    for (size_t i = 0; i < cd.gens.size(); ++i) {
      AffineElement next = compose(cd.gens[i], cur);
      long long l2 = wall_count(cd, next);
      if (l2 == len - 1) {
        word.push_back(static_cast<int>(i));
        cur = next;
        len = l2;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument(
          "element is not in the group generated by the simple reflections");
  }
  return word;
}

AffineElement evaluate_word(const CoxeterDatum& cd, const std::vector<int>& word) {
  AffineElement w = AffineElement::identity(cd.vrd.rs.rank);
  for (int i : word) {
    if (i < 0 || i >= static_cast<int>(cd.gens.size()))
      throw std::invalid_argument("word letter out of range");
    w = compose(w, cd.gens[i]);
  }
  return w;
}

std::vector<EnumeratedElement> enumerate_elements(const CoxeterDatum& cd,
                                                  long long bound) {
  if (bound < 0 || bound > 14)
    throw std::invalid_argument("enumeration bound exceeded");
  std::map<AffineElement, long long> seen;
  AffineElement id = AffineElement::identity(cd.vrd.rs.rank);
  seen[id] = 0;
  std::vector<AffineElement> frontier{id};
  for (long long depth = 1; depth <= bound && !frontier.empty(); ++depth) {
    std::vector<AffineElement> next;
    for (const AffineElement& w : frontier)
      for (const AffineElement& g : cd.gens) {
        AffineElement v = compose(w, g);
        if (seen.emplace(v, depth).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  std::vector<EnumeratedElement> out;
  for (const auto& [w, len] : seen) {
    EnumeratedElement e;
    e.w = w;
    e.len = len;
    e.word = reduced_word(cd, w);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const EnumeratedElement& a, const EnumeratedElement& b) {
              if (a.len != b.len) return a.len < b.len;
              return a.word < b.word;
            });
  return out;
}

namespace {

std::vector<AffineElement> close_subgroup(const CoxeterDatum& cd,
                                          const std::vector<int>& J,
                                          const char* which) {
  // Finiteness test: the walls of J must share a point (a finite isotropy
  // group), otherwise the parabolic subgroup is infinite.
  Feasibility fs(cd.vrd.rs.rank);
  for (int i : J) {
    if (i < 0 || i >= static_cast<int>(cd.gens.size()))
      throw std::invalid_argument("generator index out of range");
    fs.add_eq(cd.vrd.rs.covector(cd.gen_ray[i]), cd.gen_level[i]);
  }
  if (!fs.feasible())
    throw std::invalid_argument(std::string("subgroup W_") + which +
                                " is infinite (its walls share no point)");
  std::set<AffineElement> seen;
  AffineElement id = AffineElement::identity(cd.vrd.rs.rank);
  seen.insert(id);
  std::vector<AffineElement> queue{id};
  for (size_t k = 0; k < queue.size(); ++k)
    for (int i : J) {
      AffineElement v = compose(queue[k], cd.gens[i]);
      if (seen.insert(v).second) queue.push_back(v);
    }
  return std::vector<AffineElement>(seen.begin(), seen.end());
}

}  // namespace

std::vector<DoubleCoset> double_cosets(const CoxeterDatum& cd,
                                       const std::vector<int>& J,
                                       const std::vector<int>& Jp,
                                       long long bound) {
  auto wj = close_subgroup(cd, J, "J");
  auto wjp = close_subgroup(cd, Jp, "J'");
  auto all = enumerate_elements(cd, bound);
  std::set<AffineElement> enumerated;
  for (const auto& e : all) enumerated.insert(e.w);

  std::set<AffineElement> assigned;
  std::vector<DoubleCoset> out;
  for (const auto& e : all) {
    if (assigned.count(e.w)) continue;
    std::set<AffineElement> orbit;
    for (const AffineElement& j : wj)
      for (const AffineElement& jp : wjp)
        orbit.insert(compose(compose(j, e.w), jp));
    DoubleCoset dc;
    bool have_min = false;
    long long min_len = 0;
    int min_count = 0;
    for (const AffineElement& v : orbit) {
      if (enumerated.count(v)) {
        assigned.insert(v);
        ++dc.size_within_bound;
      } else {
        dc.truncated = true;
      }
      long long lv = wall_count(cd, v);
      if (!have_min || lv < min_len) {
        min_len = lv;
        dc.rep = v;
        have_min = true;
        min_count = 1;
      } else if (lv == min_len) {
        ++min_count;
      }
    }
    if (min_count != 1)
      throw std::logic_error("double coset without a unique minimal element");
    dc.len = min_len;
    dc.word = reduced_word(cd, dc.rep);
    out.push_back(std::move(dc));
  }
  std::sort(out.begin(), out.end(), [](const DoubleCoset& a, const DoubleCoset& b) {
    if (a.len != b.len) return a.len < b.len;
    return a.word < b.word;
  });
  return out;
}

DemazureResult demazure_dim(const CoxeterDatum& cd, const std::vector<int>& word) {
  DemazureResult r;
  AffineElement w = evaluate_word(cd, word);
  r.eval_length = length(cd, w);
  r.reduced = (r.eval_length == static_cast<long long>(word.size()));
  r.dim = r.reduced ? static_cast<long long>(word.size()) : r.eval_length;
  return r;
}

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += ".";
    out += "s" + std::to_string(word[i]);
  }
  return out;
}

}  // namespace btk
