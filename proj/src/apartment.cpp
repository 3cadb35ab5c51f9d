#include "btk/apartment.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace btk {

bool Facet::operator<(const Facet& o) const {
  auto key = [](const FacetEntry& e) {
    return std::tuple<int, Rat, Rat>(e.wall ? 0 : 1, e.wall ? e.k : e.lo,
                                     e.wall ? e.k : e.hi);
  };
  // More walls first (lower-dimensional facets first), then lex.
  size_t wa = wall_roots().size(), wb = o.wall_roots().size();
  if (wa != wb) return wa > wb;
  for (size_t i = 0; i < entries.size(); ++i) {
    auto ka = key(entries[i]), kb = key(o.entries[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

std::vector<int> Facet::wall_roots() const {
  std::vector<int> out;
  for (size_t a = 0; a < entries.size(); ++a)
    if (entries[a].wall) out.push_back(static_cast<int>(a));
  return out;
}

Facet locate_facet(const ValuedRootDatum& vrd, const QVec& x) {
  const RootSystem& rs = vrd.rs;
  if (x.size() != rs.rank)
    throw std::invalid_argument("point dimension does not match the rank");
  Facet f;
  f.entries.resize(rs.count());
  for (int a = 0; a < rs.count(); ++a) {
    Rat t = -rs.eval(a, x);
    const ValueSet& g = vrd.gamma_prime[a];
    FacetEntry& e = f.entries[a];
    if (g.member(t)) {
      e.wall = true;
      e.k = t;
    } else {
      e.wall = false;
      e.lo = g.greatest_lt(t);
      e.hi = g.least_gt(t);
    }
  }
  return f;
}

ConcaveFn f_omega(const ValuedRootDatum& vrd, const std::vector<QVec>& omega) {
  if (omega.empty()) throw std::invalid_argument("f_omega: empty point set");
  const RootSystem& rs = vrd.rs;
  ConcaveFn f;
  f.values.resize(rs.count());
  for (int a = 0; a < rs.count(); ++a) {
    Rat best = -rs.eval(a, omega[0]);
    for (size_t i = 1; i < omega.size(); ++i) {
      Rat v = -rs.eval(a, omega[i]);
      if (best < v) best = v;
    }
    f[a] = RatX(best);
  }
  return f;
}

ConcaveFn optimize(const ValuedRootDatum& vrd, const ConcaveFn& f) {
  const RootSystem& rs = vrd.rs;
  ConcaveFn out;
  out.values.resize(rs.count());
  for (int a = 0; a < rs.count(); ++a) {
    const ValueSet& g = vrd.gamma_prime[a];
    RatX best = RatX::infinity();
    if (!f[a].inf) best = RatX(g.least_geq(f[a].x));
    if (auto h = rs.half(a)) {
      const RatX& fh = f[*h];
      if (!fh.inf) {
        RatX alt = RatX(g.least_geq(Rat(2) * fh.x));
        if (alt < best) best = alt;
      }
    }
    out[a] = best;
  }
  return out;
}

ConcaveFn star_fn(const ValuedRootDatum& vrd, const ConcaveFn& f) {
  const RootSystem& rs = vrd.rs;
  ConcaveFn out = f;
  for (int a = 0; a < rs.count(); ++a) {
    const RatX& v = f[a];
    const RatX& w = f[rs.negative(a)];
    if (!v.inf && !w.inf && (v.x + w.x).is_zero())
      out[a] = RatX(vrd.gamma_prime[a].least_gt(v.x));
  }
  return out;
}

ConcaveFn facet_fn(const ValuedRootDatum& /*vrd*/, const Facet& f) {
  ConcaveFn out;
  out.values.resize(f.entries.size());
  for (size_t a = 0; a < f.entries.size(); ++a)
    out[static_cast<int>(a)] =
        RatX(f.entries[a].wall ? f.entries[a].k : f.entries[a].hi);
  return out;
}

std::string ConcavityFinding::describe(const RootSystem& rs) const {
  std::string out = rule + " at";
  for (int a : roots) out += " " + root_name(rs, a);
  out += ": " + lhs.str() + (violation ? " > " : " <= (rounded) ") + rhs.str();
  return out;
}

ConcavityReport concavity_check(const ValuedRootDatum& vrd, const ConcaveFn& f) {
  const RootSystem& rs = vrd.rs;
  ConcavityReport rep;
  for (int a = 0; a < rs.count(); ++a) {
    const RatX& v = f[a];
    const RatX& w = f[rs.negative(a)];
    if (!v.inf && !w.inf && (v.x + w.x).sign() < 0)
      rep.findings.push_back({"C0", {a, rs.negative(a)}, RatX(Rat(0)), v + w, true});
  }
  for (int a = 0; a < rs.count(); ++a)
    for (int b = a + 1; b < rs.count(); ++b) {
      auto s = rs.sum(a, b);
      if (!s) continue;
      RatX bound = f[a] + f[b];
      if (f[*s] <= bound) continue;
      bool rounded_ok = false;
      if (!bound.inf) {
        Rat r = vrd.gamma_full[*s].least_geq(bound.x);
        rounded_ok = f[*s] <= RatX(r);
      }
      rep.findings.push_back(
          {rounded_ok ? "C1'" : "C1", {a, b, *s}, f[*s], bound, !rounded_ok});
    }
  for (int a = 0; a < rs.count(); ++a) {
    auto da = rs.twice(a);
    if (!da) continue;
    RatX bound = f[a] + f[a];
    if (f[*da] <= bound) continue;
    // The plain bound fails; accept the Gamma_{2a}-rounded bound, which is
    // what closure of the filtration subgroups actually requires.
    bool rounded_ok = false;
    if (!bound.inf) {
      Rat r = vrd.gamma_prime[*da].least_geq(bound.x);
      rounded_ok = f[*da] <= RatX(r);
    }
    rep.findings.push_back({rounded_ok ? "C2'" : "C2",
                            {*da, a},
                            f[*da],
                            bound,
                            !rounded_ok});
  }
  return rep;
}

std::string LeviDescriptor::str() const {
  std::string out;
  for (const auto& [label, rank] : factors) {
    if (!out.empty()) out += " + ";
    out += label + std::to_string(rank);
  }
  if (torus_rank > 0) {
    if (!out.empty()) out += " + ";
    out += "torus^" + std::to_string(torus_rank);
  }
  return out.empty() ? "torus^0" : out;
}

LeviDescriptor phi_f(const ValuedRootDatum& vrd, const ConcaveFn& f) {
  const RootSystem& rs = vrd.rs;
  LeviDescriptor out;
  for (int a = 0; a < rs.count(); ++a) {
    const RatX& v = f[a];
    const RatX& w = f[rs.negative(a)];
    if (!v.inf && !w.inf && (v.x + w.x).is_zero()) out.roots.push_back(a);
  }
  if (out.roots.empty()) {
    out.torus_rank = rs.rank;
    return out;
  }
  RootSystem sub = rs.subsystem(out.roots);
  out.factors = classify_factors(sub);
  out.torus_rank = rs.rank - sub.rank;
  return out;
}

namespace {

// Per-ray description of a candidate cell: either pinned to a wall position
// or inside an open interval between consecutive wall positions.
struct RayChoice {
  bool on_wall;
  Rat at;       // wall position (a(x) = at)
  Rat lo, hi;   // open interval in a(x)
};

void add_ray_constraints(Feasibility& fs, const RootSystem& rs, int ray,
                         const RayChoice& c) {
  QVec cov = rs.covector(ray);
  if (c.on_wall) {
    fs.add_eq(cov, c.at);
  } else {
    fs.add_gt(cov, c.lo);
    fs.add_lt(cov, c.hi);
  }
}

}  // namespace

QVec interior_point(const ValuedRootDatum& vrd, const Facet& f) {
  const RootSystem& rs = vrd.rs;
  Feasibility fs(rs.rank);
  for (int a = 0; a < rs.count(); ++a) {
    const FacetEntry& e = f.entries[a];
    QVec cov = rs.covector(a);
    if (e.wall) {
      fs.add_eq(cov, -e.k);
    } else {
      // lo < -a(x) < hi
      fs.add_gt(cov, -e.hi);
      fs.add_lt(cov, -e.lo);
    }
  }
  auto p = fs.solve();
  if (!p) throw std::invalid_argument("facet describes an empty cell");
  return *p;
}

std::vector<Facet> star_of_facet(const ValuedRootDatum& vrd, const Facet& f) {
  const RootSystem& rs = vrd.rs;
  QVec base = interior_point(vrd, f);
  std::vector<int> rays = rs.positive_nondivisible();
  const int nrays = static_cast<int>(rays.size());

  // Options per ray: a wall position stays or relaxes to a flanking gap.
  std::vector<std::vector<RayChoice>> options(nrays);
  for (int i = 0; i < nrays; ++i) {
    ValueSet pos = vrd.wall_positions(rays[i]);
    Rat p = rs.eval(rays[i], base);
    if (pos.member(p)) {
      options[i].push_back({true, p, Rat(0), Rat(0)});
      options[i].push_back({false, Rat(0), pos.greatest_lt(p), p});
      options[i].push_back({false, Rat(0), p, pos.least_gt(p)});
    } else {
      options[i].push_back({false, Rat(0), pos.greatest_lt(p), pos.least_gt(p)});
    }
  }

  std::vector<Facet> out;
  std::vector<int> choice(nrays, 0);
  // Depth-first over ray options with exact feasibility pruning.
  std::function<void(int)> rec = [&](int depth) {
    Feasibility fs(rs.rank);
    for (int i = 0; i < depth; ++i)
      add_ray_constraints(fs, rs, rays[i], options[i][choice[i]]);
    auto witness = fs.solve();
    if (!witness) return;
    if (depth == nrays) {
      out.push_back(locate_facet(vrd, *witness));
      return;
    }
    for (size_t k = 0; k < options[depth].size(); ++k) {
      choice[depth] = static_cast<int>(k);
      rec(depth + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool facet_in_closure(const ValuedRootDatum& vrd, const Facet& g, const Facet& h) {
  QVec p = interior_point(vrd, g);
  for (size_t a = 0; a < h.entries.size(); ++a) {
    Rat t = -vrd.rs.eval(static_cast<int>(a), p);
    const FacetEntry& e = h.entries[a];
    if (e.wall) {
      if (t != e.k) return false;
    } else {
      if (t < e.lo || e.hi < t) return false;
    }
  }
  return true;
}

CorrespondenceReport parabolic_correspondence(const ValuedRootDatum& vrd,
                                             const Facet& f) {
  const RootSystem& rs = vrd.rs;
  CorrespondenceReport rep;
  ConcaveFn ff = facet_fn(vrd, f);
  rep.phi_f_roots = f.wall_roots();

  std::vector<int> parent_index;
  RootSystem sub = rs.subsystem(rep.phi_f_roots, &parent_index);
  auto parabolics = parabolic_subsets(sub);
  rep.parabolic_count = parabolics.size();
  std::set<std::vector<int>> parabolic_keys;
  for (const auto& p : parabolics) {
    std::vector<int> key;
    for (int i : p.indices) key.push_back(parent_index[i]);
    std::sort(key.begin(), key.end());
    parabolic_keys.insert(key);
  }

  auto star = star_of_facet(vrd, f);
  std::set<std::vector<int>> seen;
  for (const Facet& g : star) {
    ConcaveFn fg = facet_fn(vrd, g);
    CorrespondenceRow row;
    row.facet = g;
    for (int a : rep.phi_f_roots)
      if (fg[a] == ff[a]) row.parabolic.push_back(a);
    std::sort(row.parabolic.begin(), row.parabolic.end());
    if (!parabolic_keys.count(row.parabolic))
      rep.failures.push_back("image of a star facet is not a parabolic subset");
    if (!seen.insert(row.parabolic).second)
      rep.failures.push_back("two star facets map to the same parabolic subset");
    rep.rows.push_back(std::move(row));
  }
  rep.bijective = rep.failures.empty() && seen.size() == parabolic_keys.size() &&
                  star.size() == parabolics.size();
  if (!rep.bijective && rep.failures.empty())
    rep.failures.push_back("star size " + std::to_string(star.size()) +
                           " != parabolic count " +
                           std::to_string(parabolics.size()));

  rep.order_reversing = true;
  for (size_t i = 0; i < rep.rows.size(); ++i)
    for (size_t j = 0; j < rep.rows.size(); ++j) {
      bool closure = facet_in_closure(vrd, rep.rows[j].facet, rep.rows[i].facet);
      bool included = std::includes(
          rep.rows[j].parabolic.begin(), rep.rows[j].parabolic.end(),
          rep.rows[i].parabolic.begin(), rep.rows[i].parabolic.end());
      if (closure != included) {
        rep.order_reversing = false;
        rep.failures.push_back("order reversal fails between star facets " +
                               std::to_string(i) + " and " + std::to_string(j));
      }
    }
  return rep;
}

std::vector<QVec> interior_samples(const ValuedRootDatum& vrd, const Facet& f,
                                   int count, unsigned long long seed) {
  const RootSystem& rs = vrd.rs;
  QVec p = interior_point(vrd, f);
  // Directions must stay inside the wall equalities of f.
  std::vector<QVec> eq_rows;
  for (int a : f.wall_roots()) eq_rows.push_back(rs.covector(a));
  // Nullspace basis by Gaussian elimination.
  std::vector<QVec> nullspace;
  {
    QMat m(static_cast<int>(eq_rows.size()), rs.rank);
    for (size_t i = 0; i < eq_rows.size(); ++i)
      m.row(static_cast<int>(i)) = eq_rows[i].transpose();
    // reduce
    int rank = 0;
    std::vector<int> pivots;
    for (int col = 0; col < rs.rank && rank < m.rows(); ++col) {
      int piv = -1;
      for (int r = rank; r < m.rows(); ++r)
        if (!m(r, col).is_zero()) { piv = r; break; }
      if (piv < 0) continue;
      m.row(rank).swap(m.row(piv));
      Rat pv = m(rank, col);
      for (int j = 0; j < rs.rank; ++j) m(rank, j) /= pv;
      for (int r = 0; r < m.rows(); ++r) {
        if (r == rank || m(r, col).is_zero()) continue;
        Rat fac = m(r, col);
        for (int j = 0; j < rs.rank; ++j) m(r, j) -= fac * m(rank, j);
      }
      pivots.push_back(col);
      ++rank;
    }
    std::vector<bool> is_pivot(rs.rank, false);
    for (int c : pivots) is_pivot[c] = true;
    for (int c = 0; c < rs.rank; ++c) {
      if (is_pivot[c]) continue;
      QVec v = QVec::Zero(rs.rank);
      v[c] = Rat(1);
      for (int i = 0; i < rank; ++i) v[pivots[i]] = -m(i, c);
      nullspace.push_back(v);
    }
  }
  std::vector<QVec> out{p};
  if (nullspace.empty()) {
    while (static_cast<int>(out.size()) < count) out.push_back(p);
    return out;
  }
  std::mt19937_64 rng(seed);
  while (static_cast<int>(out.size()) < count) {
    QVec d = QVec::Zero(rs.rank);
    bool nonzero = false;
    for (const QVec& n : nullspace) {
      long long c = static_cast<long long>(rng() % 7) - 3;
      if (c != 0) nonzero = true;
      d += Rat(c) * n;
    }
    if (!nonzero) continue;
    // Largest step keeping every gap constraint strict.
    bool bounded = false;
    Rat smax(0);
    bool dead = false;
    for (size_t a = 0; a < f.entries.size(); ++a) {
      if (f.entries[a].wall) continue;
      Rat cd = -vrd.rs.eval(static_cast<int>(a), d);  // change of -a(x) per step
      if (cd.is_zero()) continue;
      Rat t = -vrd.rs.eval(static_cast<int>(a), p);
      Rat room = cd.sign() > 0 ? f.entries[a].hi - t : t - f.entries[a].lo;
      Rat bound = room / abs(cd);
      if (!bounded || bound < smax) { smax = bound; bounded = true; }
      if (bound.is_zero()) dead = true;
    }
    if (dead) continue;
    Rat frac(static_cast<long long>(rng() % 9) + 1, 10);
    Rat s = bounded ? smax * frac : frac;
    out.push_back(p + s * d);
  }
  return out;
}

}  // namespace btk
