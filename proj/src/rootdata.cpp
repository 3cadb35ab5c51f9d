#include "btk/rootdata.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace btk {

namespace {

QVec qvec(std::initializer_list<int> v) {
  QVec r(static_cast<int>(v.size()));
  int i = 0;
  for (int x : v) r[i++] = Rat(x);
  return r;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s(0);
  for (int i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void push_root(std::vector<QVec>& out, const QVec& v) { out.push_back(v); }

// Ambient root lists per label, plus the ambient base, Bourbaki ordering.
struct Table {
  int amb_dim;
  std::vector<QVec> roots;
  std::vector<QVec> base;
};

Table table_A(int n) {
  Table t;
  t.amb_dim = n + 1;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      QVec v = QVec::Zero(n + 1);
      v[i] = Rat(1);
      v[j] = Rat(-1);
      push_root(t.roots, v);
    }
  for (int i = 0; i < n; ++i) {
    QVec v = QVec::Zero(n + 1);
    v[i] = Rat(1);
    v[i + 1] = Rat(-1);
    t.base.push_back(v);
  }
  return t;
}

// kind: 0 = B (short e_i), 1 = C (long 2e_i), 2 = D (neither), 3 = BC (both)
Table table_BCD(int n, int kind) {
  Table t;
  t.amb_dim = n;
  auto e = [&](int i, int s) {
    QVec v = QVec::Zero(n);
    v[i] = Rat(s);
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          QVec v = QVec::Zero(n);
          v[i] = Rat(si);
          v[j] = Rat(sj);
          push_root(t.roots, v);
        }
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      if (kind == 0 || kind == 3) push_root(t.roots, e(i, s));
      if (kind == 1 || kind == 3) push_root(t.roots, e(i, 2 * s));
    }
  for (int i = 0; i + 1 < n; ++i) {
    QVec v = QVec::Zero(n);
    v[i] = Rat(1);
    v[i + 1] = Rat(-1);
    t.base.push_back(v);
  }
  switch (kind) {
    case 0: case 3: t.base.push_back(e(n - 1, 1)); break;
    case 1: t.base.push_back(e(n - 1, 2)); break;
    case 2: {
      QVec v = QVec::Zero(n);
      v[n - 2] = Rat(1);
      v[n - 1] = Rat(1);
      t.base.push_back(v);
      break;
    }
  }
  return t;
}

Table table_G2() {
  Table t;
  t.amb_dim = 3;
  int perms[6][3] = {{0,1,2},{0,2,1},{1,0,2},{1,2,0},{2,0,1},{2,1,0}};
  std::set<std::vector<int>> seen;
  auto add = [&](int a, int b, int c) {
    std::vector<int> key{a, b, c};
    if (!seen.insert(key).second) return;
    t.roots.push_back(qvec({a, b, c}));
  };
  for (auto& p : perms) {
    int v[3] = {1, -1, 0};
    add(v[p[0]], v[p[1]], v[p[2]]);
    int w[3] = {2, -1, -1};
    add(w[p[0]], w[p[1]], w[p[2]]);
    int u[3] = {-2, 1, 1};
    add(u[p[0]], u[p[1]], u[p[2]]);
  }
  t.base.push_back(qvec({1, -1, 0}));
  t.base.push_back(qvec({-2, 1, 1}));
  return t;
}

Table table_F4() {
  // Standard realization scaled by 2 to stay integral.
  Table t;
  t.amb_dim = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          QVec v = QVec::Zero(4);
          v[i] = Rat(si);
          v[j] = Rat(sj);
          push_root(t.roots, v);
        }
  for (int i = 0; i < 4; ++i)
    for (int s : {2, -2}) {
      QVec v = QVec::Zero(4);
      v[i] = Rat(s);
      push_root(t.roots, v);
    }
  for (int s0 : {1, -1})
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        for (int s3 : {1, -1})
          push_root(t.roots, qvec({s0, s1, s2, s3}));
  t.base.push_back(qvec({0, 2, -2, 0}));
  t.base.push_back(qvec({0, 0, 2, -2}));
  t.base.push_back(qvec({0, 0, 0, 2}));
  t.base.push_back(qvec({1, -1, -1, -1}));
  return t;
}

Table table_E8() {
  Table t;
  t.amb_dim = 8;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          QVec v = QVec::Zero(8);
          v[i] = Rat(si);
          v[j] = Rat(sj);
          push_root(t.roots, v);
        }
  for (int bits = 0; bits < 256; ++bits) {
    int minus = __builtin_popcount(bits);
    if (minus % 2) continue;
    QVec v(8);
    for (int i = 0; i < 8; ++i) v[i] = Rat(bits & (1 << i) ? -1 : 1);
    push_root(t.roots, v);
  }
  t.base.push_back(qvec({1, -1, -1, -1, -1, -1, -1, 1}));
  t.base.push_back(qvec({2, 2, 0, 0, 0, 0, 0, 0}));
  t.base.push_back(qvec({-2, 2, 0, 0, 0, 0, 0, 0}));
  t.base.push_back(qvec({0, -2, 2, 0, 0, 0, 0, 0}));
  t.base.push_back(qvec({0, 0, -2, 2, 0, 0, 0, 0}));
  t.base.push_back(qvec({0, 0, 0, -2, 2, 0, 0, 0}));
  t.base.push_back(qvec({0, 0, 0, 0, -2, 2, 0, 0}));
  t.base.push_back(qvec({0, 0, 0, 0, 0, -2, 2, 0}));
  return t;
}

Table table_E(int n) {
  Table e8 = table_E8();
  Table t;
  t.amb_dim = 8;
  t.base.assign(e8.base.begin(), e8.base.begin() + n);
  // Keep the roots lying in the span of the truncated base.
  QMat m(8, n);
  for (int j = 0; j < n; ++j) m.col(j) = t.base[j];
  for (const QVec& r : e8.roots)
    if (q_solve(m, r).has_value()) t.roots.push_back(r);
  return t;
}

}  // namespace

void RootSystem::finish() {
  const int n = static_cast<int>(amb_roots.size());
  rank = static_cast<int>(simple.size());
  len2.resize(n);
  amb_coroots.resize(n);
  for (int a = 0; a < n; ++a) {
    len2[a] = dot(amb_roots[a], amb_roots[a]);
    amb_coroots[a] = amb_roots[a] * (Rat(2) / len2[a]);
  }
  // Base coordinates of every root (exact solve against the ambient base).
  QMat sm(amb_dim, rank);
  for (int j = 0; j < rank; ++j) sm.col(j) = amb_roots[simple[j]];
  roots.resize(n);
  coroots.resize(n);
  for (int a = 0; a < n; ++a) {
    auto x = q_solve(sm, amb_roots[a]);
    if (!x) throw std::logic_error("root outside base span");
    ZVec c(rank);
    for (int i = 0; i < rank; ++i) {
      if (!(*x)[i].is_integer())
        throw std::logic_error("non-integral root coordinate");
      c[i] = static_cast<int>((*x)[i].num());
    }
    roots[a] = c;
    ZVec cv(rank);
    for (int i = 0; i < rank; ++i) {
      Rat p = dot(amb_roots[simple[i]], amb_coroots[a]);
      if (!p.is_integer()) throw std::logic_error("non-integral pairing");
      cv[i] = static_cast<int>(p.num());
    }
    coroots[a] = cv;
  }
  index_.clear();
  for (int a = 0; a < n; ++a) index_[roots[a]] = a;
}

RootSystem RootSystem::build(const std::string& label, int n) {
  auto unsupported = [&] {
    throw std::invalid_argument("unsupported root system " + label +
                                std::to_string(n));
  };
  Table t;
  if (label == "A") {
    if (n < 1) unsupported();
    t = table_A(n);
  } else if (label == "B") {
    if (n < 2) unsupported();
    t = table_BCD(n, 0);
  } else if (label == "C") {
    if (n < 2) unsupported();
    t = table_BCD(n, 1);
  } else if (label == "D") {
    if (n < 3) unsupported();
    t = table_BCD(n, 2);
  } else if (label == "BC") {
    if (n < 1) unsupported();
    if (n == 1) {
      t.amb_dim = 1;
      t.roots = {qvec({1}), qvec({-1}), qvec({2}), qvec({-2})};
      t.base = {qvec({1})};
    } else {
      t = table_BCD(n, 3);
    }
  } else if (label == "G") {
    if (n != 2) unsupported();
    t = table_G2();
  } else if (label == "F") {
    if (n != 4) unsupported();
    t = table_F4();
  } else if (label == "E") {
    if (n < 6 || n > 8) unsupported();
    t = table_E(n);
  } else {
    unsupported();
  }
  RootSystem rs;
  rs.label = label;
  rs.amb_dim = t.amb_dim;
  rs.amb_roots = t.roots;
  for (const QVec& b : t.base) {
    int idx = -1;
    for (int a = 0; a < static_cast<int>(rs.amb_roots.size()); ++a)
      if (q_eq(rs.amb_roots[a], b)) { idx = a; break; }
    if (idx < 0) throw std::logic_error("base root missing from table");
    rs.simple.push_back(idx);
  }
  rs.finish();
  return rs;
}

long long RootSystem::pairing(int b, int a) const {
  long long s = 0;
  for (int i = 0; i < rank; ++i)
    s += static_cast<long long>(roots[b][i]) * coroots[a][i];
  return s;
}

Rat RootSystem::eval(int a, const QVec& x) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i) s += Rat(roots[a][i]) * x[i];
  return s;
}

int RootSystem::index_of(const ZVec& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::negative(int a) const {
  int i = index_of(ZVec(-roots[a]));
  if (i < 0) throw std::logic_error("negative root missing");
  return i;
}

std::optional<int> RootSystem::sum(int a, int b) const {
  int i = index_of(ZVec(roots[a] + roots[b]));
  if (i < 0) return std::nullopt;
  return i;
}

std::optional<int> RootSystem::twice(int a) const {
  int i = index_of(ZVec(2 * roots[a]));
  if (i < 0) return std::nullopt;
  return i;
}

std::optional<int> RootSystem::half(int a) const {
  ZVec h(rank);
  for (int i = 0; i < rank; ++i) {
    if (roots[a][i] % 2 != 0) return std::nullopt;
    h[i] = roots[a][i] / 2;
  }
  int i = index_of(h);
  if (i < 0) return std::nullopt;
  return i;
}

bool RootSystem::positive(int a) const {
  for (int i = 0; i < rank; ++i) {
    if (roots[a][i] > 0) return true;
    if (roots[a][i] < 0) return false;
  }
  throw std::logic_error("zero root");
}

int RootSystem::reflect_root(int a, int b) const {
  ZVec img = roots[b] - static_cast<int>(pairing(b, a)) * roots[a];
  int i = index_of(img);
  if (i < 0) throw std::logic_error("reflection left the root system");
  return i;
}

QVec RootSystem::reflect_covector(int a, const QVec& v) const {
  Rat p(0);
  for (int i = 0; i < rank; ++i) p += v[i] * Rat(coroots[a][i]);
  return v - p * to_q(roots[a]);
}

QVec RootSystem::reflect_point(int a, const QVec& x) const {
  return x - eval(a, x) * to_q(coroots[a]);
}

std::vector<std::vector<int>> RootSystem::weyl_orbits() const {
  std::vector<int> orbit(count(), -1);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < count(); ++a) {
    if (orbit[a] >= 0) continue;
    std::vector<int> o{a};
    orbit[a] = static_cast<int>(out.size());
    for (size_t k = 0; k < o.size(); ++k)
      for (int s : simple) {
        int im = reflect_root(s, o[k]);
        if (orbit[im] < 0) {
          orbit[im] = orbit[a];
          o.push_back(im);
        }
      }
    std::sort(o.begin(), o.end());
    out.push_back(o);
  }
  return out;
}

std::vector<int> RootSystem::positive_nondivisible() const {
  std::vector<int> out;
  for (int a = 0; a < count(); ++a)
    if (positive(a) && !divisible(a)) out.push_back(a);
  return out;
}

std::vector<std::vector<int>> RootSystem::weyl_permutations(size_t cap) const {
  std::vector<std::vector<int>> gens;
  for (int s : simple) {
    std::vector<int> p(count());
    for (int b = 0; b < count(); ++b) p[b] = reflect_root(s, b);
    gens.push_back(p);
  }
  std::vector<int> id(count());
  for (int i = 0; i < count(); ++i) id[i] = i;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : gens) {
      std::vector<int> next(count());
      for (int i = 0; i < count(); ++i) next[i] = g[queue[k][i]];
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw std::runtime_error("Weyl group enumeration cap exceeded");
        queue.push_back(std::move(next));
      }
    }
  }
  return queue;
}

RootSystem RootSystem::subsystem(const std::vector<int>& indices,
                                 std::vector<int>* parent_index) const {
  RootSystem sub;
  sub.amb_dim = amb_dim;
  std::vector<int> idx = indices;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int a : idx) sub.amb_roots.push_back(amb_roots[a]);
  if (parent_index) *parent_index = idx;
  if (idx.empty()) {
    sub.label = "0";
    sub.rank = 0;
    return sub;
  }
  // Generic functional on the ambient space: no root may vanish on it.
  QVec h;
  for (int M = 5;; M += 2) {
    h = QVec::Zero(amb_dim);
    Rat w(1);
    for (int i = 0; i < amb_dim; ++i) {
      h[i] = w;
      w = w / Rat(M);
    }
    bool ok = true;
    for (const QVec& r : sub.amb_roots)
      if (dot(r, h).is_zero()) { ok = false; break; }
    if (ok) break;
    if (M > 200) throw std::logic_error("no generic functional found");
  }
  std::vector<int> pos;
  for (int i = 0; i < static_cast<int>(sub.amb_roots.size()); ++i)
    if (dot(sub.amb_roots[i], h) > Rat(0)) pos.push_back(i);
  // Simple = positive, not a sum of two positives.
  std::vector<int> base;
  for (int i : pos) {
    bool decomposable = false;
    for (int j : pos) {
      if (decomposable) break;
      for (int k : pos) {
        if (q_eq(sub.amb_roots[j] + sub.amb_roots[k], sub.amb_roots[i])) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) base.push_back(i);
  }
  std::sort(base.begin(), base.end(), [&](int x, int y) {
    return lex_less(sub.amb_roots[x], sub.amb_roots[y]);
  });
  sub.simple = base;
  sub.label = "sub";
  sub.finish();
  auto factors = classify_factors(sub);
  if (factors.size() == 1) sub.label = factors[0].first;
  return sub;
}

QMat RootSystem::ambient_to_dual() const {
  QMat m(rank, amb_dim);
  for (int i = 0; i < rank; ++i) m.row(i) = amb_roots[simple[i]].transpose();
  return m;
}

QMat RootSystem::dual_to_ambient() const {
  // Columns d_k in span(Phi^vee) with alpha_i(d_k) = delta_ik.
  QMat span(amb_dim, rank);
  // The simple coroots span V.
  for (int j = 0; j < rank; ++j) span.col(j) = amb_coroots[simple[j]];
  QMat a2d = ambient_to_dual();
  QMat sys = a2d * span;  // rank x rank
  QMat inv = q_inverse(sys);
  return span * inv;
}

std::vector<ParabolicSubset> parabolic_subsets(const RootSystem& rs) {
  if (rs.rank > 4)
    throw std::invalid_argument("enumeration bound exceeded");
  const int n = rs.count();
  if (rs.rank == 0) return {ParabolicSubset{}};
  std::vector<int> positive;
  for (int a = 0; a < n; ++a)
    if (rs.positive(a)) positive.push_back(a);
  auto w_all = rs.weyl_permutations();
  std::set<std::uint64_t> seen;
  std::vector<ParabolicSubset> out;
  for (std::uint32_t J = 0; J < (1u << rs.rank); ++J) {
    // Standard parabolic: roots supported on J, plus all positives.
    std::vector<int> standard = positive;
    for (int a = 0; a < n; ++a) {
      bool in = true;
      for (int i = 0; i < rs.rank; ++i)
        if (rs.roots[a][i] != 0 && !(J & (1u << i))) { in = false; break; }
      if (in) standard.push_back(a);
    }
    for (const auto& w : w_all) {
      std::uint64_t mask = 0;
      for (int a : standard) mask |= (std::uint64_t{1} << w[a]);
      if (!seen.insert(mask).second) continue;
      ParabolicSubset p;
      p.mask = mask;
      for (int a = 0; a < n; ++a)
        if (mask & (std::uint64_t{1} << a)) p.indices.push_back(a);
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_parabolic_subset(const RootSystem& rs, const std::vector<int>& subset) {
  std::set<int> in(subset.begin(), subset.end());
  for (int a = 0; a < rs.count(); ++a)
    if (!in.count(a) && !in.count(rs.negative(a))) return false;
  for (int a : subset)
    for (int b : subset) {
      auto s = rs.sum(a, b);
      if (s && !in.count(*s)) return false;
    }
  return true;
}

std::vector<std::pair<std::string, int>> classify_factors(const RootSystem& rs) {
  std::vector<std::pair<std::string, int>> out;
  if (rs.rank == 0) return out;
  // Connected components of the base.
  std::vector<int> comp(rs.rank, -1);
  int ncomp = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < rs.rank; ++v)
        if (comp[v] < 0 && rs.pairing(rs.simple[u], rs.simple[v]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> members;
    for (int i = 0; i < rs.rank; ++i)
      if (comp[i] == c) members.push_back(i);
    const int k = static_cast<int>(members.size());
    // Cartan matrix of the factor.
    ZMat cm(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        cm(i, j) =
            static_cast<int>(rs.pairing(rs.simple[members[j]], rs.simple[members[i]]));
    // Count the factor's roots and whether any is divisible inside rs.
    int nroots = 0;
    bool nonreduced = false;
    for (int a = 0; a < rs.count(); ++a) {
      bool supported = true;
      for (int i = 0; i < rs.rank; ++i)
        if (rs.roots[a][i] != 0 && comp[i] != c) { supported = false; break; }
      // skip roots supported entirely outside
      bool touches = false;
      for (int i : members)
        if (rs.roots[a][i] != 0) touches = true;
      if (!supported || !touches) continue;
      ++nroots;
      if (rs.divisible(a)) nonreduced = true;
    }
    // Match against candidate labels.
    std::vector<std::pair<std::string, int>> candidates;
    if (nonreduced) {
      candidates = {{"BC", k}};
    } else {
      candidates.push_back({"A", k});
      if (k >= 3) candidates.push_back({"B", k});
      if (k >= 2) candidates.push_back({"C", k});
      if (k >= 4) candidates.push_back({"D", k});
      if (k == 2) candidates.push_back({"G", 2});
      if (k == 4) candidates.push_back({"F", 4});
      if (k >= 6 && k <= 8) candidates.push_back({"E", k});
    }
    std::string found;
    for (const auto& cand : candidates) {
      RootSystem model = RootSystem::build(cand.first, cand.second);
      if (model.count() != nroots) continue;
      ZMat mm(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          mm(i, j) =
              static_cast<int>(model.pairing(model.simple[j], model.simple[i]));
      // Permutation equivalence.
      std::vector<int> perm(k);
      for (int i = 0; i < k; ++i) perm[i] = i;
      bool match = false;
      do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
          for (int j = 0; j < k && ok; ++j)
            if (cm(i, j) != mm(perm[i], perm[j])) ok = false;
        if (ok) { match = true; break; }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (match) { found = cand.first; break; }
    }
    if (found.empty()) throw std::logic_error("unclassifiable root subsystem");
    out.push_back({found, k});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string dual_label(const std::string& label) {
  if (label == "B") return "C";
  if (label == "C") return "B";
  return label;
}

std::string root_name(const RootSystem& rs, int a) {
  std::string out;
  for (int i = 0; i < rs.rank; ++i) {
    int c = rs.roots[a][i];
    if (c == 0) continue;
    if (!out.empty() && c > 0) out += "+";
    if (c == -1) out += "-";
    else if (c != 1) out += std::to_string(c);
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace btk
