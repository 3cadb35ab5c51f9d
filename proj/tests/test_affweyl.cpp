#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "btk/affweyl.hpp"

using namespace btk;

namespace {

ValuedRootDatum split(const std::string& label, int rank, long long p = 3) {
  RootSystem rs = RootSystem::build(label, rank);
  std::map<std::string, RayCase> cases;
  for (const auto& [name, members] : named_ray_orbits(rs))
    cases[name] = {RayCaseKind::ResSL2, 1, {}};
  return assemble(rs, cases, p);
}

ValuedRootDatum bc_datum(int rank) {
  RootSystem rs = RootSystem::build("BC", rank);
  std::map<std::string, RayCase> cases;
  for (const auto& [name, members] : named_ray_orbits(rs)) {
    bool mult = rs.multipliable(members[0]);
    cases[name] = mult ? RayCase{RayCaseKind::BC1, 1, {}}
                       : RayCase{RayCaseKind::ResSL2, 2, {}};
  }
  return assemble(rs, cases, 2);
}

// Oracle: breadth-first word enumeration with dedup; returns element ->
// first depth reached.
std::map<AffineElement, long long> bfs_oracle(const CoxeterDatum& cd,
                                              long long depth) {
  std::map<AffineElement, long long> seen;
  AffineElement id = AffineElement::identity(cd.vrd.rs.rank);
  seen[id] = 0;
  std::vector<AffineElement> frontier{id};
  for (long long d = 1; d <= depth; ++d) {
    std::vector<AffineElement> next;
    for (const auto& w : frontier)
      for (const auto& g : cd.gens) {
        AffineElement v = compose(w, g);
        if (seen.emplace(v, d).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("alcove basis: split A1 is the infinite dihedral group") {
  auto vrd = split("A", 1);
  CoxeterDatum cd = alcove_basis(vrd);
  REQUIRE(cd.gens.size() == 2);
  CHECK(cd.coxeter(0, 1) == 0);  // infinite order
  CHECK(cd.gen_level[0] == Rat(0));
  CHECK(cd.gen_level[1] == Rat(1));
  // both generators are involutions
  for (const auto& g : cd.gens) CHECK(compose(g, g).is_identity());
  // s0 s1 is the translation by one period: a(x) shifts by 2
  AffineElement t = compose(cd.gens[0], cd.gens[1]);
  QVec x(1);
  x[0] = Rat(1, 3);
  QVec y = t.apply(x);
  CHECK(y[0] == x[0] - Rat(2));
  CHECK(compose(t, invert(t)).is_identity());
}

TEST_CASE("alcove basis: split A2 is affine type A2~") {
  auto vrd = split("A", 2);
  CoxeterDatum cd = alcove_basis(vrd);
  REQUIRE(cd.gens.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(cd.coxeter(i, j) == 3);
}

TEST_CASE("alcove basis: C2~ and G2~") {
  auto c2 = split("C", 2);
  CoxeterDatum cd = alcove_basis(c2);
  REQUIRE(cd.gens.size() == 3);
  std::multiset<int> orders;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) orders.insert(cd.coxeter(i, j));
  CHECK(orders == std::multiset<int>{2, 4, 4});

  auto g2 = split("G", 2);
  CoxeterDatum gd = alcove_basis(g2);
  REQUIRE(gd.gens.size() == 3);
  std::multiset<int> gorders;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) gorders.insert(gd.coxeter(i, j));
  CHECK(gorders == std::multiset<int>{2, 3, 6});
}

TEST_CASE("alcove basis: BC1 quarter-period walls") {
  auto vrd = bc_datum(1);
  CoxeterDatum cd = alcove_basis(vrd);
  REQUIRE(cd.gens.size() == 2);
  CHECK(cd.gen_level[0] == Rat(0));
  CHECK(cd.gen_level[1] == Rat(1, 4));
  CHECK(cd.coxeter(0, 1) == 0);  // A1~ again, at quarter spacing
  AffineElement t = compose(cd.gens[1], cd.gens[0]);
  QVec x = QVec::Zero(1);
  CHECK(t.apply(x)[0] == Rat(1, 2));  // translation by half a period of a(x)
}

TEST_CASE("apply, compose, invert") {
  auto vrd = split("A", 2);
  CoxeterDatum cd = alcove_basis(vrd);
  QVec x(2);
  x[0] = Rat(1, 5);
  x[1] = Rat(-2, 7);
  AffineElement id = AffineElement::identity(2);
  CHECK(q_eq(id.apply(x), x));
  for (const auto& r : cd.gens) {
    CHECK(q_eq(r.apply(r.apply(x)), x));
    CHECK(compose(r, invert(r)).is_identity());
  }
}

TEST_CASE("length: wall separation equals BFS depth") {
  for (int which = 0; which < 5; ++which) {
    ValuedRootDatum vrd = which == 0   ? split("A", 1)
                          : which == 1 ? split("A", 2)
                          : which == 2 ? split("C", 2)
                          : which == 3 ? bc_datum(1)
                                       : bc_datum(2);
    CAPTURE(which);
    CoxeterDatum cd = alcove_basis(vrd);
    auto oracle = bfs_oracle(cd, 6);
    for (const auto& [w, depth] : oracle) CHECK(length(cd, w) == depth);
  }
}

TEST_CASE("length: A1~ counts and words") {
  auto vrd = split("A", 1);
  CoxeterDatum cd = alcove_basis(vrd);
  CHECK(length(cd, AffineElement::identity(1)) == 0);
  // (s0 s1)^k has length 2k
  AffineElement w = AffineElement::identity(1);
  for (int k = 1; k <= 5; ++k) {
    w = compose(w, compose(cd.gens[0], cd.gens[1]));
    CHECK(length(cd, w) == 2 * k);
  }
  CHECK(reduced_word(cd, cd.gens[0]) == std::vector<int>{0});
}

TEST_CASE("length rejects non wall-preserving maps") {
  auto vrd = split("A", 1);
  CoxeterDatum cd = alcove_basis(vrd);
  AffineElement bad = AffineElement::identity(1);
  bad.t[0] = Rat(1, 3);  // translation off the wall lattice
  CHECK(!wall_preserving(cd, bad));
  CHECK_THROWS_AS(length(cd, bad), std::invalid_argument);
  // wall-preserving but outside W_af: translation by half the period
  AffineElement half = AffineElement::identity(1);
  half.t[0] = Rat(1);
  CHECK(wall_preserving(cd, half));
  CHECK_THROWS_AS(reduced_word(cd, half), std::invalid_argument);
}

TEST_CASE("enumerate: counts and canonical order") {
  auto vrd = split("A", 1);
  CoxeterDatum cd = alcove_basis(vrd);
  auto e3 = enumerate_elements(cd, 3);
  CHECK(e3.size() == 7);
  auto e0 = enumerate_elements(cd, 0);
  REQUIRE(e0.size() == 1);
  CHECK(e0[0].w.is_identity());
  for (long long len = 0; len <= 14; ++len)
    CHECK(enumerate_elements(cd, len).size() ==
          static_cast<size_t>(2 * len + 1));
  CHECK_THROWS_WITH_AS(enumerate_elements(cd, 15), "enumeration bound exceeded",
                       std::invalid_argument);

  auto a2 = split("A", 2);
  CoxeterDatum cd2 = alcove_basis(a2);
  auto oracle = bfs_oracle(cd2, 2);
  CHECK(enumerate_elements(cd2, 2).size() == oracle.size());
  // sorted by (length, word), words are reduced and evaluate back
  auto all = enumerate_elements(cd2, 4);
  for (size_t i = 0; i < all.size(); ++i) {
    CHECK(static_cast<long long>(all[i].word.size()) == all[i].len);
    CHECK(evaluate_word(cd2, all[i].word) == all[i].w);
    if (i) {
      CHECK((all[i - 1].len < all[i].len ||
             (all[i - 1].len == all[i].len && all[i - 1].word < all[i].word)));
    }
  }
}

TEST_CASE("exchange property spot check") {
  auto vrd = split("C", 2);
  CoxeterDatum cd = alcove_basis(vrd);
  auto all = enumerate_elements(cd, 6);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& e = all[rng() % all.size()];
    if (e.len == 0) continue;
    bool dropped = false;
    for (size_t skip = 0; skip < e.word.size(); ++skip) {
      std::vector<int> shorter;
      for (size_t i = 0; i < e.word.size(); ++i)
        if (i != skip) shorter.push_back(e.word[i]);
      if (length(cd, evaluate_word(cd, shorter)) == e.len - 1) dropped = true;
    }
    CHECK(dropped);
  }
}

TEST_CASE("double cosets: Iwahori level is everything") {
  auto vrd = split("A", 1);
  CoxeterDatum cd = alcove_basis(vrd);
  auto dc = double_cosets(cd, {}, {}, 3);
  CHECK(dc.size() == enumerate_elements(cd, 3).size());
}

TEST_CASE("double cosets: A1~ with J = J' = {s0}") {
  auto vrd = split("A", 1);
  CoxeterDatum cd = alcove_basis(vrd);
  auto dc = double_cosets(cd, {0}, {0}, 5);
  // Oracle: partition enumerate(5) by the closure j w j'.
  auto all = enumerate_elements(cd, 5);
  std::set<AffineElement> seen;
  std::vector<long long> rep_lengths;
  for (const auto& e : all) {
    if (seen.count(e.w)) continue;
    std::set<AffineElement> orbit{e.w, compose(cd.gens[0], e.w),
                                  compose(e.w, cd.gens[0]),
                                  compose(compose(cd.gens[0], e.w), cd.gens[0])};
    long long best = 1000;
    for (const auto& v : orbit) {
      seen.insert(v);
      if (wall_preserving(cd, v)) best = std::min(best, length(cd, v));
    }
    rep_lengths.push_back(best);
  }
  std::vector<long long> got;
  for (const auto& d : dc) got.push_back(d.len);
  std::sort(rep_lengths.begin(), rep_lengths.end());
  std::sort(got.begin(), got.end());
  CHECK(got == rep_lengths);
  // representatives pairwise distinct cosets and exhaustive
  std::set<AffineElement> covered;
  for (const auto& d : dc) {
    std::set<AffineElement> orbit{d.rep, compose(cd.gens[0], d.rep),
                                  compose(d.rep, cd.gens[0]),
                                  compose(compose(cd.gens[0], d.rep), cd.gens[0])};
    for (const auto& v : orbit) CHECK(covered.insert(v).second);
  }
  for (const auto& e : all) CHECK(covered.count(e.w) == 1);
}

TEST_CASE("double cosets: A2~ vertex stabilizers partition the enumeration") {
  auto vrd = split("A", 2);
  CoxeterDatum cd = alcove_basis(vrd);
  // J = the two linear generators (walls through the origin)
  std::vector<int> J;
  for (size_t i = 0; i < cd.gens.size(); ++i)
    if (cd.gen_level[i] == Rat(0)) J.push_back(static_cast<int>(i));
  REQUIRE(J.size() == 2);
  auto dc = double_cosets(cd, J, J, 4);
  auto all = enumerate_elements(cd, 4);
  long long covered = 0;
  for (const auto& d : dc) covered += d.size_within_bound;
  CHECK(covered == static_cast<long long>(all.size()));
  // infinite parabolic rejected
  std::vector<int> all_gens{0, 1, 2};
  CHECK_THROWS_AS(double_cosets(cd, all_gens, {}, 2), std::invalid_argument);
}

TEST_CASE("demazure dimensions") {
  auto vrd = split("A", 1);
  CoxeterDatum cd = alcove_basis(vrd);
  auto r0 = demazure_dim(cd, {});
  CHECK(r0.dim == 0);
  CHECK(r0.reduced);
  auto r1 = demazure_dim(cd, {0, 1, 0});
  CHECK(r1.dim == 3);
  CHECK(r1.reduced);
  auto r2 = demazure_dim(cd, {0, 0});
  CHECK(r2.dim == 0);
  CHECK(!r2.reduced);
}
