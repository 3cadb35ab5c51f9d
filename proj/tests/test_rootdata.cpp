#include <doctest.h>

#include <algorithm>
#include <set>

#include "btk/rootdata.hpp"

using namespace btk;

namespace {

// Oracle: parabolic subsets by filtering all subsets of the root list
// (closure and P u -P = Phi checked directly).  Usable while 2^#roots is
// small.
long long parabolic_count_bruteforce(const RootSystem& rs) {
  const int n = rs.count();
  REQUIRE(n <= 20);
  long long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int a = 0; a < n; ++a)
      if (mask & (1u << a)) subset.push_back(a);
    if (is_parabolic_subset(rs, subset)) ++count;
  }
  return count;
}

// Oracle for BC_n: close the C_n roots under addition of halves of the
// long roots, counting the non-reduced system directly.
int bc_root_count_oracle(int n) {
  RootSystem c = RootSystem::build("C", n);
  std::set<std::vector<Rat>> roots;
  auto key = [&](const QVec& v) {
    std::vector<Rat> k(v.size());
    for (int i = 0; i < v.size(); ++i) k[i] = v[i];
    return k;
  };
  for (const QVec& r : c.amb_roots) {
    roots.insert(key(r));
    QVec h = r * Rat(1, 2);
    bool integral = true;
    for (int i = 0; i < h.size(); ++i)
      if (!h[i].is_integer()) integral = false;
    if (integral) roots.insert(key(h));  // halves lying in the weight lattice
  }
  return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("build: classical root counts") {
  CHECK(RootSystem::build("A", 2).count() == 6);
  CHECK(RootSystem::build("A", 1).count() == 2);
  CHECK(RootSystem::build("B", 2).count() == 8);
  CHECK(RootSystem::build("C", 2).count() == 8);
  CHECK(RootSystem::build("C", 3).count() == 18);
  CHECK(RootSystem::build("D", 4).count() == 24);
  CHECK(RootSystem::build("G", 2).count() == 12);
  CHECK(RootSystem::build("F", 4).count() == 48);
  CHECK(RootSystem::build("E", 6).count() == 72);
  CHECK(RootSystem::build("E", 7).count() == 126);
  CHECK(RootSystem::build("E", 8).count() == 240);
  CHECK(RootSystem::build("BC", 1).count() == 4);
  CHECK(RootSystem::build("BC", 2).count() == 12);
  CHECK(RootSystem::build("BC", 2).count() == bc_root_count_oracle(2));
  CHECK(RootSystem::build("BC", 3).count() == 2 * 9 + 2 * 3);
  CHECK_THROWS_AS(RootSystem::build("H", 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build("E", 5), std::invalid_argument);
}

TEST_CASE("root system structure invariants") {
  for (const auto& [label, rank] :
       std::vector<std::pair<std::string, int>>{
           {"A", 2}, {"B", 2}, {"C", 2}, {"G", 2}, {"BC", 1}, {"BC", 2},
           {"A", 3}, {"C", 3}, {"F", 4}}) {
    RootSystem rs = RootSystem::build(label, rank);
    CAPTURE(label);
    CAPTURE(rank);
    for (int a = 0; a < rs.count(); ++a) {
      CHECK(rs.pairing(a, a) == 2);  // <a, a^vee> = 2
      for (int b = 0; b < rs.count(); ++b)
        CHECK_NOTHROW(rs.reflect_root(a, b));  // closed under reflections
    }
    // BC: multipliable <-> doubled present
    if (label == "BC") {
      int mult = 0;
      for (int a = 0; a < rs.count(); ++a)
        if (rs.multipliable(a)) {
          ++mult;
          CHECK(rs.divisible(*rs.twice(a)));
        }
      CHECK(mult == 2 * rank);
    }
  }
}

TEST_CASE("Weyl group orders by closure enumeration") {
  CHECK(RootSystem::build("A", 2).weyl_permutations().size() == 6);
  CHECK(RootSystem::build("C", 2).weyl_permutations().size() == 8);
  CHECK(RootSystem::build("BC", 2).weyl_permutations().size() == 8);
  CHECK(RootSystem::build("G", 2).weyl_permutations().size() == 12);
  CHECK(RootSystem::build("F", 4).weyl_permutations().size() == 1152);
}

TEST_CASE("parabolic subsets: counts against the brute-force oracle") {
  RootSystem a1 = RootSystem::build("A", 1);
  auto pa1 = parabolic_subsets(a1);
  CHECK(pa1.size() == 3);
  CHECK(parabolic_count_bruteforce(a1) == 3);

  RootSystem a2 = RootSystem::build("A", 2);
  auto pa2 = parabolic_subsets(a2);
  CHECK(pa2.size() == 13);
  CHECK(parabolic_count_bruteforce(a2) == 13);

  RootSystem bc1 = RootSystem::build("BC", 1);
  auto pbc1 = parabolic_subsets(bc1);
  CHECK(pbc1.size() == 3);
  CHECK(parabolic_count_bruteforce(bc1) == 3);

  RootSystem c2 = RootSystem::build("C", 2);
  CHECK(parabolic_subsets(c2).size() == parabolic_count_bruteforce(c2));
  RootSystem g2 = RootSystem::build("G", 2);
  CHECK(parabolic_subsets(g2).size() == parabolic_count_bruteforce(g2));
  RootSystem bc2 = RootSystem::build("BC", 2);
  CHECK(parabolic_subsets(bc2).size() == parabolic_count_bruteforce(bc2));

  CHECK_THROWS_WITH_AS(parabolic_subsets(RootSystem::build("E", 6)),
                       "enumeration bound exceeded", std::invalid_argument);
}

TEST_CASE("parabolic subsets: structural properties") {
  RootSystem bc2 = RootSystem::build("BC", 2);
  auto subsets = parabolic_subsets(bc2);
  auto weyl = bc2.weyl_permutations();
  std::set<std::uint64_t> masks;
  for (const auto& p : subsets) masks.insert(p.mask);
  for (const auto& p : subsets) {
    CHECK(is_parabolic_subset(bc2, p.indices));
    // contains at least one positive system (w(Phi+) for some w)
    bool contains_pos = false;
    for (const auto& w : weyl) {
      bool all = true;
      for (int a = 0; a < bc2.count(); ++a)
        if (bc2.positive(a) && !(p.mask & (std::uint64_t{1} << w[a]))) {
          all = false;
          break;
        }
      if (all) { contains_pos = true; break; }
    }
    CHECK(contains_pos);
    // Weyl-stable as a family
    for (const auto& w : weyl) {
      std::uint64_t img = 0;
      for (int a : p.indices) img |= (std::uint64_t{1} << w[a]);
      CHECK(masks.count(img));
    }
    // divisibility: a in P iff 2a in P
    for (int a : p.indices)
      if (auto da = bc2.twice(a))
        CHECK(std::count(p.indices.begin(), p.indices.end(), *da) == 1);
  }
}

TEST_CASE("reflect") {
  RootSystem a1 = RootSystem::build("A", 1);
  QVec zero = QVec::Zero(1);
  CHECK(q_eq(a1.reflect_covector(0, zero), zero));

  RootSystem a2 = RootSystem::build("A", 2);
  int a = a2.simple[0];
  CHECK(q_eq(a2.reflect_covector(a, a2.covector(a)), -a2.covector(a)));

  // BC2: reflect a long root in a short one; oracle = the reflection matrix
  // assembled from the pairing table.
  RootSystem bc2 = RootSystem::build("BC", 2);
  int short_root = -1, long_root = -1;
  for (int i = 0; i < bc2.count(); ++i) {
    if (bc2.multipliable(i) && short_root < 0) short_root = i;
    if (!bc2.multipliable(i) && !bc2.divisible(i) && long_root < 0 &&
        bc2.len2[i] == Rat(2))
      long_root = i;
  }
  REQUIRE(short_root >= 0);
  REQUIRE(long_root >= 0);
  QVec expect = bc2.covector(long_root) -
                Rat(bc2.pairing(long_root, short_root)) * bc2.covector(short_root);
  CHECK(q_eq(bc2.reflect_covector(short_root, bc2.covector(long_root)), expect));
  CHECK(bc2.index_of(ZVec(bc2.roots[long_root] -
                          static_cast<int>(bc2.pairing(long_root, short_root)) *
                              bc2.roots[short_root])) ==
        bc2.reflect_root(short_root, long_root));
  // involution
  for (int b = 0; b < bc2.count(); ++b)
    CHECK(bc2.reflect_root(short_root, bc2.reflect_root(short_root, b)) == b);
}

TEST_CASE("subsystem extraction and classification") {
  RootSystem bc2 = RootSystem::build("BC", 2);
  // the two multipliable rays with their doubles form BC1 x BC1
  std::vector<int> idx;
  for (int a = 0; a < bc2.count(); ++a)
    if (bc2.multipliable(a) || bc2.divisible(a)) idx.push_back(a);
  RootSystem sub = bc2.subsystem(idx);
  auto factors = classify_factors(sub);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] == std::make_pair(std::string("BC"), 1));
  CHECK(factors[1] == std::make_pair(std::string("BC"), 1));

  auto g2 = RootSystem::build("G", 2);
  CHECK(classify_factors(g2.subsystem({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})) ==
        std::vector<std::pair<std::string, int>>{{"G", 2}});
}

TEST_CASE("named orbits") {
  RootSystem a2 = RootSystem::build("A", 2);
  CHECK(a2.weyl_orbits().size() == 1);
  RootSystem c2 = RootSystem::build("C", 2);
  CHECK(c2.weyl_orbits().size() == 2);
  RootSystem bc2 = RootSystem::build("BC", 2);
  CHECK(bc2.weyl_orbits().size() == 3);  // mult, middle, divisible
}
