#include <doctest.h>

#include <random>
#include <set>

#include "btk/valueset.hpp"

using namespace btk;

namespace {

// Brute-force oracle: all members of the include/exclude data inside a
// window, by direct enumeration of each progression.
std::vector<Rat> window_members(const std::vector<ArithProg>& inc,
                                const std::vector<ArithProg>& exc,
                                const Rat& lo, const Rat& hi) {
  std::set<Rat> in, out;
  for (const ArithProg& p : inc)
    for (Rat x = p.least_geq(lo); x <= hi; x += p.step) in.insert(x);
  for (const ArithProg& p : exc)
    for (Rat x = p.least_geq(lo); x <= hi; x += p.step) out.insert(x);
  std::vector<Rat> v;
  for (const Rat& x : in)
    if (!out.count(x)) v.push_back(x);
  return v;
}

ValueSet quarters_minus_halves() {
  return ValueSet({ArithProg(Rat(0), Rat(1, 4))}, {ArithProg(Rat(0), Rat(1, 2))});
}

}  // namespace

TEST_CASE("membership examples") {
  ValueSet z = ValueSet::lattice(Rat(1));
  CHECK(z.member(Rat(0)));

  ValueSet s = quarters_minus_halves();
  CHECK(s.member(Rat(3, 4)));
  CHECK(!s.member(Rat(1, 2)));

  // (1/3)Z minus Z: 2 was removed.  Oracle: enumerate members in [-3, 3].
  ValueSet thirds({ArithProg(Rat(0), Rat(1, 3))}, {ArithProg(Rat(0), Rat(1))});
  auto oracle = window_members({ArithProg(Rat(0), Rat(1, 3))},
                               {ArithProg(Rat(0), Rat(1))}, Rat(-3), Rat(3));
  CHECK(!thirds.member(Rat(2)));
  for (const Rat& x : oracle) CHECK(thirds.member(x));
  CHECK(oracle.size() == 12);  // 18 thirds, 6 integers removed (window: -3..3 has 19 points, 7 ints)
}

TEST_CASE("member agrees with brute-force enumeration on a window") {
  std::vector<std::pair<std::vector<ArithProg>, std::vector<ArithProg>>> cases =
      {{{ArithProg(Rat(1, 3), Rat(1, 2))}, {}},
       {{ArithProg(Rat(0), Rat(1, 4))}, {ArithProg(Rat(0), Rat(1, 2))}},
       {{ArithProg(Rat(1, 6), Rat(1, 3)), ArithProg(Rat(0), Rat(1, 2))}, {}},
       {{ArithProg(Rat(0), Rat(1, 6))}, {ArithProg(Rat(0), Rat(1, 2)), ArithProg(Rat(1, 3), Rat(1))}}};
  for (const auto& [inc, exc] : cases) {
    ValueSet s(inc, exc);
    auto members = window_members(inc, exc, Rat(-4), Rat(4));
    std::set<Rat> member_set(members.begin(), members.end());
    // every 1/12 grid point in the window must classify identically
    for (long long n = -48; n <= 48; ++n) {
      Rat x(n, 12);
      CHECK(s.member(x) == (member_set.count(x) > 0));
    }
    // members_in matches
    auto got = s.members_in(Rat(-4), Rat(4));
    CHECK(got == members);
  }
}

TEST_CASE("least_geq / least_gt examples") {
  ValueSet z = ValueSet::lattice(Rat(1));
  CHECK(z.least_geq(Rat(3, 10)) == Rat(1));
  CHECK(z.least_gt(Rat(0)) == Rat(1));

  // Oracle for the BC set: brute-force scan of (1/4)Z within [1/2, 2].
  ValueSet s = quarters_minus_halves();
  Rat expect(0);
  for (Rat x = Rat(1, 2); x <= Rat(2); x += Rat(1, 4))
    if (s.member(x)) { expect = x; break; }
  CHECK(expect == Rat(3, 4));
  CHECK(s.least_geq(Rat(1, 2)) == expect);
}

TEST_CASE("least_geq is the true successor (sampled gaps)") {
  std::mt19937_64 rng(7);
  std::vector<ValueSet> sets = {ValueSet::lattice(Rat(1)),
                                ValueSet::lattice(Rat(1, 3), Rat(1, 7)),
                                quarters_minus_halves()};
  for (const ValueSet& s : sets) {
    for (int i = 0; i < 50; ++i) {
      Rat x(static_cast<long long>(rng() % 2000) - 1000,
            static_cast<long long>(rng() % 40) + 1);
      Rat up = s.least_geq(x);
      CHECK(s.member(up));
      CHECK(x <= up);
      for (int k = 0; k < 1000; ++k) {
        // random rational in [x, up)
        Rat y = x + (up - x) * Rat(static_cast<long long>(rng() % 997), 997);
        if (y < up) CHECK(!s.member(y));
      }
      Rat down = s.greatest_leq(x);
      CHECK(s.member(down));
      CHECK(down <= x);
    }
  }
}

TEST_CASE("affine_image examples and round trip") {
  CHECK(ValueSet::lattice(Rat(1, 2)).affine_image(Rat(2), Rat(0)) ==
        ValueSet::lattice(Rat(1)));
  CHECK(ValueSet::lattice(Rat(1)).affine_image(Rat(1), Rat(0)) ==
        ValueSet::lattice(Rat(1)));

  // Oracle: pointwise image of members of (1/4)Z minus (1/2)Z in [-2,2].
  ValueSet s = quarters_minus_halves();
  ValueSet img = s.affine_image(Rat(2), Rat(0));
  ValueSet expect({ArithProg(Rat(0), Rat(1, 2))}, {ArithProg(Rat(0), Rat(1))});
  CHECK(img == expect);
  for (const Rat& x : s.members_in(Rat(-2), Rat(2)))
    CHECK(img.member(Rat(2) * x));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    Rat c(static_cast<long long>(rng() % 7) + 1,
          static_cast<long long>(rng() % 5) + 1);
    if (rng() % 2) c = -c;
    Rat d(static_cast<long long>(rng() % 21) - 10,
          static_cast<long long>(rng() % 6) + 1);
    ValueSet round =
        s.affine_image(c, d).affine_image(Rat(1) / c, -d / c);
    CHECK(round == s);
  }
}

TEST_CASE("canonical form decides equality syntactically") {
  // (1/4)Z minus (1/2)Z equals the progression (1/2)Z + 1/4.
  CHECK(quarters_minus_halves() == ValueSet::lattice(Rat(1, 2), Rat(1, 4)));
  // Union collapsing: odd quarters with halves give all quarters.
  CHECK(quarters_minus_halves().unite(ValueSet::lattice(Rat(1, 2))) ==
        ValueSet::lattice(Rat(1, 4)));
}

TEST_CASE("errors") {
  ValueSet empty;
  CHECK_THROWS_WITH_AS(empty.least_geq(Rat(0)), "empty value set",
                       std::domain_error);
  CHECK_THROWS_AS(ValueSet({ArithProg(Rat(0), Rat(1, 2))},
                           {ArithProg(Rat(0), Rat(1, 3))}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ValueSet::lattice(Rat(1)).affine_image(Rat(0), Rat(0)),
                  std::invalid_argument);
}

TEST_CASE("textual form round trip") {
  ValueSet s = quarters_minus_halves();
  CHECK(s.str() == "1/2*Z + 1/4");
  CHECK(ValueSet::parse("1/2*Z + 1/4") == s);
  CHECK(ValueSet::parse("1/4*Z minus 1/2*Z") == s);
  ValueSet gamma = ValueSet::lattice(Rat(1), Rat(-1, 3));
  CHECK(ValueSet::parse(gamma.str()) == gamma);
  CHECK(ValueSet::parse("1*Z + 2/3") == gamma);
}

TEST_CASE("intersection and emptiness") {
  ValueSet s = quarters_minus_halves();
  ValueSet doubled = s.affine_image(Rat(2), Rat(0));  // odd halves
  CHECK(doubled.intersect(ValueSet::lattice(Rat(1))).empty());
  CHECK(s.intersect(s) == s);
}
