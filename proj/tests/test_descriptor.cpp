#include <doctest.h>

#include "btk/descriptor.hpp"
#include "btk/render.hpp"

using namespace btk;

TEST_CASE("minimal split A1 descriptor") {
  GroupDescriptor d = parse_descriptor(
      "[group]\n"
      "label = A\n"
      "rank = 1\n"
      "residue_char = 3\n"
      "\n"
      "[ray.all]\n"
      "case = RES_SL2\n"
      "e = 1\n");
  CHECK(d.label == "A");
  CHECK(d.rank == 1);
  ValuedRootDatum vrd = build_valued_root_datum(d);
  for (int a = 0; a < vrd.rs.count(); ++a)
    CHECK(vrd.gp(a) == ValueSet::lattice(Rat(1)));
}

TEST_CASE("syntax errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_descriptor("[group]\nlabel = A\nrank\n"),
                       "descriptor:3: expected 'key = value'",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_descriptor("[group]\nlabel = A\nrank = 1\ncolor = blue\n"),
      "descriptor:4: unknown key 'color' in [group]", std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("label = A\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("[grp]\n"), std::invalid_argument);
}

TEST_CASE("semantic errors surface from assemble") {
  // BC1 descriptor with residue_char = 3
  GroupDescriptor d = parse_descriptor(
      "[group]\nlabel = BC\nrank = 1\nresidue_char = 3\n"
      "[ray.all]\ncase = BC1\ne2 = 1\n");
  CHECK_THROWS_WITH_AS(build_valued_root_datum(d),
                       "BC case requires characteristic 2",
                       std::invalid_argument);

  // gamma = 1/3 on a BC1 ray violates the value-group constraint
  GroupDescriptor g = parse_descriptor(
      "[group]\nlabel = BC\nrank = 1\nresidue_char = 2\n"
      "[ray.all]\ncase = BC1\ne2 = 1\ngamma = 1/3\n");
  CHECK_THROWS_AS(build_valued_root_datum(g), std::invalid_argument);
}

TEST_CASE("comment handling and compare section") {
  GroupDescriptor d = parse_descriptor(
      "# exotic C2\n"
      "[group]\n"
      "label = C\n"
      "rank = 2\n"
      "residue_char = 2  # characteristic two\n"
      "[ray.short]\n"
      "case = RES_SL2\n"
      "e = 2\n"
      "[ray.long]\n"
      "case = RES_SL2\n"
      "e = 1\n"
      "[compare]\n"
      "mode = exotic\n"
      "degree.short = 2\n");
  REQUIRE(d.compare);
  CHECK(d.compare->mode == "exotic");
  CHECK(d.compare->degrees.at("short") == 2);
}

TEST_CASE("point and index-set parsing") {
  QVec x = parse_point("1/2,-3", 2);
  CHECK(x[0] == Rat(1, 2));
  CHECK(x[1] == Rat(-3));
  CHECK_THROWS_AS(parse_point("1,2,3", 2), std::invalid_argument);
  CHECK(parse_index_set("{}").empty());
  CHECK(parse_index_set("{0,2}") == std::vector<int>{0, 2});
  CHECK(parse_index_set("1") == std::vector<int>{1});
}

TEST_CASE("command runners produce reports and exit codes") {
  GroupDescriptor bc1 = parse_descriptor(
      "[group]\nlabel = BC\nrank = 1\nresidue_char = 2\n"
      "[ray.all]\ncase = BC1\ne2 = 1\n[compare]\nmode = bc\n");
  for (const CommandResult& res :
       {run_apartment(bc1, Rat(2)), run_facet(bc1, parse_point("1/4", 1)),
        run_star(bc1, parse_point("0", 1)), run_cosets(bc1, {0}, {0}, 3),
        run_verify(bc1, 0), run_compare(bc1, Rat(4))}) {
    CHECK(res.exit_code == 0);
    CHECK(!res.text.empty());
    CHECK(res.json.size() > 2);
    CHECK(res.json.front() == '{');
  }
  // a descriptor without [compare] cannot run compare
  GroupDescriptor plain = parse_descriptor(
      "[group]\nlabel = A\nrank = 1\nresidue_char = 3\n"
      "[ray.all]\ncase = RES_SL2\ne = 1\n");
  CHECK_THROWS_AS(run_compare(plain, Rat(4)), std::invalid_argument);
  // a ray section without a case line is rejected
  CHECK_THROWS_AS(parse_descriptor("[group]\nlabel = A\nrank = 1\n"
                                   "residue_char = 3\n[ray.all]\ne = 1\n"),
                  std::invalid_argument);
}
