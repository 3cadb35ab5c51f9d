#include <doctest.h>

#include <set>

#include "btk/affweyl.hpp"
#include "btk/compare.hpp"

using namespace btk;

namespace {

ValuedRootDatum split(const std::string& label, int rank, long long p = 3) {
  RootSystem rs = RootSystem::build(label, rank);
  std::map<std::string, RayCase> cases;
  for (const auto& [name, members] : named_ray_orbits(rs))
    cases[name] = {RayCaseKind::ResSL2, 1, {}};
  return assemble(rs, cases, p);
}

ValuedRootDatum exotic(const std::string& label, long long p) {
  RootSystem rs = RootSystem::build(label, 2);
  return assemble(rs,
                  {{"short", {RayCaseKind::ResSL2, p, {}}},
                   {"long", {RayCaseKind::ResSL2, 1, {}}}},
                  p);
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

QMat identity_map(int n) {
  QMat m = QMat::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Rat(1);
  return m;
}

}  // namespace

TEST_CASE("exotic transport: C2 over F2 lands on the split cousin") {
  auto vrd = exotic("C", 2);
  TransportResult tr = exotic_transport(vrd, {{"short", 2}, {"long", 1}});
  CHECK(tr.vrd.rs.label == "B");
  for (int a = 0; a < tr.vrd.rs.count(); ++a)
    CHECK(tr.vrd.gp(a) == ValueSet::lattice(Rat(1)));
  WallsReport walls = walls_equal(vrd, tr.point_map, tr.vrd, Rat(4));
  CHECK(walls.equal);
  // compare wall sets against the honestly split cousin too
  auto cousin = split("B", 2, 2);
  WallsReport walls2 = walls_equal(tr.vrd, identity_map(2), cousin, Rat(4));
  CHECK(walls2.equal);
}

TEST_CASE("exotic transport: trivial degrees are the identity") {
  auto vrd = split("A", 2);
  TransportResult tr = exotic_transport(vrd, {{"all", 1}});
  CHECK(tr.vrd.rs.label == "A");
  WallsReport walls = walls_equal(vrd, tr.point_map, tr.vrd, Rat(4));
  CHECK(walls.equal);
}

TEST_CASE("exotic transport: G2 over F3") {
  auto vrd = exotic("G", 3);
  TransportResult tr = exotic_transport(vrd, {{"short", 3}, {"long", 1}});
  CHECK(tr.vrd.rs.label == "G");
  for (int a = 0; a < tr.vrd.rs.count(); ++a)
    CHECK(tr.vrd.gp(a) == ValueSet::lattice(Rat(1)));
  CHECK(walls_equal(vrd, tr.point_map, tr.vrd, Rat(4)).equal);
  CHECK(walls_equal(tr.vrd, identity_map(2), split("G", 2, 3), Rat(4)).equal);
}

TEST_CASE("exotic transport: degree validation") {
  auto vrd = exotic("C", 2);
  CHECK_THROWS_AS(exotic_transport(vrd, {{"short", 3}, {"long", 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(exotic_transport(vrd, {{"short", 2}}),
                  std::invalid_argument);
  auto bc = bc_datum(1);
  CHECK_THROWS_AS(exotic_transport(bc, {{"all", 2}}), std::invalid_argument);
}

TEST_CASE("round trip through the dual recovers the arrangement") {
  auto vrd = exotic("C", 2);
  TransportResult fwd = exotic_transport(vrd, {{"short", 2}, {"long", 1}});
  // The inverse transport is the value-set rescaling 1/d ray by ray; at the
  // arrangement level walls_equal certifies it directly.
  for (size_t oid = 0; oid < vrd.orbit_case.size(); ++oid) {
    int rep = -1;
    for (int a = 0; a < vrd.rs.count(); ++a)
      if (vrd.orbit_of_root[a] == static_cast<int>(oid)) { rep = a; break; }
    long long d = vrd.orbit_case[oid].e2;
    int img = fwd.root_image[rep];
    CHECK(fwd.vrd.gp(img).affine_image(Rat(1, d), Rat(0)) == vrd.gp(rep));
  }
}

TEST_CASE("bc transport: BC1 to A1 over the square root field") {
  auto vrd = bc_datum(1);
  TransportResult tr = bc_transport(vrd);
  CHECK(tr.vrd.rs.label == "A");
  CHECK(tr.value_scale == Rat(2));
  // Gamma' = Z in the K^(1/2) normalization; 1/2 Z in the K-normalization.
  for (int a = 0; a < tr.vrd.rs.count(); ++a)
    CHECK(tr.vrd.gp(a) == ValueSet::lattice(Rat(1)));

  WallsReport walls = walls_equal(vrd, tr.point_map, tr.vrd, Rat(4));
  CHECK(walls.equal);
  REQUIRE(walls.rays.size() == 1);
  // the BC wall positions are the quarter grid; under b(2x) with b = 2a the
  // scale is 4
  CHECK(walls.rays[0].scale == Rat(4));

  // alcove geometry is preserved: both data have type A1~ Coxeter matrices
  CoxeterDatum c1 = alcove_basis(vrd);
  CoxeterDatum c2 = alcove_basis(tr.vrd);
  REQUIRE(c1.coxeter.rows() == c2.coxeter.rows());
  for (int i = 0; i < c1.coxeter.rows(); ++i)
    for (int j = 0; j < c1.coxeter.cols(); ++j)
      CHECK(c1.coxeter(i, j) == c2.coxeter(i, j));
}

TEST_CASE("bc transport: BC2 to C2, wall multisets equal per ray") {
  auto vrd = bc_datum(2);
  TransportResult tr = bc_transport(vrd);
  CHECK(tr.vrd.rs.label == "C");
  WallsReport walls = walls_equal(vrd, tr.point_map, tr.vrd, Rat(4));
  CHECK(walls.equal);
  for (const auto& rr : walls.rays) {
    CHECK(rr.equal);
    CHECK(rr.source_positions == rr.target_positions);
  }
  // Coxeter type preserved (C2~)
  CoxeterDatum c1 = alcove_basis(vrd);
  CoxeterDatum c2 = alcove_basis(tr.vrd);
  std::multiset<int> o1, o2;
  for (int i = 0; i < c1.coxeter.rows(); ++i)
    for (int j = i + 1; j < c1.coxeter.cols(); ++j) {
      o1.insert(c1.coxeter(i, j));
      o2.insert(c2.coxeter(i, j));
    }
  CHECK(o1 == o2);
}

TEST_CASE("bc transport: label/case validation") {
  CHECK_THROWS_AS(bc_transport(split("A", 1)), std::invalid_argument);
  // SU3 echelonnage on a BC1 system is not the absolutely non-reduced case
  RootSystem bc1 = RootSystem::build("BC", 1);
  auto su = assemble(bc1, {{"all", {RayCaseKind::SU3Unram, 1, {}}}}, 5);
  CHECK_THROWS_AS(bc_transport(su), std::invalid_argument);
}

TEST_CASE("walls_equal basics") {
  auto a1 = split("A", 1);
  CHECK(walls_equal(a1, identity_map(1), a1, Rat(4)).equal);

  // split A1 vs half-integer walls: first discrepancy at 1/2
  RootSystem rs = RootSystem::build("A", 1);
  auto half = assemble(rs, {{"all", {RayCaseKind::ResSL2, 2, {}}}}, 3);
  WallsReport rep = walls_equal(a1, identity_map(1), half, Rat(4));
  CHECK(!rep.equal);
  REQUIRE(rep.rays.size() == 1);
  CHECK(rep.rays[0].discrepancy == "first discrepancy at position 1/2");
}
