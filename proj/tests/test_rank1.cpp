#include <doctest.h>

#include <random>
#include <set>

#include "btk/rank1.hpp"

using namespace btk;

TEST_CASE("finite fields") {
  GFCtx f25(5, 2);
  GFElem th(&f25, 0, 1);
  // theta^2 = 2 (the least non-square mod 5)
  CHECK(th * th == GFElem(&f25, 2));
  // Frobenius is the nontrivial automorphism: th^5 = 4 th = -th
  CHECK(th.frobenius() == -th);
  for (long long a = 0; a < 5; ++a)
    for (long long b = 0; b < 5; ++b) {
      GFElem x(&f25, a, b);
      if (x.is_zero()) continue;
      CHECK(x * x.inverse() == GFElem(&f25, 1));
    }
  GFCtx f4(2, 2);
  GFElem t4(&f4, 0, 1);
  CHECK(t4 * t4 == GFElem(&f4, 1, 1));  // th^2 = th + 1
  CHECK(t4 + t4.frobenius() == GFElem(&f4, 1));  // trace 1
}

TEST_CASE("omega examples") {
  // omega(t^2 (1+t)/(1-t)) = 2 over F3(t)
  FieldTower f3 = FieldTower::trivial(3);
  FF x = f3.t_pow(2) * f3.from_coeffs({1, 1}) / f3.from_coeffs({1, -1});
  CHECK(f3.omega_finite(x) == Rat(2));

  // omega(sqrt t) = 1/2 in F2(t^(1/2))
  FieldTower f2 = FieldTower::uniformizer_root(2, 2);
  CHECK(f2.omega_finite(f2.s_pow(1)) == Rat(1, 2));
  CHECK(f2.omega(f2.zero()).first);

  // additivity on random pairs
  std::mt19937_64 rng(3);
  FieldTower f5 = FieldTower::unramified_quadratic(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<long long> ca{static_cast<long long>(rng() % 5),
                              static_cast<long long>(rng() % 5),
                              static_cast<long long>(rng() % 4) + 1};
    std::vector<long long> cb{static_cast<long long>(rng() % 5),
                              static_cast<long long>(rng() % 4) + 1};
    FF a = f5.from_coeffs(ca) * f5.s_pow(static_cast<long long>(rng() % 7) - 3);
    FF b = f5.from_coeffs(cb);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(f5.omega_finite(a * b) == f5.omega_finite(a) + f5.omega_finite(b));
  }
}

TEST_CASE("sigma fixes exactly the base") {
  FieldTower f25 = FieldTower::unramified_quadratic(5);
  FF th = f25.constant(0, 1);
  CHECK(f25.sigma(th) == -th);
  CHECK(f25.sigma(f25.t_pow(3)) == f25.t_pow(3));
  CHECK(f25.in_base(f25.t_pow(3) + f25.constant(2)));
  CHECK(!f25.in_base(th));

  FieldTower ram = FieldTower::ramified_quadratic(3);
  FF s = ram.s_pow(1);
  CHECK(ram.sigma(s) == -s);
  CHECK(ram.sigma(s * s) == s * s);
  CHECK(ram.in_base(s * s));
  CHECK(!ram.in_base(s));
}

TEST_CASE("su3 group law over F25(t)") {
  FieldTower tw = FieldTower::unramified_quadratic(5);
  SU3Realization r{tw, tw.constant(3)};  // 3 = 1/2 mod 5, trace 1
  CHECK(tw.trace(r.lambda) == tw.one());

  FF th = tw.constant(0, 1);  // th^2 = 2, sigma(th) = -th
  SU3Point p{th * tw.t_pow(1), -(tw.t_pow(2))};
  // v + sigma(v) = -2 t^2; u sigma(u) = th t * (-th t) = -2 t^2
  CHECK(r.in_group(p));
  CHECK(r.mul(r.identity(), p) == p);

  SU3Point pp = r.mul(p, p);
  CHECK(r.in_group(pp));
  CHECK(pp.u == th * tw.t_pow(1) * tw.constant(2));
  // v' = v + v + sigma(u) u = -2t^2 + (-2t^2) = -4t^2 = t^2 (mod 5)
  CHECK(pp.v == tw.t_pow(2));

  // phi of p: (1/2) omega(-t^2) = 1
  auto [inf, val] = phi_su3(r, p);
  CHECK(!inf);
  CHECK(val == Rat(1));

  // associativity on random triples
  std::mt19937_64 rng(17);
  auto rand_pt = [&]() {
    std::vector<long long> c{static_cast<long long>(rng() % 5),
                             static_cast<long long>(rng() % 5)};
    FF u = tw.from_coeffs(c) + th * tw.constant(static_cast<long long>(rng() % 5));
    FF b = tw.t_pow(static_cast<long long>(rng() % 5) - 2) *
           tw.constant(static_cast<long long>(rng() % 5));
    return SU3Point{u, r.lambda * u * tw.sigma(u) + tw.trace_zero_gen() * b};
  };
  for (int i = 0; i < 100; ++i) {
    SU3Point a = rand_pt(), b = rand_pt(), c = rand_pt();
    CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
  }

  // constraint violation raises
  SU3Point bad{th, tw.one()};
  CHECK(!r.in_group(bad));
  CHECK_THROWS_WITH_AS(r.mul(bad, p), "not in H(L,L2)", std::invalid_argument);
}

TEST_CASE("j_lambda") {
  FieldTower tw = FieldTower::unramified_quadratic(5);
  SU3Realization r{tw, tw.constant(3)};
  FF th = tw.constant(0, 1);

  // u = 0 and trace-zero v stay fixed
  SU3Point p0{tw.zero(), th * tw.t_pow(1)};
  REQUIRE(r.in_group(p0));
  HLambdaPoint h0 = r.j_lambda(p0);
  CHECK(h0.x == p0.u);
  CHECK(h0.y == p0.v);

  std::mt19937_64 rng(23);
  auto rand_pt = [&]() {
    FF u = tw.t_pow(static_cast<long long>(rng() % 5) - 2) *
               tw.constant(static_cast<long long>(rng() % 5)) +
           th * tw.constant(static_cast<long long>(rng() % 5));
    FF b = tw.constant(static_cast<long long>(rng() % 5));
    return SU3Point{u, r.lambda * u * tw.sigma(u) + tw.trace_zero_gen() * b};
  };
  for (int i = 0; i < 100; ++i) {
    SU3Point a = rand_pt(), b = rand_pt();
    HLambdaPoint ja = r.j_lambda(a);
    CHECK(r.in_h_lambda(ja));  // y + sigma(y) = 0 exactly
    CHECK(r.j_lambda(r.mul(a, b)) == r.h_mul(ja, r.j_lambda(b)));
  }

  SU3Realization bad{tw, tw.constant(1)};  // trace 2 != 1
  CHECK_THROWS_AS(bad.j_lambda(rand_pt()), std::invalid_argument);
}

TEST_CASE("phi examples") {
  // SL2 over F3(t): phi(x_a(t^2)) = 2
  SL2Realization sl2{FieldTower::trivial(3)};
  auto [i1, v1] = phi_sl2(sl2, sl2.x_plus(sl2.tower.t_pow(2)));
  CHECK(!i1);
  CHECK(v1 == Rat(2));

  // BC1 over F2(t), alpha = sqrt(t): phi(x_a(t, t^3)) = 5/4
  FieldTower tw = FieldTower::uniformizer_root(2, 2);
  BC1Realization bc{tw, tw.s_pow(1)};
  auto [i2, v2] = phi_bc1(bc, {tw.t_pow(1), tw.t_pow(3)});
  CHECK(!i2);
  CHECK(v2 == Rat(5, 4));

  // identity gives +infinity
  CHECK(phi_bc1(bc, {tw.zero(), tw.zero()}).first);
}

TEST_CASE("axiom reports pass for the shipped realizations") {
  AxiomOptions opt;
  opt.seed = 0;

  auto sl2 = make_realization({RayCaseKind::ResSL2, 1, {}}, 3);
  REQUIRE(sl2);
  AxiomReport r1 = axiom_report(*sl2, opt);
  CHECK(r1.ok());

  auto res2 = make_realization({RayCaseKind::ResSL2, 2, {}}, 2);
  REQUIRE(res2);
  CHECK(axiom_report(*res2, opt).ok());

  auto su3 = make_realization({RayCaseKind::SU3Unram, 1, {}}, 5);
  REQUIRE(su3);
  CHECK(axiom_report(*su3, opt).ok());

  auto bc1 = make_realization({RayCaseKind::BC1, 1, {}}, 2);
  REQUIRE(bc1);
  CHECK(axiom_report(*bc1, opt).ok());

  auto sur = make_realization({RayCaseKind::SU3Ram, 1, {}}, 3);
  REQUIRE(sur);
  CHECK(axiom_report(*sur, opt).ok());

  // no realization for the deferred char-2 ramified case or e2 > 1
  CHECK(!make_realization({RayCaseKind::SU3Ram, 1, {}}, 2));
  CHECK(!make_realization({RayCaseKind::SU3Unram, 2, {}}, 3));
}

TEST_CASE("torus compatibility shift: z = diag(t, 1/t) in SL2 shifts by 2") {
  SL2Realization r{FieldTower::trivial(3)};
  const FieldTower& tw = r.tower;
  Mat2 z = r.torus(tw.t_pow(1));
  Mat2 u = r.x_plus(tw.from_coeffs({1, 2, 1}));
  Mat2 conj = mul(mul(z, u), inverse_sl2(z));
  auto [i0, before] = phi_sl2(r, u);
  auto [i1, after] = phi_sl2(r, conj);
  REQUIRE(!i0);
  REQUIRE(!i1);
  CHECK(after - before == Rat(2));
}

TEST_CASE("attained value sets match the echelonnage formulas") {
  // BC1 over F2(t): attained Gamma'_a values in [-1, 1] are the odd quarters
  auto bc1 = make_realization({RayCaseKind::BC1, 1, {}}, 2);
  const auto& r = std::get<BC1Realization>(*bc1);
  const FieldTower& tw = r.tower;
  std::set<Rat> attained;
  for (long long m = -4; m <= 4; ++m) {
    auto [inf, v] = phi_bc1(r, {tw.s_pow(m), tw.zero()});
    if (!inf && Rat(-1) <= v && v <= Rat(1)) attained.insert(v);
  }
  std::set<Rat> expect{Rat(-3, 4), Rat(-1, 4), Rat(1, 4), Rat(3, 4)};
  CHECK(attained == expect);
}

TEST_CASE("char-2 unramified SU3 over F4(t)") {
  auto su3 = make_realization({RayCaseKind::SU3Unram, 1, {}}, 2);
  REQUIRE(su3);
  const auto& r = std::get<SU3Realization>(*su3);
  // lambda = theta has trace theta + theta^2 = 1 in F4
  CHECK(r.tower.trace(r.lambda) == r.tower.one());
  AxiomOptions opt;
  CHECK(axiom_report(*su3, opt).ok());
}
