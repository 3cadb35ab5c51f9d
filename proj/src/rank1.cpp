#include "btk/rank1.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace btk {

Mat2 Mat2::identity(const FieldTower& tw) {
  return {tw.one(), tw.zero(), tw.zero(), tw.one()};
}

Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 inverse_sl2(const Mat2& x) { return {x.d, -x.b, -x.c, x.a}; }

Mat2 SL2Realization::x_plus(const FF& r) const {
  return {tower.one(), r, tower.zero(), tower.one()};
}

Mat2 SL2Realization::x_minus(const FF& r) const {
  return {tower.one(), tower.zero(), r, tower.one()};
}

Mat2 SL2Realization::torus(const FF& c) const {
  return {c, tower.zero(), tower.zero(), c.inverse()};
}

Mat2 SL2Realization::m_element(const FF& r) const {
  FF mr = -(r.inverse());
  return mul(mul(x_minus(mr), x_plus(r)), x_minus(mr));
}

std::pair<bool, Rat> phi_sl2(const SL2Realization& r, const Mat2& m) {
  const FieldTower& tw = r.tower;
  bool upper = m.a == tw.one() && m.d == tw.one() && m.c.is_zero();
  bool lower = m.a == tw.one() && m.d == tw.one() && m.b.is_zero();
  if (!upper && !lower)
    throw std::invalid_argument("phi: not a root group element");
  const FF& arg = upper ? m.b : m.c;
  return tw.omega(arg);
}

bool SU3Realization::in_group(const SU3Point& p) const {
  return tower.trace(p.v) == p.u * tower.sigma(p.u);
}

SU3Point SU3Realization::mul(const SU3Point& p, const SU3Point& q) const {
  if (!in_group(p) || !in_group(q))
    throw std::invalid_argument("not in H(L,L2)");
  return {p.u + q.u, p.v + q.v + tower.sigma(p.u) * q.u};
}

SU3Point SU3Realization::inverse(const SU3Point& p) const {
  return {-p.u, tower.sigma(p.v)};
}

HLambdaPoint SU3Realization::j_lambda(const SU3Point& p) const {
  if (!(tower.trace(lambda) == tower.one()))
    throw std::invalid_argument("j_lambda: lambda must have trace 1");
  if (!in_group(p)) throw std::invalid_argument("not in H(L,L2)");
  return {p.u, p.v - lambda * p.u * tower.sigma(p.u)};
}

HLambdaPoint SU3Realization::h_mul(const HLambdaPoint& p,
                                   const HLambdaPoint& q) const {
  return {p.x + q.x, p.y + q.y - lambda * p.x * tower.sigma(q.x) +
                         tower.sigma(lambda * p.x) * q.x};
}

bool SU3Realization::in_h_lambda(const HLambdaPoint& p) const {
  return tower.trace(p.y).is_zero();
}

SU3Point SU3Realization::torus_conj(const FF& c, const SU3Point& p) const {
  FF sc = tower.sigma(c);
  return {sc * sc * c.inverse() * p.u, c * sc * p.v};
}

std::pair<bool, Rat> phi_su3(const SU3Realization& r, const SU3Point& p) {
  if (!r.in_group(p)) throw std::invalid_argument("not in H(L,L2)");
  auto [inf, v] = r.tower.omega(p.v);
  return {inf, v / Rat(2)};
}

std::pair<bool, Rat> phi_h_lambda(const SU3Realization& r,
                                  const HLambdaPoint& p) {
  FF arg = p.y + r.lambda * p.x * r.tower.sigma(p.x);
  auto [inf, v] = r.tower.omega(arg);
  return {inf, v / Rat(2)};
}

BC1Point BC1Realization::mul(const BC1Point& p, const BC1Point& q) const {
  return {p.x + q.x, p.y + q.y};
}

BC1Point BC1Realization::inverse(const BC1Point& p) const {
  return {-p.x, -p.y};
}

BC1Point BC1Realization::torus_conj(const FF& c, const BC1Point& p) const {
  return {c * p.x, c * c * p.y};
}

std::pair<bool, Rat> phi_bc1(const BC1Realization& r, const BC1Point& p) {
  if (!r.tower.in_base(p.y))
    throw std::invalid_argument("BC1 point: y must lie in the base field");
  FF arg = r.alpha * p.x * p.x + p.y;
  auto [inf, v] = r.tower.omega(arg);
  return {inf, v / Rat(2)};
}

RayCase realization_case(const Rank1Realization& r) {
  RayCase rc;
  if (const auto* sl2 = std::get_if<SL2Realization>(&r)) {
    rc.kind = RayCaseKind::ResSL2;
    rc.e2 = sl2->tower.edeg();
  } else if (const auto* su3 = std::get_if<SU3Realization>(&r)) {
    rc.kind = su3->tower.sigma_kind() == SigmaKind::Frobenius
                  ? RayCaseKind::SU3Unram
                  : RayCaseKind::SU3Ram;
    rc.e2 = 1;
    rc.gamma = -su3->tower.omega_finite(su3->lambda) / Rat(2);
  } else {
    const auto& bc = std::get<BC1Realization>(r);
    rc.kind = RayCaseKind::BC1;
    rc.e2 = 1;
    rc.gamma = -bc.tower.omega_finite(bc.alpha) / Rat(2);
  }
  return rc;
}

std::string realization_name(const Rank1Realization& r) {
  if (const auto* sl2 = std::get_if<SL2Realization>(&r))
    return "SL2 over " + sl2->tower.describe();
  if (const auto* su3 = std::get_if<SU3Realization>(&r))
    return (su3->tower.sigma_kind() == SigmaKind::Frobenius ? "SU3 unramified, "
                                                            : "SU3 ramified, ") +
           su3->tower.describe();
  return "BC1 over " + std::get<BC1Realization>(r).tower.describe();
}

std::optional<Rank1Realization> make_realization(const RayCase& rc,
                                                 long long residue_char) {
  long long p = residue_char;
  switch (rc.kind) {
    case RayCaseKind::ResSL2: {
      if (rc.e2 > 3) return std::nullopt;
      SL2Realization r{rc.e2 == 1 ? FieldTower::trivial(p)
                                  : FieldTower::uniformizer_root(
                                        p, static_cast<int>(rc.e2))};
      return Rank1Realization(r);
    }
    case RayCaseKind::SU3Unram: {
      if (rc.e2 != 1 || !rc.gamma_or_default().is_zero()) return std::nullopt;
      FieldTower tw = FieldTower::unramified_quadratic(p);
      FF lambda = p == 2 ? tw.constant(0, 1) : tw.constant((p + 1) / 2);
      return Rank1Realization(SU3Realization{tw, lambda});
    }
    case RayCaseKind::SU3Ram: {
      if (p == 2 || rc.e2 != 1 || !rc.gamma_or_default().is_zero())
        return std::nullopt;
      FieldTower tw = FieldTower::ramified_quadratic(p);
      FF lambda = tw.constant((p + 1) / 2);
      return Rank1Realization(SU3Realization{tw, lambda});
    }
    case RayCaseKind::BC1: {
      if (p != 2 || rc.e2 != 1) return std::nullopt;
      FieldTower tw = FieldTower::uniformizer_root(2, 2);
      Rat g = rc.gamma_or_default();
      long long m = (Rat(-4) * g).num();  // omega(alpha) = m/2, m odd
      return Rank1Realization(BC1Realization{tw, tw.s_pow(m)});
    }
  }
  return std::nullopt;
}

namespace {

struct PhiVal {
  bool inf;
  Rat v;
  bool operator>=(const PhiVal& o) const {
    if (inf) return true;
    if (o.inf) return false;
    return v >= o.v;
  }
  bool operator==(const PhiVal& o) const {
    return inf == o.inf && (inf || v == o.v);
  }
  PhiVal min(const PhiVal& o) const { return *this >= o ? o : *this; }
  std::string str() const { return inf ? "+inf" : v.str(); }
};

PhiVal pv(std::pair<bool, Rat> p) { return {p.first, p.second}; }

FF random_ff(const FieldTower& tw, std::mt19937_64& rng, bool nonzero) {
  for (;;) {
    std::vector<long long> num, den;
    int nd = static_cast<int>(rng() % 3);
    for (int i = 0; i <= nd; ++i) num.push_back(static_cast<long long>(rng() % tw.p()));
    int dd = static_cast<int>(rng() % 2);
    for (int i = 0; i <= dd; ++i) den.push_back(static_cast<long long>(rng() % tw.p()));
    den.back() = 1;  // keep the denominator nonzero
    FF x = tw.from_coeffs(num, den);
    if (tw.cdeg() == 2) {
      // add a theta component
      std::vector<long long> num2;
      for (int i = 0; i <= nd; ++i) num2.push_back(static_cast<long long>(rng() % tw.p()));
      FF th = tw.constant(0, 1);
      FF x2 = tw.from_coeffs(num2, {1});
      x = x + th * x2;
    }
    // mix in a pole or a zero at t
    long long shift = static_cast<long long>(rng() % 5) - 2;
    x = x * tw.s_pow(shift * tw.edeg());
    if (!nonzero || !x.is_zero()) return x;
  }
}

FF random_base(const FieldTower& tw, std::mt19937_64& rng, bool nonzero) {
  for (;;) {
    std::vector<long long> num;
    int nd = static_cast<int>(rng() % 3);
    for (int i = 0; i <= nd; ++i) num.push_back(static_cast<long long>(rng() % tw.p()));
    FF x = tw.zero();
    for (size_t i = 0; i < num.size(); ++i)
      x = x + tw.constant(num[i]) * tw.t_pow(static_cast<long long>(i));
    long long shift = static_cast<long long>(rng() % 5) - 2;
    x = x * tw.t_pow(shift);
    if (!nonzero || !x.is_zero()) return x;
  }
}

void check(AxiomLine& line, bool ok, const std::string& what) {
  ++line.instances;
  if (!ok) {
    ++line.failures;
    if (line.detail.empty()) line.detail = what;
  }
}

void attained_lines(AxiomReport& rep, const std::vector<PhiVal>& all_values,
                    const std::vector<Rat>& sup_values,
                    const RayValueSets& sets, const AxiomOptions& opt) {
  AxiomLine in_gamma{"attained phi values lie in Gamma_a", 0, 0, ""};
  for (const PhiVal& v : all_values) {
    if (v.inf) continue;
    check(in_gamma, sets.gamma_full.member(v.v), "value " + v.v.str());
  }
  rep.lines.push_back(in_gamma);

  AxiomLine sup_in{"sup-attaining values lie in Gamma'_a", 0, 0, ""};
  std::set<Rat> attained;
  for (const Rat& v : sup_values) {
    check(sup_in, sets.gamma_prime.member(v), "value " + v.str());
    attained.insert(v);
  }
  rep.lines.push_back(sup_in);

  AxiomLine cover{"Gamma'_a covered on the window", 0, 0, ""};
  for (const Rat& k :
       sets.gamma_prime.members_in(opt.window_lo, opt.window_hi))
    check(cover, attained.count(k) > 0, "missing level " + k.str());
  rep.lines.push_back(cover);
}

AxiomReport report_sl2(const SL2Realization& r, const AxiomOptions& opt) {
  const FieldTower& tw = r.tower;
  AxiomReport rep;
  rep.realization = realization_name(r);
  std::mt19937_64 rng(opt.seed);

  std::vector<FF> args;
  long long e = tw.edeg();
  for (long long n = -3 * e; n <= 3 * e; ++n) args.push_back(tw.s_pow(n));
  for (int i = 0; i < opt.random_samples; ++i)
    args.push_back(random_ff(tw, rng, false));

  AxiomLine filt{"filtration: phi(p q) >= min(phi p, phi q)", 0, 0, ""};
  AxiomLine invl{"inversion: phi(p^-1) = phi(p)", 0, 0, ""};
  std::vector<PhiVal> values;
  std::vector<Rat> sup_values;
  for (size_t i = 0; i < args.size(); ++i) {
    Mat2 u = r.x_plus(args[i]);
    PhiVal pu = pv(phi_sl2(r, u));
    values.push_back(pu);
    if (!pu.inf) sup_values.push_back(pu.v);
    check(invl, pv(phi_sl2(r, inverse_sl2(u))) == pu, "arg " + args[i].str(tw.variable()));
    const FF& b = args[(i * 7 + 3) % args.size()];
    PhiVal pq = pv(phi_sl2(r, mul(u, r.x_plus(b))));
    check(filt, pq >= pu.min(pv(phi_sl2(r, r.x_plus(b)))),
          "pair " + args[i].str(tw.variable()) + ", " + b.str(tw.variable()));
  }
  rep.lines.push_back(filt);
  rep.lines.push_back(invl);

  AxiomLine torus{"torus: phi(z u z^-1) - phi(u) = omega(a(z)) = 2 omega(c)",
                  0, 0, ""};
  AxiomLine melem{"m(u): m x_a(s) m^-1 = x_-a(-s r^-2), shift -2 phi(u)", 0, 0,
                  ""};
  for (int i = 0; i < 24; ++i) {
    FF c = i < 8 ? tw.s_pow(i - 4) : random_ff(tw, rng, true);
    if (c.is_zero()) continue;
    FF arg = random_ff(tw, rng, true);
    Mat2 u = r.x_plus(arg);
    Mat2 z = r.torus(c);
    Mat2 conj = mul(mul(z, u), inverse_sl2(z));
    PhiVal before = pv(phi_sl2(r, u));
    PhiVal after = pv(phi_sl2(r, conj));
    Rat shift = Rat(2) * tw.omega_finite(c);
    check(torus, !after.inf && after.v - before.v == shift,
          "c = " + c.str(tw.variable()));
    // m(u) swaps the root groups with the reflection shift.
    FF rr = random_ff(tw, rng, true);
    Mat2 m = r.m_element(rr);
    Mat2 mc = mul(mul(m, u), inverse_sl2(m));
    Mat2 expected = r.x_minus(-(arg / (rr * rr)));
    PhiVal pmc = pv(phi_sl2(r, mc));
    check(melem,
          mc == expected &&
              pmc.v == before.v - Rat(2) * tw.omega_finite(rr),
          "r = " + rr.str(tw.variable()));
  }
  rep.lines.push_back(torus);
  rep.lines.push_back(melem);

  attained_lines(rep, values, sup_values,
                 ray_value_sets(realization_case(r), tw.p()), opt);
  return rep;
}

AxiomReport report_su3(const SU3Realization& r, const AxiomOptions& opt) {
  const FieldTower& tw = r.tower;
  AxiomReport rep;
  rep.realization = realization_name(r);
  std::mt19937_64 rng(opt.seed);

  AxiomLine sig{"sigma: involution fixing exactly the base", 0, 0, ""};
  for (int i = 0; i < 32; ++i) {
    FF x = random_ff(tw, rng, false);
    check(sig, tw.sigma(tw.sigma(x)) == x, "sigma^2 at " + x.str(tw.variable()));
    check(sig, (tw.sigma(x) == x) == tw.in_base(x),
          "fixed-field test at " + x.str(tw.variable()));
  }
  rep.lines.push_back(sig);

  // Sup-attaining samples (u, lambda u sigma(u)) and generic samples with a
  // trace-zero perturbation.
  FF zeta = tw.trace_zero_gen();
  std::vector<SU3Point> pts;
  std::vector<Rat> sup_values;
  std::vector<PhiVal> values;
  long long e = tw.edeg();
  for (long long n = -3 * e; n <= 3 * e; ++n) {
    FF u = tw.s_pow(n);
    pts.push_back({u, r.lambda * u * tw.sigma(u)});
    sup_values.push_back(pv(phi_su3(r, pts.back())).v);
  }
  // Pure double-root elements (0, zeta * base).
  for (long long n = -2; n <= 2; ++n)
    pts.push_back({tw.zero(), zeta * tw.t_pow(n)});
  for (int i = 0; i < opt.random_samples; ++i) {
    FF u = random_ff(tw, rng, false);
    FF b = random_base(tw, rng, false);
    pts.push_back({u, r.lambda * u * tw.sigma(u) + zeta * b});
  }

  AxiomLine cons{"constraint v + sigma(v) = u sigma(u) on samples and products",
                 0, 0, ""};
  AxiomLine grp{"group law: identity, inverse, associativity", 0, 0, ""};
  AxiomLine filt{"filtration: phi(p q) >= min(phi p, phi q)", 0, 0, ""};
  AxiomLine invl{"inversion: phi(p^-1) = phi(p)", 0, 0, ""};
  AxiomLine jl{"j_lambda: lands in H^lambda and intertwines the laws", 0, 0, ""};
  SU3Point id = r.identity();
  for (size_t i = 0; i < pts.size(); ++i) {
    const SU3Point& p = pts[i];
    check(cons, r.in_group(p), "sample " + std::to_string(i));
    values.push_back(pv(phi_su3(r, p)));
    check(grp, r.mul(id, p) == p && r.mul(p, id) == p, "identity");
    check(grp, r.mul(p, r.inverse(p)) == id, "inverse");
    const SU3Point& q = pts[(i * 5 + 1) % pts.size()];
    const SU3Point& s = pts[(i * 11 + 2) % pts.size()];
    SU3Point pq = r.mul(p, q);
    check(cons, r.in_group(pq), "product constraint");
    check(grp, r.mul(pq, s) == r.mul(p, r.mul(q, s)), "associativity");
    check(filt, pv(phi_su3(r, pq)) >= pv(phi_su3(r, p)).min(pv(phi_su3(r, q))),
          "pair " + std::to_string(i));
    check(invl, pv(phi_su3(r, r.inverse(p))) == pv(phi_su3(r, p)),
          "sample " + std::to_string(i));
    HLambdaPoint jp = r.j_lambda(p);
    check(jl, r.in_h_lambda(jp), "image constraint");
    check(jl, r.j_lambda(pq) == r.h_mul(jp, r.j_lambda(q)), "homomorphism");
    check(jl, pv(phi_h_lambda(r, jp)) == pv(phi_su3(r, p)),
          "phi through j_lambda");
  }
  rep.lines.push_back(cons);
  rep.lines.push_back(grp);
  rep.lines.push_back(filt);
  rep.lines.push_back(invl);
  rep.lines.push_back(jl);

  AxiomLine torus{"torus: phi(z u z^-1) - phi(u) = omega(a(z)) = omega(c)", 0,
                  0, ""};
  for (int i = 0; i < 24; ++i) {
    FF c = i < 8 ? tw.s_pow(i - 4) : random_ff(tw, rng, true);
    if (c.is_zero()) continue;
    const SU3Point& p = pts[(i * 13 + 5) % pts.size()];
    SU3Point conj = r.torus_conj(c, p);
    check(torus, r.in_group(conj), "conjugate constraint");
    PhiVal before = pv(phi_su3(r, p));
    PhiVal after = pv(phi_su3(r, conj));
    Rat shift = tw.omega_finite(c);
    bool ok = before.inf ? after.inf : (!after.inf && after.v - before.v == shift);
    check(torus, ok, "c = " + c.str(tw.variable()));
  }
  rep.lines.push_back(torus);

  attained_lines(rep, values, sup_values,
                 ray_value_sets(realization_case(r), tw.p()), opt);
  return rep;
}

AxiomReport report_bc1(const BC1Realization& r, const AxiomOptions& opt) {
  const FieldTower& tw = r.tower;
  AxiomReport rep;
  rep.realization = realization_name(r);
  std::mt19937_64 rng(opt.seed);

  AxiomLine alpha_line{"alpha: omega(alpha x^2 + y) = min(omega(alpha)+2 omega(x), omega(y))",
                       0, 0, ""};
  std::vector<BC1Point> pts;
  std::vector<Rat> sup_values;
  std::vector<PhiVal> values;
  for (long long m = -6; m <= 5; ++m) {
    pts.push_back({tw.s_pow(m), tw.zero()});
    sup_values.push_back(pv(phi_bc1(r, pts.back())).v);
  }
  for (long long n = -2; n <= 2; ++n) pts.push_back({tw.zero(), tw.t_pow(n)});
  for (int i = 0; i < opt.random_samples; ++i)
    pts.push_back({random_ff(tw, rng, false), random_base(tw, rng, false)});

  AxiomLine grp{"group law: additive, inverse", 0, 0, ""};
  AxiomLine filt{"filtration: phi(p q) >= min(phi p, phi q)", 0, 0, ""};
  AxiomLine invl{"inversion: phi(p^-1) = phi(p)", 0, 0, ""};
  for (size_t i = 0; i < pts.size(); ++i) {
    const BC1Point& p = pts[i];
    values.push_back(pv(phi_bc1(r, p)));
    // omega(alpha x^2 + y) splits because omega(alpha) is not a base value.
    if (!p.x.is_zero() || !p.y.is_zero()) {
      FF ax2 = r.alpha * p.x * p.x;
      PhiVal lhs = pv(tw.omega(ax2 + p.y));
      PhiVal rhs = pv(tw.omega(ax2)).min(pv(tw.omega(p.y)));
      check(alpha_line, lhs == rhs, "sample " + std::to_string(i));
    }
    const BC1Point& q = pts[(i * 5 + 1) % pts.size()];
    BC1Point pq = r.mul(p, q);
    check(grp, r.mul(p, r.inverse(p)).x.is_zero() &&
                   r.mul(p, r.inverse(p)).y.is_zero(),
          "inverse");
    check(grp, r.mul(p, q).x == r.mul(q, p).x && r.mul(p, q).y == r.mul(q, p).y,
          "commutativity");
    check(filt, pv(phi_bc1(r, pq)) >= pv(phi_bc1(r, p)).min(pv(phi_bc1(r, q))),
          "pair " + std::to_string(i));
    check(invl, pv(phi_bc1(r, r.inverse(p))) == pv(phi_bc1(r, p)),
          "sample " + std::to_string(i));
  }
  rep.lines.push_back(alpha_line);
  rep.lines.push_back(grp);
  rep.lines.push_back(filt);
  rep.lines.push_back(invl);

  AxiomLine torus{"torus: phi(z u z^-1) - phi(u) = omega(a(z)) = omega(c)", 0,
                  0, ""};
  for (int i = 0; i < 24; ++i) {
    FF c = i < 8 ? tw.s_pow(i - 4) : random_ff(tw, rng, true);
    if (c.is_zero()) continue;
    const BC1Point& p = pts[(i * 13 + 5) % pts.size()];
    BC1Point conj = r.torus_conj(c, p);
    PhiVal before = pv(phi_bc1(r, p));
    PhiVal after = pv(phi_bc1(r, conj));
    Rat shift = tw.omega_finite(c);
    bool ok = before.inf ? after.inf : (!after.inf && after.v - before.v == shift);
    check(torus, ok, "c = " + c.str(tw.variable()));
  }
  rep.lines.push_back(torus);

  attained_lines(rep, values, sup_values,
                 ray_value_sets(realization_case(r), tw.p()), opt);
  return rep;
}

}  // namespace

AxiomReport axiom_report(const Rank1Realization& r, const AxiomOptions& opt) {
  if (const auto* sl2 = std::get_if<SL2Realization>(&r))
    return report_sl2(*sl2, opt);
  if (const auto* su3 = std::get_if<SU3Realization>(&r))
    return report_su3(*su3, opt);
  return report_bc1(std::get<BC1Realization>(r), opt);
}

}  // namespace btk
