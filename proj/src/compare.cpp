#include "btk/compare.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace btk {

namespace {

// Matches a covector against the rays of rs: returns (ray index, scale)
// with covector(ray) = scale * c, or (-1, 0).
std::pair<int, Rat> match_ray(const RootSystem& rs, const QVec& c) {
  for (int ray : rs.positive_nondivisible()) {
    QVec rc = rs.covector(ray);
    int k = -1;
    for (int i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) { k = i; break; }
    if (k < 0) break;
    if (rc[k].is_zero()) continue;
    Rat s = rc[k] / c[k];
    QVec scaled = c * s;
    if (q_eq(scaled, rc)) return {ray, s};
  }
  return {-1, Rat(0)};
}

}  // namespace

TransportResult exotic_transport(
    const ValuedRootDatum& vrd, const std::map<std::string, long long>& degrees) {
  const RootSystem& rs = vrd.rs;
  for (int a = 0; a < rs.count(); ++a)
    if (rs.divisible(a))
      throw std::invalid_argument(
          "exotic transport expects a reduced root system");

  // Per-orbit degrees; each must be the ray's [K_a : K], i.e. the case's e.
  std::vector<long long> deg_of_orbit(vrd.orbit_case.size(), 1);
  bool all_one = true;
  for (size_t oid = 0; oid < vrd.orbit_case.size(); ++oid) {
    auto it = degrees.find(vrd.orbit_name[oid]);
    if (it == degrees.end())
      throw std::invalid_argument("missing degree for orbit '" +
                                  vrd.orbit_name[oid] + "'");
    long long d = it->second;
    const RayCase& rc = vrd.orbit_case[oid];
    if (rc.kind != RayCaseKind::ResSL2)
      throw std::invalid_argument("exotic transport expects RES_SL2 rays");
    if (d < 1 || d != rc.e2)
      throw std::invalid_argument(
          "degree " + std::to_string(d) + " on orbit '" + vrd.orbit_name[oid] +
          "' does not match the case's [K_a:K] = " + std::to_string(rc.e2));
    deg_of_orbit[oid] = d;
    if (d != 1) all_one = false;
  }
  for (const auto& [name, d] : degrees) {
    bool known = false;
    for (const auto& n : vrd.orbit_name) known |= (n == name);
    if (!known) throw std::invalid_argument("no ray orbit named '" + name + "'");
  }

  TransportResult out;
  if (all_one) {
    out.vrd = vrd;
    out.point_map = QMat::Zero(rs.rank, rs.rank);
    for (int i = 0; i < rs.rank; ++i) out.point_map(i, i) = Rat(1);
    out.value_scale = Rat(1);
    out.note = "identity transport (all degrees 1)";
    out.root_image.resize(rs.count());
    for (int a = 0; a < rs.count(); ++a) out.root_image[a] = a;
    return out;
  }

  RootSystem target = RootSystem::build(dual_label(rs.label), rs.rank);
  auto deg_of_root = [&](int a) { return deg_of_orbit[vrd.orbit_of_root[a]]; };
  auto deg_of_simple = [&](int i) {
    return deg_of_orbit[vrd.orbit_of_root[rs.simple[i]]];
  };

  // The base of the transported system is (d_i alpha_i); its Cartan matrix
  // is (d_j / d_i) C(i,j).  Match it against the target's base by a
  // permutation (the dual tables may list their simples in another order).
  ZMat cbar(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      long long num = rs.pairing(rs.simple[j], rs.simple[i]) * deg_of_simple(j);
      if (num % deg_of_simple(i) != 0)
        throw std::logic_error("dual Cartan matrix is not integral");
      cbar(i, j) = static_cast<int>(num / deg_of_simple(i));
    }
  std::vector<int> perm(rs.rank);
  for (int i = 0; i < rs.rank; ++i) perm[i] = i;
  bool matched = false;
  do {
    bool ok = true;
    for (int i = 0; i < rs.rank && ok; ++i)
      for (int j = 0; j < rs.rank && ok; ++j)
        if (cbar(i, j) !=
            target.pairing(target.simple[perm[j]], target.simple[perm[i]]))
          ok = false;
    if (ok) { matched = true; break; }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!matched)
    throw std::logic_error("dual base does not match the target tables");

  // bar a = d_a * a; in the bar base m_i -> m_i d_a / d_i, then permute.
  out.root_image.assign(rs.count(), -1);
  for (int a = 0; a < rs.count(); ++a) {
    ZVec img = ZVec::Zero(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      long long num = static_cast<long long>(rs.roots[a][i]) * deg_of_root(a);
      long long den = deg_of_simple(i);
      if (num % den != 0)
        throw std::logic_error("transported root is not integral");
      img[perm[i]] = static_cast<int>(num / den);
    }
    int idx = target.index_of(img);
    if (idx < 0)
      throw std::logic_error("transported root missing from the dual system");
    out.root_image[a] = idx;
  }

  // bar-alpha_{perm(i)}(x-bar) = d_i alpha_i(x) on dual coordinates.
  out.point_map = QMat::Zero(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    out.point_map(perm[i], i) = Rat(deg_of_simple(i));

  // Level sets scale by the degree: Gamma-bar' = [K_a:K] Gamma'.
  std::map<std::string, RayCase> target_cases;
  auto target_orbits = named_ray_orbits(target);
  for (size_t oid = 0; oid < vrd.orbit_case.size(); ++oid) {
    int rep = -1;
    for (int a = 0; a < rs.count(); ++a)
      if (vrd.orbit_of_root[a] == static_cast<int>(oid)) { rep = a; break; }
    int img = out.root_image[rep];
    std::string tname;
    for (const auto& [name, members] : target_orbits)
      if (std::find(members.begin(), members.end(), img) != members.end())
        tname = name;
    if (tname.empty()) throw std::logic_error("image orbit not found");
    RayCase rc;
    rc.kind = RayCaseKind::ResSL2;
    rc.e2 = vrd.orbit_case[oid].e2 / deg_of_orbit[oid];
    target_cases[tname] = rc;
  }
  out.vrd = assemble(target, target_cases, vrd.residue_char);
  out.value_scale = Rat(1);
  out.note = "very special isogeny transport to the dual system " +
             target.label + std::to_string(target.rank) +
             "; levels scaled by [K_a:K] per ray";
  return out;
}

TransportResult bc_transport(const ValuedRootDatum& vrd) {
  const RootSystem& rs = vrd.rs;
  if (rs.label != "BC")
    throw std::invalid_argument("bc transport expects a BC root system");
  long long e2 = 0;
  for (size_t oid = 0; oid < vrd.orbit_case.size(); ++oid) {
    const RayCase& rc = vrd.orbit_case[oid];
    bool mult = false;
    for (int a = 0; a < rs.count(); ++a)
      if (vrd.orbit_of_root[a] == static_cast<int>(oid) && rs.multipliable(a))
        mult = true;
    if (mult) {
      if (rc.kind != RayCaseKind::BC1)
        throw std::invalid_argument(
            "bc transport expects the BC1 case on multipliable rays");
      e2 = rc.e2;
    }
  }
  if (e2 == 0) throw std::logic_error("no multipliable ray found");
  for (size_t oid = 0; oid < vrd.orbit_case.size(); ++oid) {
    const RayCase& rc = vrd.orbit_case[oid];
    if (rc.kind == RayCaseKind::ResSL2 && rc.e2 != 2 * e2)
      throw std::invalid_argument(
          "bc transport: middle rays must carry RES_SL2(e = 2 e2)");
    if (rc.kind == RayCaseKind::SU3Unram || rc.kind == RayCaseKind::SU3Ram)
      throw std::invalid_argument(
          "bc transport applies to the absolutely non-reduced case, not SU3");
  }

  const int n = rs.rank;
  RootSystem target = RootSystem::build(n == 1 ? "A" : "C", n);

  TransportResult out;
  out.root_image.assign(rs.count(), -1);
  if (n == 1) {
    // A1 has two roots; both BC1 rays land on the matching sign.
    int bpos = target.positive(0) ? 0 : 1;
    int bneg = target.negative(bpos);
    for (int a = 0; a < rs.count(); ++a)
      out.root_image[a] = rs.positive(a) ? bpos : bneg;
  } else {
    for (int a = 0; a < rs.count(); ++a) {
      QVec amb = rs.amb_roots[a];
      if (rs.multipliable(a)) amb = amb * Rat(2);  // e_i -> 2 e_i
      int idx = -1;
      for (int b = 0; b < target.count(); ++b)
        if (q_eq(target.amb_roots[b], amb)) { idx = b; break; }
      if (idx < 0) throw std::logic_error("no matching C_n root");
      out.root_image[a] = idx;
    }
  }

  // Identification: x-bar = 2x in the K^(1/2) normalization; on dual
  // coordinates the row of a target simple root is twice the covector of
  // its source preimage (the divisible root when there is one).
  out.point_map = QMat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    int tsimple = target.simple[i];
    int pre = -1;
    for (int a = 0; a < rs.count(); ++a) {
      if (out.root_image[a] != tsimple) continue;
      if (pre < 0 || rs.divisible(a)) pre = a;
    }
    if (pre < 0) throw std::logic_error("target simple root has no preimage");
    QVec row = rs.covector(pre) * Rat(2);
    for (int j = 0; j < n; ++j) out.point_map(i, j) = row[j];
  }

  std::map<std::string, RayCase> target_cases;
  for (const auto& [name, members] : named_ray_orbits(target)) {
    RayCase rc;
    rc.kind = RayCaseKind::ResSL2;
    rc.e2 = e2;
    target_cases[name] = rc;
    (void)members;
  }
  out.vrd = assemble(target, target_cases, vrd.residue_char);
  out.value_scale = Rat(2);
  out.note = "levels in the K^(1/2) normalization: omega(K^(1/2),x) = Z, "
             "values doubled relative to omega_K";
  return out;
}

WallsReport walls_equal(const ValuedRootDatum& a, const QMat& identification,
                        const ValuedRootDatum& b, const Rat& window) {
  WallsReport rep;
  rep.equal = true;
  QMat minv = q_inverse(identification);
  std::set<int> matched;
  for (int ray : a.rs.positive_nondivisible()) {
    RayWallReport rr;
    rr.source_ray = root_name(a.rs, ray);
    QVec c = minv.transpose() * a.rs.covector(ray);
    auto [tray, scale] = match_ray(b.rs, c);
    if (tray < 0) {
      rep.equal = false;
      rep.failure = "no ray of the target matches the image of " +
                    rr.source_ray;
      rep.rays.push_back(rr);
      continue;
    }
    matched.insert(tray);
    rr.target_ray = root_name(b.rs, tray);
    rr.scale = scale;
    ValueSet transported = a.wall_positions(ray).affine_image(scale, Rat(0));
    ValueSet expected = b.wall_positions(tray);
    rr.equal = (transported == expected);
    rr.period = rr.equal
                    ? expected.period()
                    : rat_lcm(transported.period(), expected.period());
    rr.source_positions = transported.members_in(-window, window);
    rr.target_positions = expected.members_in(-window, window);
    if (!rr.equal) {
      rep.equal = false;
      // First discrepancy: smallest |position| in the symmetric difference.
      std::vector<Rat> diff;
      for (const Rat& p : rr.source_positions)
        if (!expected.member(p)) diff.push_back(p);
      for (const Rat& p : rr.target_positions)
        if (!transported.member(p)) diff.push_back(p);
      std::sort(diff.begin(), diff.end(), [](const Rat& x, const Rat& y) {
        return abs(x) == abs(y) ? y < x : abs(x) < abs(y);
      });
      if (!diff.empty())
        rr.discrepancy = "first discrepancy at position " + diff[0].str();
      else
        rr.discrepancy = "wall sets differ outside the window";
    }
    rep.rays.push_back(rr);
  }
  if (matched.size() != b.rs.positive_nondivisible().size()) {
    rep.equal = false;
    if (rep.failure.empty())
      rep.failure = "some target rays receive no source ray";
  }
  return rep;
}

}  // namespace btk
