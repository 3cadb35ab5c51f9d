#include "btk/echelonnage.hpp"

#include <algorithm>
#include <stdexcept>

namespace btk {

std::string to_string(RayCaseKind k) {
  switch (k) {
    case RayCaseKind::ResSL2: return "RES_SL2";
    case RayCaseKind::SU3Unram: return "SU3_UNRAM";
    case RayCaseKind::SU3Ram: return "SU3_RAM";
    case RayCaseKind::BC1: return "BC1";
  }
  return "?";
}

RayCaseKind ray_case_kind_from_string(const std::string& s) {
  if (s == "RES_SL2") return RayCaseKind::ResSL2;
  if (s == "SU3_UNRAM") return RayCaseKind::SU3Unram;
  if (s == "SU3_RAM") return RayCaseKind::SU3Ram;
  if (s == "BC1") return RayCaseKind::BC1;
  throw std::invalid_argument("unknown ray case '" + s + "'");
}

Rat RayCase::gamma_or_default() const {
  if (gamma) return *gamma;
  switch (kind) {
    case RayCaseKind::ResSL2: return Rat(0);  // unused
    case RayCaseKind::SU3Unram:
    case RayCaseKind::SU3Ram: return Rat(0);
    case RayCaseKind::BC1: return Rat(-1, 4 * e2);  // omega(alpha) = 1/(2 e2)
  }
  return Rat(0);
}

std::string RayCase::str() const {
  std::string s = to_string(kind) + "(e" +
                  (kind == RayCaseKind::ResSL2 ? "=" : "2=") +
                  std::to_string(e2);
  if (kind != RayCaseKind::ResSL2) s += ", gamma=" + gamma_or_default().str();
  return s + ")";
}

RayValueSets ray_value_sets(const RayCase& rc, long long residue_char) {
  if (rc.e2 < 1) throw std::invalid_argument("ray case: e must be >= 1");
  const long long e2 = rc.e2;
  RayValueSets out;
  switch (rc.kind) {
    case RayCaseKind::ResSL2: {
      out.gamma_prime = ValueSet::lattice(Rat(1, e2));
      out.gamma_full = out.gamma_prime;
      return out;
    }
    case RayCaseKind::SU3Unram: {
      Rat gamma = rc.gamma_or_default();
      ValueSet val_ka = ValueSet::lattice(Rat(1, e2));
      if (!val_ka.member(Rat(2) * gamma))
        throw std::invalid_argument(
            "SU3_UNRAM: gamma must lie in (1/2)*omega(K_a^x) = " +
            val_ka.affine_image(Rat(1, 2), Rat(0)).str());
      out.gamma_prime = val_ka.affine_image(Rat(1), -gamma);
      out.gamma_double = val_ka;  // omega(K_a^0 \ 0), unramified
      out.gamma_full = out.gamma_prime.unite(
          out.gamma_double->affine_image(Rat(1, 2), Rat(0)));
      return out;
    }
    case RayCaseKind::SU3Ram: {
      if (!rc.gamma && residue_char == 2)
        throw std::invalid_argument(
            "SU3_RAM in residue characteristic 2 requires an explicit gamma");
      Rat gamma = rc.gamma_or_default();
      ValueSet val_ka = ValueSet::lattice(Rat(1, 2 * e2));
      if (!val_ka.member(Rat(2) * gamma))
        throw std::invalid_argument(
            "SU3_RAM: gamma must lie in (1/2)*omega(K_a^x) = " +
            val_ka.affine_image(Rat(1, 2), Rat(0)).str());
      out.gamma_prime = val_ka.affine_image(Rat(1), -gamma);
      // Trace-zero values in a ramified quadratic extension: the odd part
      // of the K_a value group.
      out.gamma_double = ValueSet::lattice(Rat(1, e2), Rat(1, 2 * e2));
      out.gamma_full = out.gamma_prime.unite(
          out.gamma_double->affine_image(Rat(1, 2), Rat(0)));
      return out;
    }
    case RayCaseKind::BC1: {
      if (residue_char != 2)
        throw std::invalid_argument("BC case requires characteristic 2");
      Rat gamma = rc.gamma_or_default();
      // gamma = -omega(alpha)/2 with omega(alpha) in omega(K_a^x) but not
      // in omega(K_{2a}^x).
      ValueSet half_val_ka = ValueSet::lattice(Rat(1, 4 * e2));
      ValueSet half_val_k2a = ValueSet::lattice(Rat(1, 2 * e2));
      if (!half_val_ka.member(gamma) || half_val_k2a.member(gamma))
        throw std::invalid_argument(
            "BC1: gamma must lie in (1/2)*omega(K_a^x) but outside "
            "(1/2)*omega(K_2a^x); got " + gamma.str());
      out.gamma_double = ValueSet::lattice(Rat(1, e2));
      out.gamma_prime = ValueSet({ArithProg(Rat(0), Rat(1, 4 * e2))},
                                 {ArithProg(Rat(0), Rat(1, 2 * e2))});
      out.gamma_full = out.gamma_prime.unite(
          out.gamma_double->affine_image(Rat(1, 2), Rat(0)));
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<std::pair<std::string, std::vector<int>>> named_ray_orbits(
    const RootSystem& rs) {
  auto orbits = rs.weyl_orbits();
  std::vector<std::pair<Rat, std::vector<int>>> nd;  // (len2, orbit)
  for (const auto& o : orbits) {
    if (rs.divisible(o[0])) continue;
    nd.push_back({rs.len2[o[0]], o});
  }
  std::sort(nd.begin(), nd.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::string, std::vector<int>>> out;
  if (nd.size() == 1) {
    out.push_back({"all", nd[0].second});
  } else if (nd.size() == 2) {
    out.push_back({"short", nd[0].second});
    out.push_back({"long", nd[1].second});
  } else {
    for (size_t i = 0; i < nd.size(); ++i)
      out.push_back({"orbit" + std::to_string(i), nd[i].second});
  }
  return out;
}

ValuedRootDatum assemble(const RootSystem& rs,
                         const std::map<std::string, RayCase>& cases,
                         long long residue_char) {
  ValuedRootDatum vrd;
  vrd.rs = rs;
  vrd.residue_char = residue_char;
  auto orbits = named_ray_orbits(rs);
  for (const auto& [name, members] : orbits) {
    auto it = cases.find(name);
    if (it == cases.end())
      throw std::invalid_argument("missing ray case for orbit '" + name + "'");
    vrd.orbit_name.push_back(name);
    vrd.orbit_case.push_back(it->second);
  }
  for (const auto& [name, rc] : cases) {
    bool known = false;
    for (const auto& [oname, members] : orbits)
      if (oname == name) known = true;
    if (!known)
      throw std::invalid_argument("no ray orbit named '" + name + "'");
  }

  vrd.orbit_of_root.assign(rs.count(), -1);
  vrd.gamma_prime.resize(rs.count());
  vrd.gamma_full.resize(rs.count());
  for (size_t oid = 0; oid < orbits.size(); ++oid) {
    const RayCase& rc = vrd.orbit_case[oid];
    bool mult = rs.multipliable(orbits[oid].second[0]);
    if (mult && rc.kind == RayCaseKind::ResSL2)
      throw std::invalid_argument(
          "orbit '" + orbits[oid].first +
          "' is multipliable: RES_SL2 applies only to non-multipliable rays");
    if (!mult && rc.kind != RayCaseKind::ResSL2)
      throw std::invalid_argument(
          "orbit '" + orbits[oid].first + "' is not multipliable: case " +
          to_string(rc.kind) + " needs a double root");
    RayValueSets sets = ray_value_sets(rc, residue_char);
    for (int a : orbits[oid].second) {
      vrd.orbit_of_root[a] = static_cast<int>(oid);
      vrd.gamma_prime[a] = sets.gamma_prime;
      vrd.gamma_full[a] = sets.gamma_full;
      if (auto da = rs.twice(a)) {
        vrd.orbit_of_root[*da] = static_cast<int>(oid);
        vrd.gamma_prime[*da] = *sets.gamma_double;
        vrd.gamma_full[*da] = *sets.gamma_double;
      }
    }
  }
  return vrd;
}

ValueSet ValuedRootDatum::wall_positions(int ray_root) const {
  if (rs.divisible(ray_root))
    throw std::invalid_argument("wall_positions expects a non-divisible ray");
  ValueSet pos = gamma_prime[ray_root];
  if (auto da = rs.twice(ray_root))
    pos = pos.unite(gamma_prime[*da].affine_image(Rat(1, 2), Rat(0)));
  return pos;
}

int ValuedRootDatum::orbit_id(const std::string& name) const {
  for (size_t i = 0; i < orbit_name.size(); ++i)
    if (orbit_name[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("no ray orbit named '" + name + "'");
}

}  // namespace btk
