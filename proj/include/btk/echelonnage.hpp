#ifndef BTK_ECHELONNAGE_HPP
#define BTK_ECHELONNAGE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "btk/rootdata.hpp"
#include "btk/valueset.hpp"

namespace btk {

enum class RayCaseKind { ResSL2, SU3Unram, SU3Ram, BC1 };

std::string to_string(RayCaseKind k);
RayCaseKind ray_case_kind_from_string(const std::string& s);

/// Arithmetic descriptor of one rank-1 direction: which of the four model
/// groups lives on the ray and the ramification data of its field tower.
///
/// e2 is the ramification index of K_{2a}/K; for ResSL2 (no double root)
/// it is read as e(K_a/K).  gamma is the shift -omega(lambda)/2, resp.
/// -omega(alpha)/2, and is consulted only by the SU3 and BC1 cases.
struct RayCase {
  RayCaseKind kind = RayCaseKind::ResSL2;
  long long e2 = 1;
  std::optional<Rat> gamma;  // default resolved per case

  Rat gamma_or_default() const;
  std::string str() const;
};

/// The three level sets of one ray: Gamma'_a, Gamma_a and (for multipliable
/// rays) Gamma_{2a}.
struct RayValueSets {
  ValueSet gamma_prime;            // Gamma'_a: wall levels of the ray
  ValueSet gamma_full;             // Gamma_a = Gamma'_a u (1/2)Gamma_{2a}
  std::optional<ValueSet> gamma_double;  // Gamma_{2a}
};

/// Evaluates the closed forms of the four cases.  residue_char guards the
/// BC case (only meaningful in characteristic 2) and the ramified SU3
/// default for gamma (only resolvable away from residue characteristic 2).
RayValueSets ray_value_sets(const RayCase& rc, long long residue_char);

/// A root system together with per-orbit ray cases and the induced level
/// sets Gamma'_a, Gamma_a for every root.
struct ValuedRootDatum {
  RootSystem rs;
  long long residue_char = 0;
  std::vector<RayCase> orbit_case;        // by orbit id
  std::vector<std::string> orbit_name;    // by orbit id
  std::vector<int> orbit_of_root;         // root index -> orbit id (divisible
                                          // roots point at their half's orbit)
  std::vector<ValueSet> gamma_prime;      // by root index
  std::vector<ValueSet> gamma_full;       // by root index

  const ValueSet& gp(int root) const { return gamma_prime[root]; }

  /// Wall positions on the line of a non-divisible ray a: values p such
  /// that { a(x) = p } is a wall (levels of a, of -a and of +-2a merged).
  ValueSet wall_positions(int ray_root) const;

  int orbit_id(const std::string& name) const;
};

/// Weyl orbits of non-divisible rays with deterministic names:  "all" when
/// there is a single orbit, else "short"/"long" by ambient length (the
/// multipliable orbit of a BC system is the short one).
std::vector<std::pair<std::string, std::vector<int>>> named_ray_orbits(
    const RootSystem& rs);

/// Builds the valued root datum from per-orbit cases.  Orbit keys must match
/// named_ray_orbits(rs).  Validation errors throw std::invalid_argument.
ValuedRootDatum assemble(const RootSystem& rs,
                         const std::map<std::string, RayCase>& cases,
                         long long residue_char);

}  // namespace btk

#endif
