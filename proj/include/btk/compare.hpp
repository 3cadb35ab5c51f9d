#ifndef BTK_COMPARE_HPP
#define BTK_COMPARE_HPP

#include <map>
#include <string>
#include <vector>

#include "btk/echelonnage.hpp"

namespace btk {

/// A valued root datum together with the identification of apartments that
/// produced it and bookkeeping about the valuation normalization.
struct TransportResult {
  ValuedRootDatum vrd;
  QMat point_map;        // dual coords of the source -> dual coords of the target
  Rat value_scale;       // omega-normalization factor applied to level sets
  std::string note;      // normalization statement for reports
  std::vector<int> root_image;  // source root index -> target root index
};

/// Transport along the very special isogeny: target root system has the
/// dual label, each transported ray's levels are scaled by its degree
/// [K_a : K], and the wall arrangements agree under the identification.
/// degrees maps orbit names of the source datum to positive integers which
/// must match the ray case (the case's e, or 1 to leave the ray alone).
TransportResult exotic_transport(const ValuedRootDatum& vrd,
                                 const std::map<std::string, long long>& degrees);

/// BC_n over K  ->  C_n over K^(1/2) with levels in the K^(1/2)
/// normalization (omega scaled by 2).  Multipliable rays must carry the
/// BC1 case.
TransportResult bc_transport(const ValuedRootDatum& vrd);

struct RayWallReport {
  std::string source_ray;    // root name in the source system
  std::string target_ray;    // matched root name in the target system
  Rat scale;                 // position scaling along the identification
  Rat period;                // common wall period used for the window claim
  std::vector<Rat> source_positions;  // inside the window, transported
  std::vector<Rat> target_positions;
  bool equal = false;
  std::string discrepancy;   // first mismatch, empty if equal
};

struct WallsReport {
  bool equal = false;
  std::vector<RayWallReport> rays;
  std::string failure;  // set when a ray direction cannot be matched
};

/// Compares the full wall families of two arrangements under an invertible
/// identification of apartments.  Periodicity makes the exact comparison
/// finite: per matched ray the transported position set must equal the
/// target's as a canonical ValueSet, and the report lists both inside
/// [-window, window] together with the period that certifies equality.
WallsReport walls_equal(const ValuedRootDatum& a, const QMat& identification,
                        const ValuedRootDatum& b, const Rat& window);

}  // namespace btk

#endif
