#ifndef BTK_DESCRIPTOR_HPP
#define BTK_DESCRIPTOR_HPP

#include <map>
#include <optional>
#include <string>

#include "btk/echelonnage.hpp"

namespace btk {

struct CompareDirective {
  std::string mode;  // "exotic" or "bc"
  std::map<std::string, long long> degrees;  // exotic only; defaults to e
};

/// Parsed form of a group descriptor file: the root system, the residue
/// characteristic, one ray case per orbit and an optional comparison
/// directive.
struct GroupDescriptor {
  std::string label;
  int rank = 0;
  long long residue_char = 0;
  std::map<std::string, RayCase> ray_cases;
  std::optional<CompareDirective> compare;
};

/// Line-oriented "key = value" format with [group], [ray.<orbit>] and
/// [compare] sections.  Unknown keys and malformed lines are rejected with
/// a line-numbered diagnostic; semantic validation happens in assemble().
GroupDescriptor parse_descriptor(const std::string& text);
GroupDescriptor load_descriptor(const std::string& path);

/// assemble() on the parsed data.
ValuedRootDatum build_valued_root_datum(const GroupDescriptor& desc);

}  // namespace btk

#endif
