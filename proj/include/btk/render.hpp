#ifndef BTK_RENDER_HPP
#define BTK_RENDER_HPP

#include <string>

#include "btk/affweyl.hpp"
#include "btk/compare.hpp"
#include "btk/descriptor.hpp"
#include "btk/rank1.hpp"

namespace btk {

struct CommandResult {
  std::string text;
  std::string json;
  int exit_code = 0;  // 0 ok, 1 validation error, 2 theorem-check failure

  const std::string& output(bool as_json) const { return as_json ? json : text; }
};

QVec parse_point(const std::string& text, int rank);

CommandResult run_apartment(const GroupDescriptor& desc, const Rat& window);
CommandResult run_facet(const GroupDescriptor& desc, const QVec& point);
CommandResult run_star(const GroupDescriptor& desc, const QVec& point);
CommandResult run_cosets(const GroupDescriptor& desc, const std::vector<int>& J,
                         const std::vector<int>& Jp, long long bound);
CommandResult run_verify(const GroupDescriptor& desc, unsigned long long seed);
CommandResult run_compare(const GroupDescriptor& desc, const Rat& window);

/// Parses "{0,2}" or "{}" or "0,2" into generator indices.
std::vector<int> parse_index_set(const std::string& text);

}  // namespace btk

#endif
