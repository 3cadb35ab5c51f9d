#include "btk/descriptor.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace btk {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::invalid_argument("descriptor:" + std::to_string(line) + ": " + msg);
}

long long to_int(const std::string& v, int line) {
  try {
    size_t pos = 0;
    long long x = std::stoll(v, &pos);
    if (pos != v.size()) fail(line, "expected an integer, got '" + v + "'");
    return x;
  } catch (const std::invalid_argument&) {
    fail(line, "expected an integer, got '" + v + "'");
  } catch (const std::out_of_range&) {
    fail(line, "integer out of range: '" + v + "'");
  }
}

}  // namespace

GroupDescriptor parse_descriptor(const std::string& text) {
  GroupDescriptor d;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::string section;       // "group", "ray", "compare"
  std::string ray_name;
  bool have_group = false;
  std::set<std::string> case_missing;

  auto current_ray = [&]() -> RayCase& { return d.ray_cases[ray_name]; };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = strip(line.substr(0, hash));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(lineno, "unterminated section header");
      std::string name = strip(line.substr(1, line.size() - 2));
      if (name == "group") {
        section = "group";
        have_group = true;
      } else if (name.rfind("ray.", 0) == 0) {
        section = "ray";
        ray_name = name.substr(4);
        if (ray_name.empty()) fail(lineno, "empty ray orbit name");
        if (d.ray_cases.count(ray_name))
          fail(lineno, "duplicate section [ray." + ray_name + "]");
        d.ray_cases[ray_name] = RayCase{};
        case_missing.insert(ray_name);
      } else if (name == "compare") {
        section = "compare";
        d.compare = CompareDirective{};
      } else {
        fail(lineno, "unknown section [" + name + "]");
      }
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (key.empty()) fail(lineno, "empty key");
    if (value.empty()) fail(lineno, "empty value for '" + key + "'");

    if (section == "group") {
      if (key == "label") d.label = value;
      else if (key == "rank") d.rank = static_cast<int>(to_int(value, lineno));
      else if (key == "residue_char") d.residue_char = to_int(value, lineno);
      else fail(lineno, "unknown key '" + key + "' in [group]");
    } else if (section == "ray") {
      if (key == "case") {
        try {
          current_ray().kind = ray_case_kind_from_string(value);
        } catch (const std::invalid_argument& e) {
          fail(lineno, e.what());
        }
        case_missing.erase(ray_name);
      } else if (key == "e" || key == "e2") {
        current_ray().e2 = to_int(value, lineno);
      } else if (key == "gamma") {
        try {
          current_ray().gamma = Rat::parse(value);
        } catch (const std::invalid_argument& e) {
          fail(lineno, e.what());
        }
      } else {
        fail(lineno, "unknown key '" + key + "' in [ray." + ray_name + "]");
      }
    } else if (section == "compare") {
      if (key == "mode") {
        if (value != "exotic" && value != "bc")
          fail(lineno, "compare mode must be 'exotic' or 'bc'");
        d.compare->mode = value;
      } else if (key.rfind("degree.", 0) == 0) {
        d.compare->degrees[key.substr(7)] = to_int(value, lineno);
      } else {
        fail(lineno, "unknown key '" + key + "' in [compare]");
      }
    } else {
      fail(lineno, "key outside of any section");
    }
  }
  if (!have_group) throw std::invalid_argument("descriptor: missing [group] section");
  if (d.label.empty()) throw std::invalid_argument("descriptor: missing group label");
  if (d.rank <= 0) throw std::invalid_argument("descriptor: missing or invalid rank");
  if (d.ray_cases.empty())
    throw std::invalid_argument("descriptor: no [ray.*] sections");
  if (d.compare && d.compare->mode.empty())
    throw std::invalid_argument("descriptor: [compare] without a mode");
  if (!case_missing.empty())
    throw std::invalid_argument("descriptor: [ray." + *case_missing.begin() +
                                "] has no 'case = ...' line");
  return d;
}

GroupDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open descriptor '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_descriptor(ss.str());
}

ValuedRootDatum build_valued_root_datum(const GroupDescriptor& desc) {
  RootSystem rs = RootSystem::build(desc.label, desc.rank);
  return assemble(rs, desc.ray_cases, desc.residue_char);
}

}  // namespace btk
