#include "btk/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace btk {

Rat Rat::parse(const std::string& text) {
  auto bad = [&] { throw std::invalid_argument("malformed rational: '" + text + "'"); };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) bad();
  size_t slash = s.find('/');
  auto to_ll = [&](const std::string& part) {
    if (part.empty()) bad();
    size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad();
    return std::strtoll(part.c_str(), nullptr, 10);
  };
  if (slash == std::string::npos) return Rat(to_ll(s));
  long long n = to_ll(s.substr(0, slash));
  long long d = to_ll(s.substr(slash + 1));
  if (d == 0) bad();
  return Rat(n, d);
}

Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a.sign() <= 0 || b.sign() <= 0)
    throw std::invalid_argument("rat_gcd: arguments must be positive");
  // gcd(p1/q1, p2/q2) = gcd(p1 q2, p2 q1) / (q1 q2)
  long long n = std::gcd(a.num() * b.den(), b.num() * a.den());
  return Rat(n, a.den() * b.den());
}

Rat rat_lcm(const Rat& a, const Rat& b) {
  return a * b / rat_gcd(a, b);
}

}  // namespace btk
