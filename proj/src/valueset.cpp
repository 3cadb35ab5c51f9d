#include "btk/valueset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace btk {

ArithProg::ArithProg(Rat o, Rat s) : offset(o), step(s) {
  if (!(Rat(0) < step))
    throw std::invalid_argument("ArithProg: step must be positive");
  Rat n = offset / step;
  offset = offset - Rat(n.floor()) * step;
}

bool ArithProg::contains(const Rat& x) const {
  return ((x - offset) / step).is_integer();
}

Rat ArithProg::least_geq(const Rat& x) const {
  return offset + Rat(((x - offset) / step).ceil()) * step;
}

Rat ArithProg::greatest_leq(const Rat& x) const {
  return offset + Rat(((x - offset) / step).floor()) * step;
}

ValueSet::ValueSet(std::vector<ArithProg> include, std::vector<ArithProg> exclude) {
  // An excluded progression must have its step an integer multiple of some
  // included step; the level-set differences arising here (odd quarters =
  // (1/4)Z minus (1/2)Z) are all of this commensurable shape.
  for (const ArithProg& e : exclude) {
    bool ok = false;
    for (const ArithProg& i : include)
      if ((e.step / i.step).is_integer()) { ok = true; break; }
    if (!ok)
      throw std::invalid_argument(
          "ValueSet: excluded step " + e.step.str() +
          " is not an integer multiple of any included step");
  }
  canonicalize(include, exclude);
}

void ValueSet::canonicalize(const std::vector<ArithProg>& include,
                            const std::vector<ArithProg>& exclude) {
  progs_.clear();
  if (include.empty()) return;
  Rat big = include[0].step;
  for (const ArithProg& p : include) big = rat_lcm(big, p.step);
  for (const ArithProg& p : exclude) big = rat_lcm(big, p.step);

  // Residues mod the common period.
  std::set<Rat> res;
  for (const ArithProg& p : include) {
    long long copies = (big / p.step).num();
    for (long long j = 0; j < copies; ++j) {
      ArithProg coset(p.offset + Rat(j) * p.step, big);
      res.insert(coset.offset);
    }
  }
  for (const ArithProg& p : exclude) {
    long long copies = (big / p.step).num();
    for (long long j = 0; j < copies; ++j) {
      ArithProg coset(p.offset + Rat(j) * p.step, big);
      res.erase(coset.offset);
    }
  }
  if (res.empty()) return;

  // Minimal period: smallest big/m (m integer) under which the residue set
  // is shift-invariant.
  std::vector<Rat> rv(res.begin(), res.end());
  long long count = static_cast<long long>(rv.size());
  for (long long m = count; m >= 1; --m) {
    if (count % m != 0) continue;
    Rat q = big / Rat(m);
    std::set<Rat> reduced;
    for (const Rat& r : rv) reduced.insert(ArithProg(r, q).offset);
    if (static_cast<long long>(reduced.size()) * m == count) {
      // Check shift-invariance: every residue class mod q appears exactly m
      // times among rv, which the cardinality count above already certifies.
      for (const Rat& r : reduced) progs_.push_back(ArithProg(r, q));
      std::sort(progs_.begin(), progs_.end());
      return;
    }
  }
}

ValueSet ValueSet::lattice(const Rat& step, const Rat& offset) {
  return ValueSet({ArithProg(offset, step)});
}

Rat ValueSet::period() const {
  if (empty()) throw std::domain_error("empty value set");
  return progs_[0].step;
}

bool ValueSet::member(const Rat& x) const {
  for (const ArithProg& p : progs_)
    if (p.contains(x)) return true;
  return false;
}

Rat ValueSet::least_geq(const Rat& x) const {
  if (empty()) throw std::domain_error("empty value set");
  bool have = false;
  Rat best(0);
  for (const ArithProg& p : progs_) {
    Rat c = p.least_geq(x);
    if (!have || c < best) { best = c; have = true; }
  }
  return best;
}

Rat ValueSet::least_gt(const Rat& x) const {
  if (empty()) throw std::domain_error("empty value set");
  bool have = false;
  Rat best(0);
  for (const ArithProg& p : progs_) {
    Rat c = p.least_geq(x);
    if (c == x) c = c + p.step;
    if (!have || c < best) { best = c; have = true; }
  }
  return best;
}

Rat ValueSet::greatest_leq(const Rat& x) const {
  if (empty()) throw std::domain_error("empty value set");
  bool have = false;
  Rat best(0);
  for (const ArithProg& p : progs_) {
    Rat c = p.greatest_leq(x);
    if (!have || best < c) { best = c; have = true; }
  }
  return best;
}

Rat ValueSet::greatest_lt(const Rat& x) const {
  if (empty()) throw std::domain_error("empty value set");
  bool have = false;
  Rat best(0);
  for (const ArithProg& p : progs_) {
    Rat c = p.greatest_leq(x);
    if (c == x) c = c - p.step;
    if (!have || best < c) { best = c; have = true; }
  }
  return best;
}

ValueSet ValueSet::affine_image(const Rat& c, const Rat& d) const {
  if (c.is_zero()) throw std::invalid_argument("affine_image: zero scale");
  std::vector<ArithProg> im;
  for (const ArithProg& p : progs_)
    im.push_back(ArithProg(c * p.offset + d, abs(c) * p.step));
  ValueSet out;
  out.canonicalize(im, {});
  return out;
}

ValueSet ValueSet::unite(const ValueSet& other) const {
  std::vector<ArithProg> all = progs_;
  all.insert(all.end(), other.progs_.begin(), other.progs_.end());
  ValueSet out;
  out.canonicalize(all, {});
  return out;
}

ValueSet ValueSet::intersect(const ValueSet& other) const {
  if (empty() || other.empty()) return ValueSet();
  Rat big = rat_lcm(period(), other.period());
  std::set<Rat> mine, theirs;
  for (const ArithProg& p : progs_) {
    long long copies = (big / p.step).num();
    for (long long j = 0; j < copies; ++j)
      mine.insert(ArithProg(p.offset + Rat(j) * p.step, big).offset);
  }
  for (const ArithProg& p : other.progs_) {
    long long copies = (big / p.step).num();
    for (long long j = 0; j < copies; ++j)
      theirs.insert(ArithProg(p.offset + Rat(j) * p.step, big).offset);
  }
  std::vector<ArithProg> common;
  for (const Rat& r : mine)
    if (theirs.count(r)) common.push_back(ArithProg(r, big));
  ValueSet out;
  out.canonicalize(common, {});
  return out;
}

std::vector<Rat> ValueSet::members_in(const Rat& lo, const Rat& hi) const {
  std::set<Rat> out;
  for (const ArithProg& p : progs_)
    for (Rat x = p.least_geq(lo); x <= hi; x += p.step) out.insert(x);
  return std::vector<Rat>(out.begin(), out.end());
}

long long ValueSet::count_in_open(const Rat& lo, const Rat& hi) const {
  if (!(lo < hi)) return 0;
  long long n = 0;
  for (const ArithProg& p : progs_) {
    // members in (lo, hi): least > lo up to greatest < hi
    Rat first = p.least_geq(lo);
    if (first == lo) first += p.step;
    Rat last = p.greatest_leq(hi);
    if (last == hi) last -= p.step;
    if (last < first) continue;
    n += ((last - first) / p.step).num() + 1;
  }
  return n;
}

std::string ValueSet::str() const {
  if (empty()) return "{}";
  std::string out;
  for (size_t i = 0; i < progs_.size(); ++i) {
    if (i) out += ", ";
    out += progs_[i].step.str() + "*Z";
    if (!progs_[i].offset.is_zero()) out += " + " + progs_[i].offset.str();
  }
  return out;
}

namespace {

std::vector<ArithProg> parse_prog_list(const std::string& text) {
  std::vector<ArithProg> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t z = item.find("*Z");
    if (z == std::string::npos)
      throw std::invalid_argument("ValueSet: expected 'step*Z [+ offset]' in '" + item + "'");
    Rat step = Rat::parse(item.substr(0, z));
    std::string rest = item.substr(z + 2);
    Rat offset(0);
    // strip whitespace
    std::string r2;
    for (char c : rest)
      if (!std::isspace(static_cast<unsigned char>(c))) r2 += c;
    if (!r2.empty()) {
      if (r2[0] != '+' && r2[0] != '-')
        throw std::invalid_argument("ValueSet: expected '+ offset' in '" + item + "'");
      offset = Rat::parse(r2);
    }
    out.push_back(ArithProg(offset, step));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

ValueSet ValueSet::parse(const std::string& text) {
  size_t m = text.find(" minus ");
  if (m == std::string::npos)
    return ValueSet(parse_prog_list(text));
  return ValueSet(parse_prog_list(text.substr(0, m)),
                  parse_prog_list(text.substr(m + 7)));
}

}  // namespace btk
