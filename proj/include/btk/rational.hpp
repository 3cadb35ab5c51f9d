#ifndef BTK_RATIONAL_HPP
#define BTK_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace btk {

/// Exact rational number on a 64-bit numerator/denominator pair.
///
/// All arithmetic in this project is exact; every intermediate product is
/// computed in 128 bits and narrowed with a range check, so overflow raises
/// instead of wrapping.  Denominators are kept positive and fractions
/// gcd-reduced, which makes operator== a plain field comparison.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(int n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rat operator-() const { return Rat(-num_, den_, raw_tag{}); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat::from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                        i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat::from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat::from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  /// Largest integer <= *this.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  /// Smallest integer >= *this.
  long long ceil() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  /// "p/q" with the "/q" omitted for integers.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
  static Rat parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

private:
  using i128 = __int128;
  struct raw_tag {};
  Rat(long long n, long long d, raw_tag) : num_(n), den_(d) {}

  static long long narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("Rat: 64-bit overflow");
    return static_cast<long long>(v);
  }
  static Rat from128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    return Rat(narrow(n), narrow(d), raw_tag{});
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_;
  long long den_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// gcd of two positive rationals: the largest rational dividing both with
/// integer quotient.
Rat rat_gcd(const Rat& a, const Rat& b);
/// lcm of two positive rationals.
Rat rat_lcm(const Rat& a, const Rat& b);

}  // namespace btk

namespace Eigen {
template <>
struct NumTraits<btk::Rat> : GenericNumTraits<btk::Rat> {
  typedef btk::Rat Real;
  typedef btk::Rat NonInteger;
  typedef btk::Rat Nested;
  typedef btk::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 12,
    MulCost = 10
  };
  static inline Real epsilon() { return btk::Rat(0); }
  static inline Real dummy_precision() { return btk::Rat(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
