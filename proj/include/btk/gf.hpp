#ifndef BTK_GF_HPP
#define BTK_GF_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>

namespace btk {

/// A small finite field F_{p^k} with k in {1, 2}; quadratic extensions are
/// F_p[th]/(th^2 - m1*th - m0).  Big enough for the function-field towers
/// used here (F_2, F_3, F_5, F_4, F_9, F_25).
class GFCtx {
public:
  GFCtx(long long p, int deg);  // deg 1, or 2 with a canonical modulus
  long long p() const { return p_; }
  int deg() const { return deg_; }
  long long size() const { return deg_ == 1 ? p_ : p_ * p_; }
  long long m0() const { return m0_; }  // th^2 = m1 th + m0
  long long m1() const { return m1_; }

private:
  long long p_;
  int deg_;
  long long m0_ = 0, m1_ = 0;
};

class GFElem {
public:
  GFElem() : ctx_(nullptr), c_{0, 0} {}
  GFElem(const GFCtx* ctx, long long a0, long long a1 = 0);

  const GFCtx* ctx() const { return ctx_; }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0; }
  bool is_one() const { return c_[0] == 1 && c_[1] == 0; }
  long long coeff(int i) const { return c_[i]; }

  friend GFElem operator+(const GFElem& a, const GFElem& b);
  friend GFElem operator-(const GFElem& a, const GFElem& b);
  friend GFElem operator*(const GFElem& a, const GFElem& b);
  GFElem operator-() const;
  GFElem inverse() const;  // throws on zero
  GFElem pow(long long e) const;
  /// The p-power Frobenius (the quadratic-extension automorphism).
  GFElem frobenius() const { return pow(ctx_->p()); }

  friend bool operator==(const GFElem& a, const GFElem& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const GFElem& a, const GFElem& b) { return !(a == b); }

  std::string str() const;  // "3", "th", "2+4th"

private:
  const GFCtx* ctx_;
  std::array<long long, 2> c_;
};

}  // namespace btk

#endif
