#ifndef BTK_FUNCFIELD_HPP
#define BTK_FUNCFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "btk/gf.hpp"
#include "btk/rational.hpp"

namespace btk {

/// Dense polynomial over a small finite field.
class Poly {
public:
  Poly() : ctx_(nullptr) {}
  explicit Poly(const GFCtx* ctx) : ctx_(ctx) {}
  Poly(const GFCtx* ctx, std::vector<GFElem> coeffs);
  static Poly constant(const GFCtx* ctx, const GFElem& c);
  static Poly monomial(const GFCtx* ctx, const GFElem& c, int deg);

  const GFCtx* ctx() const { return ctx_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  int ord() const;  // lowest nonzero power; throws on zero
  GFElem coeff(int i) const;
  GFElem lead() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  /// Quotient and remainder; b nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(const Poly& a, const Poly& b);  // monic
  Poly monic() const;
  /// Coefficientwise Frobenius x -> x^p.
  Poly frobenius() const;
  /// Substitute s -> -s.
  Poly negate_variable() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const std::string& var) const;

private:
  void trim();
  const GFCtx* ctx_;
  std::vector<GFElem> c_;  // c_[i] * s^i
};

/// Element of the rational function field F_q(s): num/den with monic,
/// coprime denominator.
class FF {
public:
  FF() = default;
  FF(Poly num, Poly den);
  static FF zero(const GFCtx* ctx);
  static FF one(const GFCtx* ctx);
  static FF from_poly(Poly p);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  const GFCtx* ctx() const { return num_.ctx(); }

  friend FF operator+(const FF& a, const FF& b);
  friend FF operator-(const FF& a, const FF& b);
  friend FF operator*(const FF& a, const FF& b);
  friend FF operator/(const FF& a, const FF& b);
  FF operator-() const;
  FF inverse() const;

  friend bool operator==(const FF& a, const FF& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const FF& a, const FF& b) { return !(a == b); }

  /// ord_s(num) - ord_s(den); throws on zero.
  long long ord_s() const;

  std::string str(const std::string& var) const;

private:
  void normalize();
  Poly num_, den_;
};

enum class SigmaKind { Identity, Frobenius, NegateVariable };

/// A rational function field K_top = F_{p^cdeg}(s) sitting over the base
/// K = F_p(t) with t = s^edeg, together with the valuation omega
/// normalized by omega(K^x) = Z (so omega(s) = 1/edeg) and, for the
/// separable quadratic cases, the nontrivial automorphism over the base.
///
/// The four flavors: trivial (cdeg=edeg=1), unramified quadratic
/// (cdeg=2, sigma=Frobenius), ramified quadratic in odd characteristic
/// (edeg=2, sigma negates s), and roots of the uniformizer t^{1/e} without
/// automorphism, covering the purely inseparable towers K^{1/p}.
class FieldTower {
public:
  static FieldTower trivial(long long p);
  static FieldTower unramified_quadratic(long long p);
  static FieldTower ramified_quadratic(long long p);  // odd p
  static FieldTower uniformizer_root(long long p, int e);  // sigma = id

  long long p() const { return p_; }
  int edeg() const { return edeg_; }
  int cdeg() const { return ctx_->deg(); }
  SigmaKind sigma_kind() const { return sigma_; }
  const GFCtx* ctx() const { return ctx_.get(); }
  bool has_sigma() const { return sigma_ != SigmaKind::Identity; }
  std::string variable() const { return edeg_ == 1 ? "t" : "s"; }
  std::string describe() const;

  FF zero() const { return FF::zero(ctx_.get()); }
  FF one() const { return FF::one(ctx_.get()); }
  FF constant(long long a0, long long a1 = 0) const;
  /// s^k (k may be negative); s is the uniformizer of the top field.
  FF s_pow(long long k) const;
  /// t^k in the top field, t the base uniformizer.
  FF t_pow(long long k) const { return s_pow(k * edeg_); }
  FF from_coeffs(const std::vector<long long>& numc,
                 const std::vector<long long>& denc = {1}) const;

  FF sigma(const FF& x) const;
  /// omega(x), normalized to omega(base^x) = Z; +inf encoded by the bool.
  std::pair<bool, Rat> omega(const FF& x) const;  // (is_infinity, value)
  Rat omega_finite(const FF& x) const;            // throws on zero
  /// Is x in the base field F_p(t)?
  bool in_base(const FF& x) const;
  /// A generator of the trace-zero line over the base (separable cases);
  /// the constant 1 in residue characteristic 2 unramified, where the
  /// trace-zero elements are exactly the base field.
  FF trace_zero_gen() const;
  /// trace(x) = x + sigma(x)
  FF trace(const FF& x) const { return x + sigma(x); }

private:
  long long p_ = 0;
  int edeg_ = 1;
  SigmaKind sigma_ = SigmaKind::Identity;
  std::shared_ptr<GFCtx> ctx_;
};

}  // namespace btk

#endif
