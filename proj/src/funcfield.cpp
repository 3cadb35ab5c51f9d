#include "btk/funcfield.hpp"

#include <stdexcept>

namespace btk {

Poly::Poly(const GFCtx* ctx, std::vector<GFElem> coeffs)
    : ctx_(ctx), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(const GFCtx* ctx, const GFElem& c) {
  return Poly(ctx, {c});
}

Poly Poly::monomial(const GFCtx* ctx, const GFElem& c, int deg) {
  std::vector<GFElem> v(deg + 1, GFElem(ctx, 0));
  v[deg] = c;
  return Poly(ctx, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::ord() const {
  if (is_zero()) throw std::domain_error("ord of zero polynomial");
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  throw std::logic_error("unreachable");
}

GFElem Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return GFElem(ctx_, 0);
  return c_[i];
}

GFElem Poly::lead() const {
  if (is_zero()) throw std::domain_error("lead of zero polynomial");
  return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<GFElem> c(std::max(a.c_.size(), b.c_.size()), GFElem(a.ctx_, 0));
  for (size_t i = 0; i < c.size(); ++i) {
    GFElem x = i < a.c_.size() ? a.c_[i] : GFElem(a.ctx_, 0);
    GFElem y = i < b.c_.size() ? b.c_[i] : GFElem(a.ctx_, 0);
    c[i] = x + y;
  }
  return Poly(a.ctx_, std::move(c));
}

Poly Poly::operator-() const {
  std::vector<GFElem> c = c_;
  for (auto& x : c) x = -x;
  return Poly(ctx_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
  std::vector<GFElem> c(a.c_.size() + b.c_.size() - 1, GFElem(a.ctx_, 0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
  return Poly(a.ctx_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  Poly q(a.ctx_);
  GFElem inv_lead = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    GFElem f = r.lead() * inv_lead;
    Poly m = Poly::monomial(a.ctx_, f, d);
    q = q + m;
    r = r - m * b;
  }
  return {q, r};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  GFElem inv = lead().inverse();
  std::vector<GFElem> c = c_;
  for (auto& x : c) x = x * inv;
  return Poly(ctx_, std::move(c));
}

Poly Poly::frobenius() const {
  std::vector<GFElem> c = c_;
  for (auto& x : c) x = x.frobenius();
  return Poly(ctx_, std::move(c));
}

Poly Poly::negate_variable() const {
  std::vector<GFElem> c = c_;
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Poly(ctx_, std::move(c));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += "+";
    bool needs_coeff = c_[i].coeff(1) != 0 || i == 0 || !c_[i].is_one();
    std::string cs = c_[i].str();
    if (c_[i].coeff(1) != 0 && c_[i].coeff(0) != 0) cs = "(" + cs + ")";
    if (needs_coeff) out += cs;
    if (i > 0) {
      if (needs_coeff) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

FF::FF(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

FF FF::zero(const GFCtx* ctx) {
  return FF(Poly(ctx), Poly::constant(ctx, GFElem(ctx, 1)));
}

FF FF::one(const GFCtx* ctx) {
  return FF(Poly::constant(ctx, GFElem(ctx, 1)),
            Poly::constant(ctx, GFElem(ctx, 1)));
}

FF FF::from_poly(Poly p) {
  const GFCtx* ctx = p.ctx();
  return FF(std::move(p), Poly::constant(ctx, GFElem(ctx, 1)));
}

void FF::normalize() {
  if (den_.is_zero()) throw std::domain_error("function field: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.ctx(), GFElem(num_.ctx(), 1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  GFElem inv = den_.lead().inverse();
  num_ = num_ * Poly::constant(num_.ctx(), inv);
  den_ = den_.monic();
}

FF operator+(const FF& a, const FF& b) {
  return FF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FF operator-(const FF& a, const FF& b) { return a + (-b); }

FF FF::operator-() const { return FF(-num_, den_); }

FF operator*(const FF& a, const FF& b) {
  return FF(a.num_ * b.num_, a.den_ * b.den_);
}

FF operator/(const FF& a, const FF& b) {
  if (b.is_zero()) throw std::domain_error("function field: division by zero");
  return FF(a.num_ * b.den_, a.den_ * b.num_);
}

FF FF::inverse() const {
  if (is_zero()) throw std::domain_error("function field: inverse of zero");
  return FF(den_, num_);
}

long long FF::ord_s() const {
  if (is_zero()) throw std::domain_error("ord of zero");
  return num_.ord() - den_.ord();
}

std::string FF::str(const std::string& var) const {
  if (den_.degree() == 0 && !den_.is_zero()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

FieldTower FieldTower::trivial(long long p) {
  FieldTower t;
  t.p_ = p;
  t.edeg_ = 1;
  t.sigma_ = SigmaKind::Identity;
  t.ctx_ = std::make_shared<GFCtx>(p, 1);
  return t;
}

FieldTower FieldTower::unramified_quadratic(long long p) {
  FieldTower t;
  t.p_ = p;
  t.edeg_ = 1;
  t.sigma_ = SigmaKind::Frobenius;
  t.ctx_ = std::make_shared<GFCtx>(p, 2);
  return t;
}

FieldTower FieldTower::ramified_quadratic(long long p) {
  if (p == 2)
    throw std::invalid_argument(
        "ramified quadratic tower needs odd characteristic");
  FieldTower t;
  t.p_ = p;
  t.edeg_ = 2;
  t.sigma_ = SigmaKind::NegateVariable;
  t.ctx_ = std::make_shared<GFCtx>(p, 1);
  return t;
}

FieldTower FieldTower::uniformizer_root(long long p, int e) {
  if (e < 1 || e > 3)
    throw std::invalid_argument("uniformizer root degree must be 1, 2 or 3");
  FieldTower t;
  t.p_ = p;
  t.edeg_ = e;
  t.sigma_ = SigmaKind::Identity;
  t.ctx_ = std::make_shared<GFCtx>(p, 1);
  return t;
}

std::string FieldTower::describe() const {
  std::string base = "F" + std::to_string(p_) + "(t)";
  switch (sigma_) {
    case SigmaKind::Identity:
      if (edeg_ == 1) return base;
      return "F" + std::to_string(p_) + "(t^(1/" + std::to_string(edeg_) +
             ")) over " + base;
    case SigmaKind::Frobenius:
      return "F" + std::to_string(p_ * p_) + "(t) over " + base;
    case SigmaKind::NegateVariable:
      return "F" + std::to_string(p_) + "(t^(1/2)) over " + base +
             " (ramified)";
  }
  return base;
}

FF FieldTower::constant(long long a0, long long a1) const {
  return FF::from_poly(Poly::constant(ctx_.get(), GFElem(ctx_.get(), a0, a1)));
}

FF FieldTower::s_pow(long long k) const {
  GFElem one(ctx_.get(), 1);
  if (k >= 0)
    return FF::from_poly(Poly::monomial(ctx_.get(), one, static_cast<int>(k)));
  return FF(Poly::constant(ctx_.get(), one),
            Poly::monomial(ctx_.get(), one, static_cast<int>(-k)));
}

FF FieldTower::from_coeffs(const std::vector<long long>& numc,
                           const std::vector<long long>& denc) const {
  std::vector<GFElem> n, d;
  for (long long c : numc) n.push_back(GFElem(ctx_.get(), c));
  for (long long c : denc) d.push_back(GFElem(ctx_.get(), c));
  return FF(Poly(ctx_.get(), std::move(n)), Poly(ctx_.get(), std::move(d)));
}

FF FieldTower::sigma(const FF& x) const {
  switch (sigma_) {
    case SigmaKind::Identity:
      return x;
    case SigmaKind::Frobenius:
      return FF(x.num().frobenius(), x.den().frobenius());
    case SigmaKind::NegateVariable:
      return FF(x.num().negate_variable(), x.den().negate_variable());
  }
  return x;
}

std::pair<bool, Rat> FieldTower::omega(const FF& x) const {
  if (x.is_zero()) return {true, Rat(0)};
  return {false, Rat(x.ord_s(), edeg_)};
}

Rat FieldTower::omega_finite(const FF& x) const {
  auto [inf, v] = omega(x);
  if (inf) throw std::domain_error("omega of zero");
  return v;
}

bool FieldTower::in_base(const FF& x) const {
  // The base is F_p(t) = F_p(s^edeg) with prime-field coefficients.
  auto poly_in_base = [&](const Poly& p) {
    for (int i = 0; i <= p.degree(); ++i) {
      const GFElem& c = p.coeff(i);
      if (c.is_zero()) continue;
      if (i % edeg_ != 0) return false;
      if (cdeg() == 2 && c.coeff(1) != 0) return false;
    }
    return true;
  };
  // A base element in lowest terms has numerator and denominator in
  // F_p[s^edeg] (coprimality survives the substitution t = s^edeg), so the
  // normal-form test above is complete.
  return poly_in_base(x.num()) && poly_in_base(x.den());
}

FF FieldTower::trace_zero_gen() const {
  switch (sigma_) {
    case SigmaKind::Frobenius: {
      if (p_ == 2) return one();  // trace-zero elements = the base field
      // theta - sigma(theta) = 2 theta
      FF th = constant(0, 1);
      return th - sigma(th);
    }
    case SigmaKind::NegateVariable:
      return s_pow(1);  // sigma(s) = -s
    case SigmaKind::Identity:
      throw std::logic_error("trace_zero_gen needs a quadratic tower");
  }
  throw std::logic_error("unreachable");
}

}  // namespace btk
