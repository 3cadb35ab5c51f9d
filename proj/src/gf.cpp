#include "btk/gf.hpp"

#include <stdexcept>

namespace btk {

namespace {

long long mod(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

bool is_square_mod(long long a, long long p) {
  for (long long x = 0; x < p; ++x)
    if (x * x % p == a % p) return true;
  return false;
}

}  // namespace

GFCtx::GFCtx(long long p, int deg) : p_(p), deg_(deg) {
  if (p < 2) throw std::invalid_argument("GF: p must be a prime >= 2");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("GF: p must be prime");
  if (deg == 1) return;
  if (deg != 2) throw std::invalid_argument("GF: only degrees 1 and 2");
  if (p == 2) {
    m1_ = 1;  // th^2 = th + 1
    m0_ = 1;
  } else {
    // th^2 = d for the least non-square d.
    for (long long d = 2; d < p; ++d)
      if (!is_square_mod(d, p)) { m0_ = d; break; }
    if (m0_ == 0) throw std::logic_error("no non-square found");
  }
}

GFElem::GFElem(const GFCtx* ctx, long long a0, long long a1) : ctx_(ctx) {
  c_[0] = mod(a0, ctx->p());
  c_[1] = mod(a1, ctx->p());
  if (ctx->deg() == 1 && c_[1] != 0)
    throw std::invalid_argument("GF: theta component in a prime field");
}

GFElem operator+(const GFElem& a, const GFElem& b) {
  return GFElem(a.ctx_, a.c_[0] + b.c_[0], a.c_[1] + b.c_[1]);
}

GFElem operator-(const GFElem& a, const GFElem& b) {
  return GFElem(a.ctx_, a.c_[0] - b.c_[0], a.c_[1] - b.c_[1]);
}

GFElem GFElem::operator-() const { return GFElem(ctx_, -c_[0], -c_[1]); }

GFElem operator*(const GFElem& a, const GFElem& b) {
  const GFCtx* f = a.ctx_;
  long long p = f->p();
  // (a0 + a1 th)(b0 + b1 th) = a0 b0 + (a0 b1 + a1 b0) th + a1 b1 th^2
  long long c0 = a.c_[0] * b.c_[0] % p;
  long long c1 = (a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0]) % p;
  long long hi = a.c_[1] * b.c_[1] % p;
  c0 += hi * f->m0();
  c1 += hi * f->m1();
  return GFElem(f, c0, c1);
}

GFElem GFElem::pow(long long e) const {
  if (is_zero()) {
    if (e <= 0) throw std::domain_error("GF: 0^e with e <= 0");
    return *this;
  }
  long long order = ctx_->size() - 1;
  e %= order;
  if (e < 0) e += order;
  GFElem acc(ctx_, 1), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

GFElem GFElem::inverse() const {
  if (is_zero()) throw std::domain_error("GF: inverse of zero");
  return pow(ctx_->size() - 2);
}

std::string GFElem::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (c_[0] != 0) out = std::to_string(c_[0]);
  if (c_[1] != 0) {
    if (!out.empty()) out += "+";
    if (c_[1] != 1) out += std::to_string(c_[1]);
    out += "th";
  }
  return out;
}

}  // namespace btk
