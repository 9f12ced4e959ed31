#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tic/errors.hpp"

namespace tic {

class FieldCtx;

// Element of GF(p^h).  The index encodes the polynomial representation in
// base p (constant coefficient least significant); index 0 is the additive
// identity and index 1 the multiplicative identity.  Elements of different
// contexts never compare equal and cannot be mixed in arithmetic.
struct Fq {
  const FieldCtx* ctx = nullptr;
  uint32_t idx = 0;

  friend bool operator==(const Fq&, const Fq&) = default;
};

// F_q ∪ {∞} as a closed sum type.
class FqPlus {
 public:
  static FqPlus infinity() { return FqPlus(); }
  static FqPlus finite(Fq v) {
    FqPlus r;
    r.finite_ = v;
    return r;
  }

  bool is_infinity() const { return !finite_.has_value(); }
  Fq value() const {
    if (!finite_) throw Error("FqPlus: no finite value at infinity");
    return *finite_;
  }

  friend bool operator==(const FqPlus&, const FqPlus&) = default;

 private:
  std::optional<Fq> finite_;
};

// Arithmetic context for GF(p^h), p prime, h >= 1, p^h bounded by the
// desk-scale guard (2^20 by default; override with env TIC_MAX_Q).
//
// The context is immutable after construction and safe to share across
// threads.  Checked, ctx-verifying operations work on Fq values; the r*
// methods are the raw index kernels used by the geometry engine.
class FieldCtx {
 public:
  // Builds GF(p^h) with the lexicographically smallest monic irreducible
  // modulus (coefficient tuple compared most-significant first, i.e. by its
  // base-p integer value).  Deterministic across runs.
  static std::shared_ptr<const FieldCtx> make(uint32_t p, uint32_t h);

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return h_; }
  uint32_t order() const { return q_; }
  bool even() const { return p_ == 2; }
  // q mod 3 mapped to {-1, 0, +1}.
  int xi() const { return xi_; }
  // Monic irreducible modulus, h+1 coefficients, constant term first.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Fq zero() const { return {this, 0}; }
  Fq one() const { return {this, 1}; }
  Fq element(uint32_t idx) const;
  // n mod p embedded as a constant polynomial; accepts negative n.
  Fq from_int(int64_t n) const;
  // Base-p digits of idx (h entries, constant coefficient first).
  std::vector<uint32_t> coefficients(uint32_t idx) const;

  Fq add(Fq a, Fq b) const { return wrap(radd(chk(a), chk(b))); }
  Fq sub(Fq a, Fq b) const { return wrap(rsub(chk(a), chk(b))); }
  Fq mul(Fq a, Fq b) const { return wrap(rmul(chk(a), chk(b))); }
  Fq div(Fq a, Fq b) const { return wrap(rdiv(chk(a), chk(b))); }
  Fq neg(Fq a) const { return wrap(rneg(chk(a))); }
  Fq inv(Fq a) const { return wrap(rinv(chk(a))); }
  Fq pow(Fq a, uint64_t e) const { return wrap(rpow(chk(a), e)); }

  // Quadratic character η: +1 for nonzero squares, -1 for non-squares,
  // 0 at zero.  Odd q only.
  int quadratic_character(Fq a) const;
  // Absolute trace onto GF(2).  Even q only.
  uint32_t absolute_trace2(Fq a) const;
  // Square root: total for even q (Frobenius inverse); for odd q present
  // iff η(a) >= 0, canonically the root with the smaller index.
  std::optional<Fq> sqrt(Fq a) const;
  // x^3 = a solvability / solutions.  is_cube requires a != 0.
  bool is_cube(Fq a) const;
  std::vector<Fq> cube_roots(Fq a) const;
  // Fourth-power test (exponent test, a != 0).
  bool is_fourth_power(Fq a) const;

  // ---- raw index kernels ----
  uint32_t radd(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (h_ == 1) {
      uint32_t s = a + b;
      return s >= q_ ? s - q_ : s;
    }
    if (!add_tab_.empty()) return add_tab_[static_cast<size_t>(a) * q_ + b];
    return radd_digits(a, b);
  }
  uint32_t rneg(uint32_t a) const { return neg_tab_[a]; }
  uint32_t rsub(uint32_t a, uint32_t b) const { return radd(a, rneg(b)); }
  uint32_t rmul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t rinv(uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    return exp_[q_ - 1 - log_[a]];
  }
  uint32_t rdiv(uint32_t a, uint32_t b) const {
    if (b == 0) throw DivisionByZero("division by zero");
    if (a == 0) return 0;
    uint32_t d = log_[a] + (q_ - 1) - log_[b];
    return exp_[d];
  }
  uint32_t rpow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    uint64_t k = (static_cast<uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[k];
  }
  int reta(uint32_t a) const {
    if (a == 0) return 0;
    return (log_[a] & 1u) == 0 ? 1 : -1;
  }
  uint32_t rtrace2(uint32_t a) const { return trace2_tab_[a]; }
  std::optional<uint32_t> rsqrt(uint32_t a) const;

 private:
  FieldCtx() = default;
  uint32_t chk(Fq a) const {
    if (a.ctx != this) throw CtxMismatch("Fq value from a different field");
    return a.idx;
  }
  Fq wrap(uint32_t idx) const { return {this, idx}; }
  uint32_t radd_digits(uint32_t a, uint32_t b) const;

  uint32_t p_ = 0, h_ = 0, q_ = 0;
  int xi_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> exp_;   // g^i for i in [0, 2(q-1))
  std::vector<uint32_t> log_;   // log_[0] unused
  std::vector<uint32_t> neg_tab_;
  std::vector<uint32_t> add_tab_;     // q <= kAddTableLimit and h > 1, p > 2
  std::vector<uint32_t> trace2_tab_;  // p == 2 only
};

inline Fq operator+(Fq a, Fq b) { return a.ctx->add(a, b); }
inline Fq operator-(Fq a, Fq b) { return a.ctx->sub(a, b); }
inline Fq operator*(Fq a, Fq b) { return a.ctx->mul(a, b); }
inline Fq operator/(Fq a, Fq b) { return a.ctx->div(a, b); }
inline Fq operator-(Fq a) { return a.ctx->neg(a); }

// Quadratic extension GF(q^2) over a base context, with elements a + b·ω.
// For odd q the generator satisfies ω^2 = s with s a non-square; for even q
// (where every element is a square) it satisfies ω^2 = ω + s with Tr2(s) = 1.
// The conjugate is the Frobenius x -> x^q, an involution fixing exactly the
// embedded GF(q).
class QuadExt {
 public:
  struct Elt {
    uint32_t a = 0, b = 0;
    friend bool operator==(const Elt&, const Elt&) = default;
  };

  explicit QuadExt(std::shared_ptr<const FieldCtx> base);

  const FieldCtx& base() const { return *f_; }
  uint32_t defining_constant() const { return s_; }

  Elt make(uint32_t a, uint32_t b) const { return {a, b}; }
  Elt embed(uint32_t a) const { return {a, 0}; }
  bool is_zero(Elt x) const { return x.a == 0 && x.b == 0; }
  bool is_rational(Elt x) const { return x.b == 0; }
  uint32_t rational_part(Elt x) const {
    if (!is_rational(x)) throw Error("QuadExt: element is not rational");
    return x.a;
  }

  Elt add(Elt x, Elt y) const { return {f_->radd(x.a, y.a), f_->radd(x.b, y.b)}; }
  Elt sub(Elt x, Elt y) const { return {f_->rsub(x.a, y.a), f_->rsub(x.b, y.b)}; }
  Elt neg(Elt x) const { return {f_->rneg(x.a), f_->rneg(x.b)}; }
  Elt mul(Elt x, Elt y) const;
  Elt conj(Elt x) const;
  Elt inv(Elt x) const;
  Elt div(Elt x, Elt y) const { return mul(x, inv(y)); }
  Elt pow(Elt x, uint64_t e) const;
  Elt frobenius(Elt x) const { return conj(x); }

 private:
  std::shared_ptr<const FieldCtx> f_;
  uint32_t s_ = 0;
};

}  // namespace tic
