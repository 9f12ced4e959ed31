#include "tic/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace tic {
namespace {

constexpr uint32_t kAddTableLimit = 1300;  // add table memory cap (~6.8 MB)

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint64_t max_q_guard() {
  static const uint64_t v = [] {
    if (const char* s = std::getenv("TIC_MAX_Q")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(s, &end, 10);
      if (end != s && parsed >= 2) return static_cast<uint64_t>(parsed);
    }
    return uint64_t{1} << 20;
  }();
  return v;
}

std::vector<uint32_t> factorize(uint32_t n) {
  std::vector<uint32_t> primes;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// Dense polynomials over GF(p), coefficient i = coefficient of x^i.
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
  }
  return r;
}

// In-place remainder of a by monic m.
void poly_mod(Poly& a, const Poly& m, uint32_t p) {
  trim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    uint32_t lead = a.back();
    size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (size_t i = 0; i < dm; ++i) {
        uint64_t sub = static_cast<uint64_t>(lead) * m[i] % p;
        uint32_t& c = a[shift + i];
        c = static_cast<uint32_t>((c + p - sub) % p);
      }
    }
    a.pop_back();
    trim(a);
  }
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
  Poly r = poly_mul(a, b, p);
  poly_mod(r, m, p);
  return r;
}

Poly poly_powmod(Poly a, uint64_t e, const Poly& m, uint32_t p) {
  Poly r{1};
  poly_mod(a, m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, a, m, p);
    a = poly_mulmod(a, a, m, p);
    e >>= 1;
  }
  return r;
}

// Exhaustive irreducibility test by trial division with every monic divisor
// of degree 1..deg/2.
bool poly_irreducible(const Poly& f, uint32_t p) {
  const size_t deg = f.size() - 1;
  for (size_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      uint64_t c = code;
      for (size_t i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      Poly r = f;
      poly_mod(r, g, p);
      if (r.empty()) return false;
    }
  }
  return true;
}

uint32_t poly_to_idx(const Poly& a, uint32_t p) {
  uint32_t idx = 0;
  for (size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

Poly idx_to_poly(uint32_t idx, uint32_t p) {
  Poly a;
  while (idx) {
    a.push_back(idx % p);
    idx /= p;
  }
  return a;
}

}  // namespace

std::shared_ptr<const FieldCtx> FieldCtx::make(uint32_t p, uint32_t h) {
  if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
  if (h < 1) throw DegreeTooLarge("extension degree must be >= 1");
  uint64_t q64 = 1;
  for (uint32_t i = 0; i < h; ++i) {
    q64 *= p;
    if (q64 > max_q_guard())
      throw DegreeTooLarge("p^h exceeds the desk-scale guard (" +
                           std::to_string(max_q_guard()) + ")");
  }
  const uint32_t q = static_cast<uint32_t>(q64);

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->h_ = h;
  ctx->q_ = q;
  ctx->xi_ = (q % 3 == 0) ? 0 : (q % 3 == 1 ? 1 : -1);

  // Modulus: smallest monic irreducible of degree h, candidates ordered by
  // their base-p integer value.
  if (h == 1) {
    ctx->modulus_ = {0, 1};  // x; unused for prime fields
  } else {
    uint64_t count = 1;
    for (uint32_t i = 0; i < h; ++i) count *= p;
    bool found = false;
    for (uint64_t code = 0; code < count && !found; ++code) {
      Poly f(h + 1, 0);
      uint64_t c = code;
      for (uint32_t i = 0; i < h; ++i) {
        f[i] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      f[h] = 1;
      if (poly_irreducible(f, p)) {
        ctx->modulus_.assign(f.begin(), f.end());
        found = true;
      }
    }
    if (!found) throw Error("no irreducible modulus found");  // unreachable
  }

  // Generator of the multiplicative group, then exp/log tables.
  const Poly mod(ctx->modulus_.begin(), ctx->modulus_.end());
  const auto radical = factorize(q - 1);
  uint32_t gen = 0;
  for (uint32_t cand = 2; cand < q; ++cand) {
    Poly cp = idx_to_poly(cand, p);
    if (h > 1) poly_mod(cp, mod, p);
    bool ok = true;
    for (uint32_t r : radical) {
      Poly t = poly_powmod(cp, (q - 1) / r, mod, p);
      if (poly_to_idx(t, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  if (gen == 0 && q == 2) gen = 1;
  if (gen == 0) throw Error("no generator found");  // unreachable

  ctx->exp_.assign(2 * (q - 1), 0);
  ctx->log_.assign(q, 0);
  {
    Poly gp = idx_to_poly(gen, p);
    Poly cur{1};
    for (uint32_t i = 0; i < q - 1; ++i) {
      uint32_t idx = poly_to_idx(cur, p);
      ctx->exp_[i] = idx;
      ctx->exp_[i + (q - 1)] = idx;
      ctx->log_[idx] = i;
      cur = poly_mulmod(cur, gp, mod, p);
    }
    if (poly_to_idx(cur, p) != 1) throw Error("generator order mismatch");
  }

  ctx->neg_tab_.assign(q, 0);
  for (uint32_t a = 0; a < q; ++a) {
    if (p == 2) {
      ctx->neg_tab_[a] = a;
    } else if (h == 1) {
      ctx->neg_tab_[a] = a == 0 ? 0 : q - a;
    } else {
      uint32_t r = 0, scale = 1, x = a;
      for (uint32_t i = 0; i < h; ++i) {
        uint32_t d = x % p;
        r += (d == 0 ? 0 : p - d) * scale;
        x /= p;
        scale *= p;
      }
      ctx->neg_tab_[a] = r;
    }
  }

  if (p > 2 && h > 1 && q <= kAddTableLimit) {
    ctx->add_tab_.assign(static_cast<size_t>(q) * q, 0);
    for (uint32_t a = 0; a < q; ++a)
      for (uint32_t b = a; b < q; ++b) {
        uint32_t s = ctx->radd_digits(a, b);
        ctx->add_tab_[static_cast<size_t>(a) * q + b] = s;
        ctx->add_tab_[static_cast<size_t>(b) * q + a] = s;
      }
  }

  if (p == 2) {
    ctx->trace2_tab_.assign(q, 0);
    for (uint32_t a = 0; a < q; ++a) {
      uint32_t acc = a, x = a;
      for (uint32_t i = 1; i < h; ++i) {
        x = ctx->rmul(x, x);
        acc ^= x;
      }
      if (acc > 1) throw Error("trace2 out of GF(2)");  // unreachable
      ctx->trace2_tab_[a] = acc;
    }
  }

  return ctx;
}

uint32_t FieldCtx::radd_digits(uint32_t a, uint32_t b) const {
  uint32_t r = 0, scale = 1;
  for (uint32_t i = 0; i < h_; ++i) {
    uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Fq FieldCtx::element(uint32_t idx) const {
  if (idx >= q_) throw Error("element index out of range");
  return {this, idx};
}

Fq FieldCtx::from_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<uint32_t>(r)};
}

std::vector<uint32_t> FieldCtx::coefficients(uint32_t idx) const {
  std::vector<uint32_t> c(h_, 0);
  for (uint32_t i = 0; i < h_; ++i) {
    c[i] = idx % p_;
    idx /= p_;
  }
  return c;
}

int FieldCtx::quadratic_character(Fq a) const {
  if (even()) throw EvenCharacteristic("quadratic character needs odd q");
  return reta(chk(a));
}

uint32_t FieldCtx::absolute_trace2(Fq a) const {
  if (!even()) throw OddCharacteristic("absolute trace-2 needs even q");
  return rtrace2(chk(a));
}

std::optional<uint32_t> FieldCtx::rsqrt(uint32_t a) const {
  if (a == 0) return 0u;
  if (p_ == 2) {
    // Frobenius inverse: a^(q/2).
    return rpow(a, q_ / 2);
  }
  uint32_t k = log_[a];
  if (k & 1u) return std::nullopt;
  uint32_t r = exp_[k / 2];
  uint32_t r2 = rneg(r);
  return std::min(r, r2);
}

std::optional<Fq> FieldCtx::sqrt(Fq a) const {
  auto r = rsqrt(chk(a));
  if (!r) return std::nullopt;
  return wrap(*r);
}

bool FieldCtx::is_cube(Fq a) const {
  uint32_t v = chk(a);
  if (v == 0) throw Error("is_cube: zero argument");
  uint32_t g = std::gcd(3u, q_ - 1);
  return rpow(v, (q_ - 1) / g) == 1;
}

std::vector<Fq> FieldCtx::cube_roots(Fq a) const {
  uint32_t v = chk(a);
  if (v == 0) return {wrap(0)};
  if (p_ == 3) return {wrap(rpow(v, q_ / 3))};
  uint32_t g = q_ - 1;
  uint32_t k = log_[v];
  if (g % 3 == 0) {
    if (k % 3 != 0) return {};
    uint32_t base = k / 3, step = g / 3;
    std::vector<Fq> roots{wrap(exp_[base]), wrap(exp_[base + step]),
                          wrap(exp_[(base + 2 * step) % g])};
    std::sort(roots.begin(), roots.end(),
              [](Fq x, Fq y) { return x.idx < y.idx; });
    return roots;
  }
  // 3 invertible mod q-1: unique root.
  uint64_t inv3 = 1;
  while ((3 * inv3) % g != 1 % g) ++inv3;
  return {wrap(exp_[(static_cast<uint64_t>(k) * inv3) % g])};
}

bool FieldCtx::is_fourth_power(Fq a) const {
  uint32_t v = chk(a);
  if (v == 0) throw Error("is_fourth_power: zero argument");
  uint32_t g = std::gcd(4u, q_ - 1);
  return rpow(v, (q_ - 1) / g) == 1;
}

// ---- QuadExt ----

QuadExt::QuadExt(std::shared_ptr<const FieldCtx> base) : f_(std::move(base)) {
  const FieldCtx& f = *f_;
  if (f.even()) {
    for (uint32_t c = 1; c < f.order(); ++c)
      if (f.rtrace2(c) == 1) {
        s_ = c;
        return;
      }
    throw Error("no trace-one constant");  // unreachable
  }
  for (uint32_t c = 2; c < f.order(); ++c)
    if (f.reta(c) == -1) {
      s_ = c;
      return;
    }
  throw Error("no non-square found");  // unreachable
}

QuadExt::Elt QuadExt::mul(Elt x, Elt y) const {
  const FieldCtx& f = *f_;
  uint32_t ac = f.rmul(x.a, y.a);
  uint32_t bd = f.rmul(x.b, y.b);
  uint32_t cross = f.radd(f.rmul(x.a, y.b), f.rmul(x.b, y.a));
  if (f.even()) {
    // ω^2 = ω + s
    return {f.radd(ac, f.rmul(bd, s_)), f.radd(cross, bd)};
  }
  // ω^2 = s
  return {f.radd(ac, f.rmul(bd, s_)), cross};
}

QuadExt::Elt QuadExt::conj(Elt x) const {
  const FieldCtx& f = *f_;
  if (f.even()) return {f.radd(x.a, x.b), x.b};  // ω^q = ω + 1
  return {x.a, f.rneg(x.b)};                     // ω^q = -ω
}

QuadExt::Elt QuadExt::inv(Elt x) const {
  const FieldCtx& f = *f_;
  if (is_zero(x)) throw DivisionByZero("QuadExt: inverse of zero");
  Elt xc = conj(x);
  Elt n = mul(x, xc);
  // Norm is rational by construction.
  if (n.b != 0) throw Error("QuadExt: norm not rational");  // unreachable
  uint32_t ninv = f.rinv(n.a);
  return {f.rmul(xc.a, ninv), f.rmul(xc.b, ninv)};
}

QuadExt::Elt QuadExt::pow(Elt x, uint64_t e) const {
  Elt r = embed(1);
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

}  // namespace tic
