// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "g2/field.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "g2/error.hpp"

namespace g2 {
namespace {

using Limbs = std::array<std::uint64_t, kMaxLimbs>;

// ---- dense polynomials over F_p used for modulus selection and inversion ----

using PPoly = std::vector<std::uint64_t>;

void trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// a mod b, b nonzero.
PPoly pmod(PPoly a, const PPoly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return pmod(std::move(r), m, p);
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PPoly ppow_mod(PPoly base, std::uint64_t e, const PPoly& m, std::uint64_t p) {
  PPoly r{1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, m, p);
    e >>= 1;
    if (e) base = pmulmod(base, base, m, p);
  }
  return r;
}

// ---- characteristic two word helpers ----

inline void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
  lo = hi = 0;
  while (a) {
    const int k = std::countr_zero(a);
    lo ^= b << k;
    if (k) hi ^= b >> (64 - k);
    a &= a - 1;
  }
}

inline std::uint64_t spread32(std::uint64_t x) {
  x &= 0xffffffffULL;
  x = (x | (x << 16)) & 0x0000ffff0000ffffULL;
  x = (x | (x << 8)) & 0x00ff00ff00ff00ffULL;
  x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  x = (x | (x << 2)) & 0x3333333333333333ULL;
  x = (x | (x << 1)) & 0x5555555555555555ULL;
  return x;
}

inline bool get_bit(const std::uint64_t* w, std::size_t i) { return (w[i / 64] >> (i % 64)) & 1; }

inline int top_bit(const std::uint64_t* w, std::size_t nw) {
  for (std::size_t i = nw; i-- > 0;)
    if (w[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(w[i]));
  return -1;
}

// dst ^= src << s over nw_dst words.
inline void xor_shifted(std::uint64_t* dst, std::size_t nw_dst, const std::uint64_t* src,
                        std::size_t nw_src, std::size_t s) {
  const std::size_t ws = s / 64, bs = s % 64;
  for (std::size_t i = 0; i < nw_src; ++i) {
    if (!src[i]) continue;
    if (i + ws < nw_dst) dst[i + ws] ^= src[i] << bs;
    if (bs && i + ws + 1 < nw_dst) dst[i + ws + 1] ^= src[i] >> (64 - bs);
  }
}

}  // namespace

bool is_small_prime(std::uint64_t p) { return is_prime(BigInt(p)); }

bool is_irreducible_mod_p(std::uint64_t p, const std::vector<std::uint64_t>& poly) {
  PPoly g = poly;
  trim(g);
  if (g.size() < 2) return false;
  const std::size_t n = g.size() - 1;
  if (n == 1) return true;
  if (g[0] == 0) return false;
  // Ben-Or: no factor of degree i <= n/2 divides g.
  const PPoly x{0, 1};
  PPoly h = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = ppow_mod(h, p, g, p);
    PPoly t = h;
    t.resize(std::max<std::size_t>(t.size(), 2), 0);
    t[1] = (t[1] + p - 1) % p;
    trim(t);
    if (t.empty()) return false;
    if (pgcd(g, t, p).size() > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Field --

Field::Field(std::uint64_t p, std::vector<std::uint64_t> modulus) : p_(p), mod_(std::move(modulus)) {
  if (!is_small_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) throw DomainError("field characteristic too large");
  trim(mod_);
  if (mod_.size() < 2) throw DomainError("field modulus must have degree >= 1");
  n_ = static_cast<unsigned>(mod_.size() - 1);
  if (mod_.back() != 1) throw DomainError("field modulus must be monic");
  for (auto c : mod_)
    if (c >= p) throw DomainError("field modulus coefficient out of range");
  if (binary() ? n_ > 64 * kMaxLimbs - 64 : n_ > kMaxLimbs)
    throw DomainError("field degree exceeds storage capacity");
  if (!is_irreducible_mod_p(p, mod_)) throw DomainError("field modulus is not irreducible");
  order_ = ipow(BigInt(p), n_);
  init_tables();
}

FieldPtr Field::build(std::uint64_t p, unsigned n) {
  if (n == 0) throw DomainError("field degree must be positive");
  if (!is_small_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (n == 1) return std::make_shared<Field>(p, std::vector<std::uint64_t>{0, 1});
  // Odometer over (c0, ..., c_{n-1}) with c_{n-1} varying fastest.
  std::vector<std::uint64_t> c(n + 1, 0);
  c[n] = 1;
  c[0] = 1;  // c0 = 0 is divisible by x
  for (;;) {
    if (is_irreducible_mod_p(p, c)) return std::make_shared<Field>(p, c);
    std::size_t i = n;
    while (i-- > 0) {
      if (++c[i] < p) break;
      c[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  throw DomainError("no irreducible polynomial found");
}

FieldPtr Field::with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  return std::make_shared<Field>(p, std::move(modulus));
}

bool Field::same_spec(const Field& o) const { return this == &o || (p_ == o.p_ && mod_ == o.mod_); }

Fq Field::make() const {
  Fq r;
  r.f_ = this;
  return r;
}

void Field::check(const Fq& a) const {
  if (a.f_ != this && (a.f_ == nullptr || !same_spec(*a.f_))) throw MismatchError("field element from a different field");
}

Fq Field::zero() const { return make(); }

Fq Field::one() const {
  Fq r = make();
  r.w_[0] = 1;
  return r;
}

Fq Field::from_int(std::int64_t v) const {
  Fq r = make();
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += static_cast<std::int64_t>(p_);
  r.w_[0] = static_cast<std::uint64_t>(m);
  return r;
}

Fq Field::from_coeffs(std::span<const std::uint64_t> c) const {
  if (c.size() > n_) throw DomainError("too many coefficients for field degree");
  Fq r = make();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::uint64_t v = c[i] % p_;
    if (binary()) {
      if (v) r.w_[i / 64] |= 1ULL << (i % 64);
    } else {
      r.w_[i] = v;
    }
  }
  return r;
}

Fq Field::gen() const {
  if (n_ == 1) return zero();  // x mod x
  const std::uint64_t c[2] = {0, 1};
  return from_coeffs(c);
}

Fq Field::element_at(const BigInt& index) const {
  if (index < 0 || index >= order_) throw DomainError("element index out of range");
  std::vector<std::uint64_t> c(n_, 0);
  BigInt t = index;
  for (std::size_t i = n_; i-- > 0;) {
    c[i] = static_cast<std::uint64_t>(t % p_);
    t /= p_;
  }
  return from_coeffs(c);
}

Fq Field::random(std::mt19937_64& rng) const {
  Fq r = make();
  if (binary()) {
    for (std::size_t i = 0; i < words(); ++i) r.w_[i] = rng();
    if (n_ % 64) r.w_[words() - 1] &= (1ULL << (n_ % 64)) - 1;
  } else {
    std::uniform_int_distribution<std::uint64_t> d(0, p_ - 1);
    for (std::size_t i = 0; i < n_; ++i) r.w_[i] = d(rng);
  }
  return r;
}

void Field::add(const Fq& a, const Fq& b, Fq& out) const {
  out.f_ = this;
  if (binary()) {
    for (std::size_t i = 0; i < words(); ++i) out.w_[i] = a.w_[i] ^ b.w_[i];
  } else {
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint64_t s = a.w_[i] + b.w_[i];
      out.w_[i] = s >= p_ ? s - p_ : s;
    }
  }
}

void Field::sub(const Fq& a, const Fq& b, Fq& out) const {
  out.f_ = this;
  if (binary()) {
    for (std::size_t i = 0; i < words(); ++i) out.w_[i] = a.w_[i] ^ b.w_[i];
  } else {
    for (std::size_t i = 0; i < n_; ++i) out.w_[i] = a.w_[i] >= b.w_[i] ? a.w_[i] - b.w_[i] : a.w_[i] + p_ - b.w_[i];
  }
}

void Field::neg(const Fq& a, Fq& out) const {
  out.f_ = this;
  if (binary()) {
    out.w_ = a.w_;
  } else {
    for (std::size_t i = 0; i < n_; ++i) out.w_[i] = a.w_[i] ? p_ - a.w_[i] : 0;
  }
}

void Field::mul(const Fq& a, const Fq& b, Fq& out) const {
  if (binary()) {
    const std::size_t nw = words();
    std::uint64_t prod[2 * kMaxLimbs + 1] = {};
    for (std::size_t i = 0; i < nw; ++i) {
      if (!a.w_[i]) continue;
      for (std::size_t j = 0; j < nw; ++j) {
        std::uint64_t lo, hi;
        clmul64(a.w_[i], b.w_[j], lo, hi);
        prod[i + j] ^= lo;
        prod[i + j + 1] ^= hi;
      }
    }
    // Reduce bits 2n-2 .. n using the modulus without its leading term.
    const std::uint64_t* low = mod_low_.data();
    for (std::size_t i = 2 * n_ - 1; i-- > n_;) {
      if (!get_bit(prod, i)) continue;
      prod[i / 64] ^= 1ULL << (i % 64);
      xor_shifted(prod, 2 * nw + 1, low, nw, i - n_);
    }
    out.f_ = this;
    out.w_.fill(0);
    for (std::size_t i = 0; i < nw; ++i) out.w_[i] = prod[i];
    return;
  }
  std::uint64_t acc[2 * kMaxLimbs] = {};
  for (std::size_t i = 0; i < n_; ++i) {
    if (!a.w_[i]) continue;
    for (std::size_t j = 0; j < n_; ++j) acc[i + j] += a.w_[i] * b.w_[j];
  }
  for (std::size_t k = 2 * n_ - 1; k-- > n_;) {
    const std::uint64_t c = acc[k] % p_;
    if (!c) continue;
    for (std::size_t i = 0; i < n_; ++i)
      if (mod_[i]) acc[k - n_ + i] += c * (p_ - mod_[i]);
  }
  out.f_ = this;
  out.w_.fill(0);
  for (std::size_t i = 0; i < n_; ++i) out.w_[i] = acc[i] % p_;
}

void Field::sqr(const Fq& a, Fq& out) const {
  if (!binary()) {
    mul(a, a, out);
    return;
  }
  const std::size_t nw = words();
  std::uint64_t prod[2 * kMaxLimbs + 1] = {};
  for (std::size_t i = 0; i < nw; ++i) {
    prod[2 * i] = spread32(a.w_[i]);
    prod[2 * i + 1] = spread32(a.w_[i] >> 32);
  }
  const std::uint64_t* low = mod_low_.data();
  for (std::size_t i = 2 * n_ - 1; i-- > n_;) {
    if (!get_bit(prod, i)) continue;
    prod[i / 64] ^= 1ULL << (i % 64);
    xor_shifted(prod, 2 * nw + 1, low, nw, i - n_);
  }
  out.f_ = this;
  out.w_.fill(0);
  for (std::size_t i = 0; i < nw; ++i) out.w_[i] = prod[i];
}

void Field::inv(const Fq& a, Fq& out) const {
  if (a.is_zero()) throw DomainError("division by zero in finite field");
  if (binary()) {
    // Binary extended Euclid on bit vectors of length n+1.
    constexpr std::size_t W = kMaxLimbs + 1;
    std::uint64_t u[W] = {}, v[W] = {}, g1[W] = {}, g2[W] = {};
    const std::size_t nw = n_ / 64 + 1;
    for (std::size_t i = 0; i < words(); ++i) u[i] = a.w_[i];
    for (std::size_t i = 0; i <= n_; ++i)
      if (mod_[i]) v[i / 64] |= 1ULL << (i % 64);
    g1[0] = 1;
    int du = top_bit(u, nw), dv = top_bit(v, nw);
    while (du > 0) {
      int j = du - dv;
      if (j < 0) {
        std::swap(u, v);
        std::swap(g1, g2);
        std::swap(du, dv);
        j = -j;
      }
      xor_shifted(u, nw, v, nw, static_cast<std::size_t>(j));
      xor_shifted(g1, nw, g2, nw, static_cast<std::size_t>(j));
      du = top_bit(u, nw);
    }
    out.f_ = this;
    out.w_.fill(0);
    for (std::size_t i = 0; i < words(); ++i) out.w_[i] = g1[i];
    if (n_ % 64) out.w_[words() - 1] &= (1ULL << (n_ % 64)) - 1;
    return;
  }
  PPoly r0 = mod_, r1(a.w_.begin(), a.w_.begin() + n_);
  trim(r1);
  PPoly s0{}, s1{1};
  while (!r1.empty()) {
    // q, r = divmod(r0, r1)
    PPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    PPoly r = r0;
    const std::uint64_t li = inv_mod(r1.back(), p_);
    while (r.size() >= r1.size()) {
      const std::uint64_t c = r.back() * li % p_;
      const std::size_t sh = r.size() - r1.size();
      q[sh] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) r[sh + i] = (r[sh + i] + (p_ - c) * r1[i]) % p_;
      trim(r);
    }
    // s = s0 - q*s1
    PPoly qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = (qs[i + j] + q[i] * s1[j]) % p_;
    PPoly s(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::uint64_t x = i < s0.size() ? s0[i] : 0, y = i < qs.size() ? qs[i] : 0;
      s[i] = (x + p_ - y) % p_;
    }
    trim(s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const std::uint64_t c = inv_mod(r0[0], p_);
  out.f_ = this;
  out.w_.fill(0);
  for (std::size_t i = 0; i < s0.size() && i < n_; ++i) out.w_[i] = s0[i] * c % p_;
}

Fq Field::frobenius(const Fq& a, unsigned j) const {
  check(a);
  j %= n_;
  Fq r = a;
  for (unsigned i = 0; i < j; ++i) r = binary() ? r.square() : r.pow(p_);
  return r;
}

void Field::init_tables() {
  if (binary()) {
    for (std::size_t i = 0; i < n_; ++i)
      if (mod_[i]) mod_low_[i / 64] |= 1ULL << (i % 64);
    // XOR basis of the F_2-linear map y -> y^2 + y.
    const std::size_t nw = words();
    for (unsigned i = 0; i < n_; ++i) {
      Fq e = make();
      e.w_[i / 64] = 1ULL << (i % 64);
      AsRow row;
      const Fq img = e.square() + e;
      row.image = img.w_;
      row.preimage = e.w_;
      for (const auto& other : as_rows_) {
        if (get_bit(row.image.data(), other.pivot)) {
          for (std::size_t k = 0; k < nw; ++k) {
            row.image[k] ^= other.image[k];
            row.preimage[k] ^= other.preimage[k];
          }
        }
      }
      const int tb = top_bit(row.image.data(), nw);
      if (tb < 0) continue;
      row.pivot = static_cast<unsigned>(tb);
      // Keep rows sorted by descending pivot; eliminate the new pivot from
      // existing rows so the basis stays reduced.
      for (auto& other : as_rows_) {
        if (get_bit(other.image.data(), row.pivot)) {
          for (std::size_t k = 0; k < nw; ++k) {
            other.image[k] ^= row.image[k];
            other.preimage[k] ^= row.preimage[k];
          }
        }
      }
      as_rows_.push_back(row);
      std::sort(as_rows_.begin(), as_rows_.end(), [](const AsRow& x, const AsRow& y) { return x.pivot > y.pivot; });
    }
    return;
  }
  BigInt t = order_ - 1;
  unsigned s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  ts_s_ = s;
  ts_t_ = t;
  const BigInt half = (order_ - 1) / 2;
  const Fq minus_one = from_int(-1);
  for (BigInt idx = 1; idx < order_; ++idx) {
    const Fq c = element_at(idx);
    if (c.pow(half) == minus_one) {
      ts_z_ = c.pow(t).w_;
      return;
    }
  }
  throw DomainError("no quadratic nonresidue found");
}

bool Field::is_square(const Fq& a) const {
  check(a);
  if (binary() || a.is_zero()) return true;
  return a.pow((order_ - 1) / 2).is_one();
}

std::optional<Fq> Field::sqrt(const Fq& a) const {
  check(a);
  if (a.is_zero()) return zero();
  if (binary()) return frobenius(a, n_ - 1);
  if (!is_square(a)) return std::nullopt;
  Fq c = make();
  c.w_ = ts_z_;
  unsigned m = ts_s_;
  Fq t = a.pow(ts_t_);
  Fq r = a.pow((ts_t_ + 1) / 2);
  while (!t.is_one()) {
    unsigned i = 0;
    Fq tt = t;
    while (!tt.is_one()) {
      tt = tt.square();
      ++i;
    }
    Fq b = c;
    for (unsigned k = 0; k + i + 1 < m; ++k) b = b.square();
    m = i;
    c = b.square();
    t *= c;
    r *= b;
  }
  const Fq nr = -r;
  return nr < r ? nr : r;
}

std::uint64_t Field::absolute_trace(const Fq& a) const {
  check(a);
  Fq acc = a, cur = a;
  for (unsigned i = 1; i < n_; ++i) {
    cur = binary() ? cur.square() : cur.pow(p_);
    acc += cur;
  }
  return acc.coeff(0);
}

std::optional<Fq> Field::solve_artin_schreier(const Fq& c) const {
  check(c);
  if (!binary()) throw DomainError("Artin-Schreier solving requires characteristic 2");
  const std::size_t nw = words();
  Limbs rem = c.w_;
  Limbs y{};
  for (const auto& row : as_rows_) {
    if (get_bit(rem.data(), row.pivot)) {
      for (std::size_t k = 0; k < nw; ++k) {
        rem[k] ^= row.image[k];
        y[k] ^= row.preimage[k];
      }
    }
  }
  for (std::size_t k = 0; k < nw; ++k)
    if (rem[k]) return std::nullopt;
  Fq s = make();
  s.w_ = y;
  const Fq s1 = s + one();
  return s1 < s ? s1 : s;
}

bool Field::has_exact_order(const Fq& a, const BigInt& order) const {
  check(a);
  if (a.is_zero() || !a.pow(order).is_one()) return false;
  for (const auto& [prime, e] : factor(order))
    if (a.pow(order / prime).is_one()) return false;
  return true;
}

Fq Field::root_of_unity(const BigInt& order) const {
  if (order < 1 || (order_ - 1) % order != 0) throw DomainError("root_of_unity: order does not divide p^n - 1");
  const BigInt cof = (order_ - 1) / order;
  const auto fac = factor(order);
  for (BigInt idx = 1; idx < order_; ++idx) {
    const Fq z = element_at(idx).pow(cof);
    bool exact = true;
    for (const auto& [prime, e] : fac)
      if (z.pow(order / prime).is_one()) {
        exact = false;
        break;
      }
    if (exact) return z;
  }
  throw DomainError("root_of_unity: no element of the requested order");
}

std::string Field::to_text() const {
  std::ostringstream os;
  os << "{p: " << p_ << ", n: " << n_ << ", modulus: [";
  for (std::size_t i = 0; i < mod_.size(); ++i) os << (i ? ", " : "") << mod_[i];
  os << "]}";
  return os.str();
}

std::string Field::format(const Fq& a) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) os << (i ? ", " : "") << a.coeff(i);
  os << ']';
  return os.str();
}

// ------------------------------------------------------------------- Fq --

bool Fq::is_zero() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

bool Fq::is_one() const {
  if (w_[0] != 1) return false;
  for (std::size_t i = 1; i < kMaxLimbs; ++i)
    if (w_[i]) return false;
  return true;
}

std::uint64_t Fq::coeff(std::size_t i) const {
  if (f_->binary()) return (w_[i / 64] >> (i % 64)) & 1;
  return w_[i];
}

std::vector<std::uint64_t> Fq::coeffs() const {
  std::vector<std::uint64_t> c(f_->degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i);
  return c;
}

namespace {
inline const Field& common(const Fq& a, const Fq& b) {
  if (a.field() != b.field()) {
    if (!a.field() || !b.field() || !a.field()->same_spec(*b.field()))
      throw MismatchError("field elements from different fields");
  }
  return *a.field();
}
}  // namespace

Fq Fq::operator+(const Fq& o) const {
  Fq r;
  common(*this, o).add(*this, o, r);
  return r;
}
Fq Fq::operator-(const Fq& o) const {
  Fq r;
  common(*this, o).sub(*this, o, r);
  return r;
}
Fq Fq::operator*(const Fq& o) const {
  Fq r;
  common(*this, o).mul(*this, o, r);
  return r;
}
Fq Fq::operator/(const Fq& o) const {
  const Field& f = common(*this, o);
  Fq i;
  f.inv(o, i);
  Fq r;
  f.mul(*this, i, r);
  return r;
}
Fq Fq::operator-() const {
  Fq r;
  f_->neg(*this, r);
  return r;
}
Fq Fq::square() const {
  Fq r;
  f_->sqr(*this, r);
  return r;
}
Fq Fq::inv() const {
  Fq r;
  f_->inv(*this, r);
  return r;
}

Fq Fq::pow(const BigInt& e) const {
  if (e < 0) return inv().pow(BigInt(-e));
  Fq r = f_->one();
  if (e == 0) return r;
  const auto top = boost::multiprecision::msb(e);
  for (std::size_t i = top + 1; i-- > 0;) {
    r = r.square();
    if (boost::multiprecision::bit_test(e, i)) r *= *this;
  }
  return r;
}

Fq Fq::pow(std::uint64_t e) const {
  Fq r = f_->one();
  if (e == 0) return r;
  for (int i = 63 - std::countl_zero(e); i >= 0; --i) {
    r = r.square();
    if ((e >> i) & 1) r *= *this;
  }
  return r;
}

Fq Fq::frobenius(unsigned j) const { return f_->frobenius(*this, j); }

bool Fq::operator==(const Fq& o) const {
  if (f_ != o.f_ && (!f_ || !o.f_ || !f_->same_spec(*o.f_))) return false;
  return w_ == o.w_;
}

std::strong_ordering Fq::operator<=>(const Fq& o) const {
  const std::size_t n = f_->degree();
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = coeff(i), b = o.coeff(i);
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::size_t Fq::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto w : w_) h = (h ^ w) * 1099511628211ULL;
  return h;
}

}  // namespace g2
