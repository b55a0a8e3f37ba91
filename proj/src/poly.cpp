// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "g2/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "g2/error.hpp"

namespace g2 {

Poly::Poly(const Field* f, std::vector<Fq> c) : f_(f), c_(std::move(c)) { trim(); }

Poly Poly::constant(const Fq& c) { return Poly(c.field(), {c}); }

Poly Poly::x(const Field* f) { return Poly(f, {f->zero(), f->one()}); }

Poly Poly::linear_root(const Fq& a) { return Poly(a.field(), {-a, a.field()->one()}); }

Poly Poly::from_ints(const Field* f, std::initializer_list<std::int64_t> c) {
  std::vector<Fq> v;
  for (auto x : c) v.push_back(f->from_int(x));
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check(const Poly& o) const {
  if (f_ != o.f_ && !(f_ && o.f_ && f_->same_spec(*o.f_))) throw MismatchError("polynomials over different fields");
}

Fq Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }

Fq Poly::lead() const { return c_.empty() ? f_->zero() : c_.back(); }

Poly Poly::operator+(const Poly& o) const {
  check(o);
  std::vector<Fq> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  check(o);
  std::vector<Fq> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  check(o);
  if (c_.empty() || o.c_.empty()) return Poly(f_);
  std::vector<Fq> r(c_.size() + o.c_.size() - 1, f_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(f_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Fq> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -c_[i];
  return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Fq& s) const {
  std::vector<Fq> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = c_[i] * s;
  return Poly(f_, std::move(r));
}

bool Poly::operator==(const Poly& o) const { return c_.size() == o.c_.size() && std::equal(c_.begin(), c_.end(), o.c_.begin()); }

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check(d);
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  if (degree() < d.degree()) return {Poly(f_), *this};
  std::vector<Fq> r = c_;
  std::vector<Fq> q(c_.size() - d.c_.size() + 1, f_->zero());
  const Fq li = d.lead().inv();
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const Fq c = r[k + dd] * li;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i <= dd; ++i) r[k + i] -= c * d.c_[i];
  }
  r.resize(dd);
  return {Poly(f_, std::move(q)), Poly(f_, std::move(r))};
}

Fq Poly::eval(const Fq& a) const {
  Fq r = a.field()->zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
  return r;
}

Poly Poly::compose(const Poly& g) const {
  Poly r(f_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * g + Poly::constant(c_[i]);
  return r;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this * lead().inv();
}

Poly Poly::derivative() const {
  std::vector<Fq> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * f_->from_int(static_cast<std::int64_t>(i % f_->characteristic())));
  return Poly(f_, std::move(r));
}

Poly Poly::map(const Field* target, const std::function<Fq(const Fq&)>& fn) const {
  std::vector<Fq> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(fn(c));
  return Poly(target, std::move(r));
}

Poly Poly::homogenize(const Poly& num, const Poly& den, int d) const {
  if (degree() > d) throw DomainError("homogenize: degree exceeds target degree");
  std::vector<Poly> np{Poly::constant(f_->one())}, dp{Poly::constant(f_->one())};
  for (int i = 1; i <= d; ++i) {
    np.push_back(np.back() * num);
    dp.push_back(dp.back() * den);
  }
  Poly r(f_);
  for (int i = 0; i <= degree(); ++i)
    if (!c_[i].is_zero()) r += np[i] * dp[d - i] * c_[i];
  return r;
}

std::string Poly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << f_->format(c_[i]);
  os << ']';
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  const Field* f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f->one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f->one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    Poly t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Fq li = r0.lead().inv();
  return {r0 * li, s0 * li, t0 * li};
}

Poly powmod(const Poly& base, const BigInt& e, const Poly& mod) {
  const Field* f = mod.field();
  Poly r = Poly::constant(f->one()) % mod;
  if (e == 0) return r;
  const Poly b = base % mod;
  const auto top = boost::multiprecision::msb(e);
  for (std::size_t i = top + 1; i-- > 0;) {
    r = (r * r) % mod;
    if (boost::multiprecision::bit_test(e, i)) r = (r * b) % mod;
  }
  return r;
}

Poly invmod(const Poly& a, const Poly& m) {
  const Xgcd g = xgcd(a % m, m);
  if (g.g.degree() != 0) throw DomainError("polynomial not invertible modulo m");
  return g.s % m;
}

std::vector<Root> roots_deg2(const Poly& u) {
  if (u.degree() < 1 || u.degree() > 2) throw DomainError("roots_deg2: degree must be 1 or 2");
  if (!u.lead().is_one()) throw DomainError("roots_deg2: polynomial must be monic");
  const Field* f = u.field();
  if (u.degree() == 1) return {{-u.coeff(0), 1}};
  const Fq b = u.coeff(1), c = u.coeff(0);
  std::vector<Root> out;
  if (f->binary()) {
    if (b.is_zero()) return {{*f->sqrt(c), 2}};
    // x = b z turns x^2 + b x + c into b^2 (z^2 + z + c/b^2).
    const auto z = f->solve_artin_schreier(c / b.square());
    if (!z) return {};
    Fq r1 = b * *z, r2 = b * (*z + f->one());
    if (r2 < r1) std::swap(r1, r2);
    return {{r1, 1}, {r2, 1}};
  }
  const Fq two = f->from_int(2);
  const Fq disc = b.square() - f->from_int(4) * c;
  if (disc.is_zero()) return {{-b / two, 2}};
  const auto s = f->sqrt(disc);
  if (!s) return {};
  Fq r1 = (-b + *s) / two, r2 = (-b - *s) / two;
  if (r2 < r1) std::swap(r1, r2);
  return {{r1, 1}, {r2, 1}};
}

namespace {

void split_roots(const Poly& g, std::mt19937_64& rng, std::vector<Fq>& out) {
  const Field* f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0));
    return;
  }
  if (g.degree() == 2) {
    for (const auto& r : roots_deg2(g)) out.push_back(r.value);
    return;
  }
  const Poly x = Poly::x(f);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const Fq delta = f->random(rng);
    Poly h(f);
    if (f->binary()) {
      // Trace of delta*x to F_2, taken modulo g.
      Poly y = (x * delta) % g, acc = y;
      for (unsigned i = 1; i < f->degree(); ++i) {
        y = (y * y) % g;
        acc += y;
      }
      h = gcd(g, acc);
    } else {
      const Poly base = x + Poly::constant(delta);
      const Poly t = powmod(base, (f->order() - 1) / 2, g) - Poly::constant(f->one());
      h = gcd(g, t);
    }
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_roots(h, rng, out);
      split_roots(g / h, rng, out);
      return;
    }
  }
  throw DomainError("find_roots: equal-degree splitting failed");
}

}  // namespace

std::vector<Fq> find_roots(const Poly& u, std::uint64_t seed) {
  if (u.is_zero()) throw DomainError("find_roots: zero polynomial");
  const Field* f = u.field();
  const Poly m = u.monic();
  if (m.degree() == 0) return {};
  const Poly x = Poly::x(f);
  const Poly xq = powmod(x, f->order(), m);
  const Poly g = gcd(m, xq - x);
  std::vector<Fq> out;
  std::mt19937_64 rng(seed);
  split_roots(g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- IntPoly --

IntPoly::IntPoly(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }

IntPoly IntPoly::monomial(const BigInt& c, unsigned deg) {
  std::vector<BigInt> v(deg + 1, 0);
  v[deg] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

BigInt IntPoly::eval(const BigInt& t) const {
  BigInt r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
  return r;
}

std::string IntPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << ']';
  return os.str();
}

}  // namespace g2
