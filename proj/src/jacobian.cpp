// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "g2/jacobian.hpp"

#include "g2/error.hpp"

namespace g2 {

std::string Divisor::to_string() const { return "{u: " + u.to_string() + ", v: " + v.to_string() + "}"; }

Divisor identity_divisor(const HyperellipticModel& m) {
  const Field* F = m.field().get();
  return {Poly::constant(F->one()), Poly(F)};
}

bool is_valid_divisor(const HyperellipticModel& m, const Divisor& d) {
  if (d.u.is_zero() || !d.u.lead().is_one()) return false;
  if (d.u.degree() > m.genus() || d.v.degree() >= d.u.degree()) return false;
  return ((m.f() - m.h() * d.v - d.v * d.v) % d.u).is_zero();
}

Divisor negate(const HyperellipticModel& m, const Divisor& d) { return {d.u, (-d.v - m.h()) % d.u}; }

namespace {

// Multiplies acc by fn(P)^n over the evaluation divisor, where fn(P) is
// num(P)/den(P) for numerator and denominator given as callables.
template <class Num, class Den>
void accumulate(const EvalDivisor& ev, FnValue& acc, Num num, Den den) {
  for (const auto& [p, n] : ev) {
    const Fq a = num(p), b = den(p);
    if (a.is_zero() || b.is_zero()) throw SupportCollision();
    if (n > 0) {
      for (int k = 0; k < n; ++k) {
        acc.num *= a;
        acc.den *= b;
      }
    } else {
      for (int k = 0; k < -n; ++k) {
        acc.num *= b;
        acc.den *= a;
      }
    }
  }
}

}  // namespace

Divisor cantor_add(const HyperellipticModel& m, const Divisor& a, const Divisor& b, const EvalDivisor* eval,
                   FnValue* acc) {
  const Poly& f = m.f();
  const Poly& h = m.h();
  const Xgcd g1 = xgcd(a.u, b.u);
  const Xgcd g2 = xgcd(g1.g, a.v + b.v + h);
  const Poly& d = g2.g;
  const Poly s1 = g2.s * g1.s, s2 = g2.s * g1.t, s3 = g2.t;
  Poly u = (a.u * b.u) / (d * d);
  Poly v = ((s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f)) / d) % u;
  if (eval && d.degree() > 0) {
    accumulate(*eval, *acc, [&](const Point& p) { return d.eval(p.x); },
               [&](const Point& p) { return p.x.field()->one(); });
  }
  while (u.degree() > m.genus()) {
    const Poly up = ((f - v * h - v * v) / u).monic();
    if (eval) {
      const Poly vv = v, uu = up;
      accumulate(*eval, *acc, [&](const Point& p) { return p.y - vv.eval(p.x); },
                 [&](const Point& p) { return uu.eval(p.x); });
    }
    v = (-h - v) % up;
    u = up;
  }
  return {u, v};
}

Divisor scalar_mul(const HyperellipticModel& m, const BigInt& n, const Divisor& d) {
  if (n < 0) return scalar_mul(m, BigInt(-n), negate(m, d));
  Divisor r = identity_divisor(m);
  if (n == 0) return r;
  const auto top = boost::multiprecision::msb(n);
  for (std::size_t i = top + 1; i-- > 0;) {
    r = cantor_add(m, r, r);
    if (boost::multiprecision::bit_test(n, i)) r = cantor_add(m, r, d);
  }
  return r;
}

Divisor point_divisor(const HyperellipticModel& m, const Point& p) {
  if (p.at_infinity) return identity_divisor(m);
  return {Poly::linear_root(p.x), Poly::constant(p.y)};
}

SupportDivisor to_support(const HyperellipticModel& m, const Divisor& d) {
  (void)m;
  SupportDivisor s;
  if (d.is_identity()) return s;
  const auto roots = roots_deg2(d.u);
  unsigned total = 0;
  for (const auto& r : roots) {
    s.points.push_back({Point::affine(r.value, d.v.eval(r.value)), static_cast<int>(r.multiplicity)});
    total += r.multiplicity;
  }
  if (static_cast<int>(total) != d.u.degree()) throw DomainError("to_support: u does not split in the working field");
  return s;
}

Divisor from_support(const HyperellipticModel& m, const SupportDivisor& s) {
  Divisor r = identity_divisor(m);
  for (const auto& [p, n] : s.points) {
    if (!m.is_on_curve(p)) throw DomainError("from_support: point not on curve");
    const Divisor pd = point_divisor(m, p);
    r = cantor_add(m, r, scalar_mul(m, n, pd));
  }
  return r;
}

Divisor transport(const CurveIso& iso, const Divisor& d, const HyperellipticModel& src,
                  const HyperellipticModel& dst) {
  const Field* F = iso.field();
  Poly u = d.u;
  const int m = u.degree();
  if (!iso.c.is_zero()) {
    const Fq pole = -iso.d / iso.c;
    const Poly lin = Poly::linear_root(pole);
    while (u.degree() > 0 && u.eval(pole).is_zero()) u = u / lin;
  }
  const Poly num(F, {-iso.b, iso.d}), den(F, {iso.a, -iso.c});
  Divisor r = identity_divisor(dst);
  if (u.degree() > 0) {
    const Poly un = u.homogenize(num, den, u.degree()).monic();
    const Fq delta = iso.det();
    const Poly vh = (d.v % u).homogenize(num, den, 3);
    const Poly sh = iso.s.homogenize(num, den, 3);
    r = {un, ((vh * iso.e + sh) * (delta.square() * delta).inv()) % un};
  }
  if (!iso.c.is_zero() && m % 2 == 1) {
    const Point w = iso.apply(Point::infinity(), src, dst);
    r = cantor_add(dst, r, point_divisor(dst, w));
  }
  return r;
}

Divisor transport_via_points(const CurveIso& iso, const Divisor& d, const HyperellipticModel& src,
                             const HyperellipticModel& dst) {
  const SupportDivisor s = to_support(src, d);
  SupportDivisor t;
  int deg = 0;
  for (const auto& [p, n] : s.points) {
    t.points.push_back({iso.apply(p, src, dst), n});
    deg += n;
  }
  // Each P - inf_src becomes phi(P) - phi(inf_src).
  const Point w = iso.apply(Point::infinity(), src, dst);
  if (deg) t.points.push_back({w, -deg});
  SupportDivisor affine;
  for (const auto& e : t.points)
    if (!e.first.at_infinity) affine.points.push_back(e);
  return from_support(dst, affine);
}

// ---------------------------------------------------------- Jacobian --

Jacobian::Jacobian(HyperellipticModel defining, unsigned q_exp, std::optional<CurveIso> to_arith)
    : defining_(std::move(defining)), q_exp_(q_exp), iota_(std::move(to_arith)) {
  if (q_exp_ == 0 || defining_.field()->degree() % q_exp_ != 0)
    throw DomainError("Jacobian: base field degree must divide the working field degree");
  for (const Poly* p : {&defining_.f(), &defining_.h()})
    for (const auto& c : p->coeffs())
      if (c.frobenius(q_exp_) != c) throw DomainError("Jacobian: defining model not over the base field");
  if (iota_) {
    model_ = iota_->transform(defining_);
    const CurveIso iq = iota_->frobenius(q_exp_);
    if (!iq.equivalent(*iota_)) frob_iso_ = iq.inverse().then(*iota_);
  } else {
    model_ = defining_;
  }
  if (!model_.odd_degree()) throw DomainError("Jacobian: arithmetic model must have odd degree");
  model_q_ = model_.frobenius(q_exp_);
}

Divisor Jacobian::frobenius(const Divisor& d, unsigned j) const {
  Divisor r = d;
  for (unsigned i = 0; i < j; ++i) {
    Divisor t{r.u.map(r.u.field(), [this](const Fq& c) { return c.frobenius(q_exp_); }),
              r.v.map(r.v.field(), [this](const Fq& c) { return c.frobenius(q_exp_); })};
    r = frob_iso_ ? transport(*frob_iso_, t, model_q_, model_) : t;
  }
  return r;
}

Divisor Jacobian::trace(const Divisor& d, unsigned n) const {
  Divisor acc = identity(), cur = d;
  for (unsigned i = 0; i < n; ++i) {
    acc = add(acc, cur);
    if (i + 1 < n) cur = frobenius(cur);
  }
  return acc;
}

Fq Jacobian::random_subfield_element(unsigned deg, std::mt19937_64& rng) const {
  const unsigned e = deg * q_exp_;
  const unsigned n = field()->degree();
  if (e == 0 || n % e != 0) throw DomainError("subfield degree does not divide the working field degree");
  const Fq z = field()->random(rng);
  Fq acc = z, cur = z;
  for (unsigned i = 1; i < n / e; ++i) {
    cur = cur.frobenius(e);
    acc += cur;
  }
  return acc;
}

Point Jacobian::to_arith_point(const Point& p) const { return iota_ ? iota_->apply(p, defining_, model_) : p; }

Point Jacobian::random_point(unsigned deg, std::mt19937_64& rng) const {
  const unsigned e = deg * q_exp_;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Fq x = random_subfield_element(deg, rng);
    const auto pts = defining_.lift_x(x);
    if (pts.empty()) continue;
    const Point& p = pts[rng() % pts.size()];
    if (p.y.frobenius(e) != p.y) continue;
    return to_arith_point(p);
  }
  throw Error("random_point: no rational point found");
}

Divisor Jacobian::random_divisor(unsigned deg, std::mt19937_64& rng) const {
  const Point p1 = random_point(deg, rng), p2 = random_point(deg, rng);
  return add(point_divisor(model_, p1), point_divisor(model_, p2));
}

Divisor Jacobian::difference(const Point& p1, const Point& p2) const {
  return sub(point_divisor(model_, to_arith_point(p1)), point_divisor(model_, to_arith_point(p2)));
}

// ------------------------------------------------------------ orders --

IntPoly frobenius_power_charpoly(const IntPoly& p, unsigned d) {
  const int g2 = p.degree();
  if (g2 <= 0 || p.coeff(g2) != 1) throw DomainError("characteristic polynomial must be monic");
  // Elementary symmetric functions of the roots.
  std::vector<BigInt> e(g2 + 1);
  for (int k = 0; k <= g2; ++k) e[k] = ((k % 2) ? -1 : 1) * p.coeff(g2 - k);
  const unsigned kmax = g2 * d;
  std::vector<BigInt> ps(kmax + 1, 0);
  for (unsigned k = 1; k <= kmax; ++k) {
    BigInt s = 0;
    for (unsigned i = 1; i < k && i <= static_cast<unsigned>(g2); ++i)
      s += ((i % 2) ? 1 : -1) * e[i] * ps[k - i];
    if (k <= static_cast<unsigned>(g2)) s += ((k % 2) ? 1 : -1) * BigInt(k) * e[k];
    ps[k] = s;
  }
  // Power sums of the d-th powers, then back to elementary functions.
  std::vector<BigInt> E(g2 + 1, 0);
  E[0] = 1;
  for (int k = 1; k <= g2; ++k) {
    BigInt s = 0;
    for (int i = 1; i <= k; ++i) s += ((i % 2) ? 1 : -1) * E[k - i] * ps[i * d];
    if (s % k != 0) throw Error("frobenius_power_charpoly: non-integral symmetric function");
    E[k] = s / k;
  }
  std::vector<BigInt> c(g2 + 1);
  for (int k = 0; k <= g2; ++k) c[g2 - k] = ((k % 2) ? -1 : 1) * E[k];
  return IntPoly(c);
}

GroupStructure group_structure(const IntPoly& p, unsigned d) {
  const IntPoly pd = frobenius_power_charpoly(p, d);
  GroupStructure gs;
  gs.order = abs(pd.eval(1));
  gs.exponent = gs.order;
  const int g2 = pd.degree();
  if (pd.coeff(g2 - 1) % g2 == 0) {
    const BigInt c = -pd.coeff(g2 - 1) / g2;
    IntPoly pow({1});
    for (int i = 0; i < g2; ++i) pow = pow * IntPoly({-c, 1});
    if (pow == pd) {
      gs.scalar = c;
      gs.exponent = abs(c - 1);
    }
  }
  return gs;
}

std::optional<Divisor> random_order_r(const Jacobian& j, const BigInt& r, const GroupStructure& gs, unsigned deg,
                                      std::mt19937_64& rng, int tries) {
  if (gs.exponent % r != 0) return std::nullopt;
  BigInt cof = gs.exponent;
  while (cof % r == 0) cof /= r;
  for (int t = 0; t < tries; ++t) {
    Divisor d = j.mul(cof, j.random_divisor(deg, rng));
    if (d.is_identity()) continue;
    for (;;) {
      const Divisor n = j.mul(r, d);
      if (n.is_identity()) return d;
      d = n;
    }
  }
  return std::nullopt;
}

Divisor apply_charpoly(const Jacobian& j, const IntPoly& p, const Divisor& d) {
  Divisor acc = j.identity(), cur = d;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) != 0) acc = j.add(acc, j.mul(p.coeff(i), cur));
    if (i < p.degree()) cur = j.frobenius(cur);
  }
  return acc;
}

}  // namespace g2
