// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "g2/curve.hpp"

#include <algorithm>
#include <sstream>

#include "g2/error.hpp"

namespace g2 {

bool Point::operator==(const Point& o) const {
  if (at_infinity != o.at_infinity) return false;
  if (at_infinity) return y.valid() == o.y.valid() && (!y.valid() || y == o.y);
  return x == o.x && y == o.y;
}

std::string Point::to_string() const {
  if (at_infinity) return y.valid() ? "inf(" + y.field()->format(y) + ")" : "inf";
  return "(" + x.field()->format(x) + ", " + y.field()->format(y) + ")";
}

// ---------------------------------------------------------- model --

HyperellipticModel::HyperellipticModel(FieldPtr field, Poly h, Poly f)
    : field_(std::move(field)), h_(std::move(h)), f_(std::move(f)) {
  if (h_.field() == nullptr) h_ = Poly(field_.get());
  if (f_.degree() < 3 || f_.degree() > 6) throw DomainError("curve model: deg f must be in 3..6");
  if (h_.degree() > (f_.degree() + 1) / 2) throw DomainError("curve model: deg h too large");
  if (!f_.field()->same_spec(*field_) || !h_.field()->same_spec(*field_))
    throw MismatchError("curve model: coefficients outside the model field");
}

Fq HyperellipticModel::h_top() const { return h_.coeff(static_cast<std::size_t>(genus() + 1)); }

bool HyperellipticModel::is_on_curve(const Point& p) const {
  if (p.at_infinity) {
    if (odd_degree()) return true;
    if (!p.y.valid()) return false;
    const Fq& Y = p.y;
    return Y.square() + h_top() * Y == f_.lead();
  }
  if (!p.x.field()->same_spec(*field_) || !p.y.field()->same_spec(*field_))
    throw MismatchError("point coordinates outside the model field");
  return p.y.square() + h_.eval(p.x) * p.y == f_.eval(p.x);
}

Point HyperellipticModel::involution(const Point& p) const {
  if (p.at_infinity) {
    if (odd_degree()) return p;
    return Point::infinity(-p.y - h_top());
  }
  return Point::affine(p.x, -p.y - h_.eval(p.x));
}

std::vector<Point> HyperellipticModel::lift_x(const Fq& x) const {
  const Field* F = field_.get();
  const Poly q(F, {-f_.eval(x), h_.eval(x), F->one()});
  std::vector<Point> out;
  for (const auto& r : roots_deg2(q)) out.push_back(Point::affine(x, r.value));
  return out;
}

std::vector<Point> HyperellipticModel::infinity_points() const {
  if (odd_degree()) return {Point::infinity()};
  const Field* F = field_.get();
  const Poly q(F, {-f_.lead(), h_top(), F->one()});
  std::vector<Point> out;
  for (const auto& r : roots_deg2(q)) out.push_back(Point::infinity(r.value));
  return out;
}

bool HyperellipticModel::is_nonsingular() const {
  const Field* F = field_.get();
  if (!F->binary()) {
    const Poly disc = h_ * h_ + f_ * F->from_int(4);
    return gcd(disc, disc.derivative()).degree() == 0;
  }
  if (h_.is_zero()) return false;
  if (h_.degree() == 0) return true;
  if (F->order() > BigInt(1) << 20) throw DomainError("nonsingularity scan too large");
  const Poly dh = h_.derivative(), df = f_.derivative();
  for (BigInt i = 0; i < F->order(); ++i) {
    const Fq x = F->element_at(i);
    if (!h_.eval(x).is_zero()) continue;
    const Fq y = *F->sqrt(f_.eval(x));
    if (dh.eval(x) * y == df.eval(x)) return false;
  }
  return true;
}

BigInt HyperellipticModel::count_points_naive(unsigned d) const {
  if (d == 0) throw DomainError("extension degree must be positive");
  const BigInt size = ipow(field_->order(), d);
  if (size > BigInt(1) << 20) throw DomainError("count_points_naive: field too large for exhaustive count");
  HyperellipticModel m = *this;
  FieldPtr ext = field_;
  if (d > 1) {
    ext = Field::build(field_->characteristic(), field_->degree() * d);
    m = base_change(TowerEmbedding(field_, ext));
  }
  BigInt total = m.infinity_points().size();
  for (BigInt i = 0; i < size; ++i) total += m.lift_x(ext->element_at(i)).size();
  return total;
}

HyperellipticModel HyperellipticModel::base_change(const FieldPtr& target,
                                                   const std::function<Fq(const Fq&)>& fn) const {
  return HyperellipticModel(target, h_.map(target.get(), fn), f_.map(target.get(), fn));
}

HyperellipticModel HyperellipticModel::base_change(const TowerEmbedding& e) const {
  if (!e.source()->same_spec(*field_)) throw MismatchError("base change: embedding source is not the model field");
  return base_change(e.target(), [&e](const Fq& c) { return e(c); });
}

HyperellipticModel HyperellipticModel::frobenius(unsigned j) const {
  return base_change(field_, [j](const Fq& c) { return c.frobenius(j); });
}

std::string HyperellipticModel::to_text() const {
  return "{field: " + field_->to_text() + ", h: " + h_.to_string() + ", f: " + f_.to_string() + "}";
}

HyperellipticModel EllipticModel::to_model() const {
  const Field* F = field.get();
  return HyperellipticModel(field, Poly(F), Poly(F, {b, a, F->zero(), F->one()}));
}

bool EllipticModel::is_nonsingular() const {
  const Field* F = field.get();
  const Fq disc = F->from_int(4) * a.pow(std::uint64_t{3}) + F->from_int(27) * b.square();
  return !disc.is_zero() && F->characteristic() > 3;
}

// ------------------------------------------------------------ iso --

CurveIso CurveIso::identity(const Field* f) { return {f->one(), f->zero(), f->zero(), f->one(), f->one(), Poly(f)}; }

CurveIso CurveIso::mobius(const Fq& a, const Fq& b, const Fq& c, const Fq& d, const Fq& e) {
  return {a, b, c, d, e, Poly(a.field())};
}

CurveIso CurveIso::then(const CurveIso& o) const {
  const Field* F = field();
  const Poly num(F, {b, a}), den(F, {d, c});
  CurveIso r;
  r.a = o.a * a + o.b * c;
  r.b = o.a * b + o.b * d;
  r.c = o.c * a + o.d * c;
  r.d = o.c * b + o.d * d;
  r.e = o.e * e;
  r.s = s * o.e + o.s.homogenize(num, den, 3);
  return r;
}

CurveIso CurveIso::inverse() const {
  const Field* F = field();
  const Fq delta = det();
  if (delta.is_zero()) throw DomainError("curve iso: singular Mobius transformation");
  const Poly num(F, {-b, d}), den(F, {a, -c});
  CurveIso r;
  r.a = d;
  r.b = -b;
  r.c = -c;
  r.d = a;
  r.e = delta.square() * delta / e;
  r.s = -(s.homogenize(num, den, 3)) * e.inv();
  return r;
}

CurveIso CurveIso::frobenius(unsigned j) const {
  return map(field(), [j](const Fq& v) { return v.frobenius(j); });
}

CurveIso CurveIso::map(const Field* target, const std::function<Fq(const Fq&)>& fn) const {
  return {fn(a), fn(b), fn(c), fn(d), fn(e), s.map(target, fn)};
}

HyperellipticModel CurveIso::transform(const HyperellipticModel& src) const {
  if (src.genus() != 2) throw DomainError("curve iso: genus-2 model required");
  const Field* F = field();
  const CurveIso inv = inverse();
  const Poly num(F, {inv.b, inv.a}), den(F, {inv.d, inv.c});
  const Poly H1 = src.h().homogenize(num, den, 3);
  const Poly F1 = src.f().homogenize(num, den, 6);
  const Poly& sp = inv.s;
  const Fq ei = inv.e.inv();
  const Poly h2 = (sp * F->from_int(2) + H1) * ei;
  const Poly f2 = (F1 - sp * sp - H1 * sp) * ei.square();
  return HyperellipticModel(src.field(), h2, f2);
}

Point CurveIso::apply(const Point& p, const HyperellipticModel& src, const HyperellipticModel& dst) const {
  const Fq s3 = s.coeff(3);
  if (!p.at_infinity) {
    const Fq den = c * p.x + d;
    const Fq top = e * p.y + s.eval(p.x);
    if (!den.is_zero()) {
      const Fq di = den.inv();
      return Point::affine((a * p.x + b) * di, top * di.square() * di);
    }
    if (dst.odd_degree()) return Point::infinity();
    const Fq ax = a * p.x + b;
    return Point::infinity(top / (ax.square() * ax));
  }
  if (src.odd_degree()) {
    if (c.is_zero()) return Point::infinity();
    const Fq ci = c.inv();
    return Point::affine(a * ci, s3 * ci.square() * ci);
  }
  const Fq top = e * p.y + s3;
  if (!c.is_zero()) {
    const Fq ci = c.inv();
    return Point::affine(a * ci, top * ci.square() * ci);
  }
  if (dst.odd_degree()) return Point::infinity();
  return Point::infinity(top / (a.square() * a));
}

bool CurveIso::operator==(const CurveIso& o) const {
  return a == o.a && b == o.b && c == o.c && d == o.d && e == o.e && s == o.s;
}

bool CurveIso::equivalent(const CurveIso& o) const {
  Fq l;
  if (!a.is_zero()) {
    if (o.a.is_zero()) return false;
    l = o.a / a;
  } else if (!b.is_zero()) {
    if (o.b.is_zero()) return false;
    l = o.b / b;
  } else {
    return false;
  }
  const Fq l3 = l.square() * l;
  return o.a == l * a && o.b == l * b && o.c == l * c && o.d == l * d && o.e == l3 * e && o.s == s * l3;
}

// ---------------------------------------------------------- twist --

TwistData construct_twist(std::uint64_t p) {
  if (p < 5 || p % 3 != 2) throw DomainError("construct_twist: p must satisfy p = 2 mod 3 and p >= 5");
  TwistData t;
  t.p = p;
  t.base = Field::build(p, 1);
  t.sextic = Field::build(p, 6);
  const Field* S = t.sextic.get();
  const BigInt P = p;
  const BigInt order = t.sextic->order() - 1;
  const Fq g = t.sextic->root_of_unity(order);
  t.zeta6 = t.sextic->root_of_unity(6);
  t.zeta3 = t.zeta6.square();
  const BigInt m = (P * P * P * P + P * P + 1) / 3;
  const BigInt e = P * P - 1;
  const Fq step = g.pow(m);
  Fq gamma = step;
  bool found = false;
  for (int k = 1; k <= 3; ++k, gamma *= step) {
    if (gamma.pow(e) == t.zeta3) {
      found = true;
      break;
    }
  }
  if (!found) throw DomainError("construct_twist: no gamma with gamma^(p^2-1) = zeta3");
  t.gamma = gamma;
  t.a = gamma.pow(std::uint64_t{p});
  t.b = t.zeta3.inv() * t.a;
  t.c = gamma;
  t.d = t.zeta3 * gamma;

  const Poly lin1(S, {t.b, t.a}), lin2(S, {t.d, t.c});
  Poly sum = Poly::constant(S->one());
  Poly p1 = sum, p2 = sum;
  for (int i = 0; i < 6; ++i) {
    p1 *= lin1;
    p2 *= lin2;
  }
  sum = p1 + p2;
  std::vector<Fq> base_coeffs;
  for (const auto& co : sum.coeffs()) {
    if (co.frobenius(1) != co) throw DomainError("construct_twist: twisted model not defined over F_p");
    base_coeffs.push_back(t.base->from_int(static_cast<std::int64_t>(co.coeff(0))));
  }
  t.model = HyperellipticModel(t.base, Poly(t.base.get()), Poly(t.base.get(), base_coeffs));
  t.target = HyperellipticModel(t.sextic, Poly(S), Poly::from_ints(S, {1, 0, 0, 0, 0, 0, 1}));
  t.phi = CurveIso::mobius(t.a, t.b, t.c, t.d, S->one());
  const TowerEmbedding emb(t.base, t.sextic);
  if (!(t.phi.transform(t.model.base_change(emb)) == t.target))
    throw Error("construct_twist: isomorphism does not map the twist onto y^2 = x^6 + 1");
  return t;
}

}  // namespace g2
