// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Curve models y^2 + h(x) y = f(x) and their fractional-linear isomorphisms.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2/field.hpp"
#include "g2/poly.hpp"

namespace g2 {

/// A projective point.  For models with deg f even, a point at infinity
/// stores the limit of y/x^(deg f / 2) in `y`; for odd degree the single
/// point at infinity carries no coordinates.
struct Point {
  bool at_infinity = false;
  Fq x, y;

  static Point affine(Fq x, Fq y) { return {false, std::move(x), std::move(y)}; }
  static Point infinity() { return {true, {}, {}}; }
  static Point infinity(Fq slope) { return {true, {}, std::move(slope)}; }
  bool operator==(const Point& o) const;
  std::string to_string() const;
};

class HyperellipticModel {
 public:
  HyperellipticModel() = default;
  HyperellipticModel(FieldPtr field, Poly h, Poly f);

  const FieldPtr& field() const { return field_; }
  const Poly& h() const { return h_; }
  const Poly& f() const { return f_; }
  int degree() const { return f_.degree(); }
  /// 1 for deg f in {3, 4}, 2 for deg f in {5, 6}.
  int genus() const { return (degree() - 1) / 2; }
  bool odd_degree() const { return degree() % 2 == 1; }

  bool is_on_curve(const Point& p) const;
  /// (x, -y - h(x)).
  Point involution(const Point& p) const;
  /// Affine points with the given x, sorted by y.
  std::vector<Point> lift_x(const Fq& x) const;
  /// Points at infinity rational over the model field, sorted.
  std::vector<Point> infinity_points() const;
  /// Affine singular points are absent (squarefree test in odd
  /// characteristic, exhaustive over the model field otherwise).
  bool is_nonsingular() const;
  /// Number of projective points over the degree-d extension of the model
  /// field.  Throws DomainError above 2^20 field elements.
  BigInt count_points_naive(unsigned d) const;

  /// Same equation with coefficients mapped into another field.
  HyperellipticModel base_change(const FieldPtr& target, const std::function<Fq(const Fq&)>& fn) const;
  HyperellipticModel base_change(const TowerEmbedding& e) const;
  /// Coefficient-wise p^j-power.
  HyperellipticModel frobenius(unsigned j) const;

  bool operator==(const HyperellipticModel& o) const { return h_ == o.h_ && f_ == o.f_; }
  std::string to_text() const;

 private:
  /// Leading coefficient of h at degree g+1 (zero when deg h <= g).
  Fq h_top() const;
  FieldPtr field_;
  Poly h_, f_;
};

/// y^2 = x^3 + a x + b.
struct EllipticModel {
  FieldPtr field;
  Fq a, b;
  HyperellipticModel to_model() const;
  bool is_nonsingular() const;
};

/// Isomorphism of genus-2 models
///   x' = (a x + b)/(c x + d),  y' = (e y + s(x))/(c x + d)^3,  deg s <= 3.
struct CurveIso {
  Fq a, b, c, d, e;
  Poly s;

  static CurveIso identity(const Field* f);
  static CurveIso mobius(const Fq& a, const Fq& b, const Fq& c, const Fq& d, const Fq& e);

  const Field* field() const { return a.field(); }
  Fq det() const { return a * d - b * c; }

  /// second ∘ this.
  CurveIso then(const CurveIso& second) const;
  CurveIso inverse() const;
  CurveIso frobenius(unsigned j) const;
  CurveIso map(const Field* target, const std::function<Fq(const Fq&)>& fn) const;

  /// Image model of `src`.
  HyperellipticModel transform(const HyperellipticModel& src) const;
  Point apply(const Point& p, const HyperellipticModel& src, const HyperellipticModel& dst) const;

  bool operator==(const CurveIso& o) const;
  /// Equality up to the scaling (a,b,c,d,e,s) ~ (l a, l b, l c, l d, l^3 e, l^3 s).
  bool equivalent(const CurveIso& o) const;
};

/// Twist of y^2 = x^6 + 1 defined over F_p (p = 2 mod 3, p >= 5).
struct TwistData {
  std::uint64_t p = 0;
  FieldPtr base;      // F_p
  FieldPtr sextic;    // F_{p^6}, holds gamma and the iso coefficients
  Fq zeta6, zeta3;    // in sextic, zeta3 = zeta6^2
  Fq gamma, a, b, c, d;
  HyperellipticModel model;   // C' over F_p
  HyperellipticModel target;  // y^2 = x^6 + 1 over F_{p^6}
  CurveIso phi;               // C' -> C over F_{p^6}
};

TwistData construct_twist(std::uint64_t p);

}  // namespace g2
