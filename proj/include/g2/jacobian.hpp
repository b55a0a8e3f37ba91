// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Divisor classes on odd-degree models y^2 + h(x) y = f(x) (genus 1 or 2)
// in Mumford form, Cantor's algorithm with function tracking, Frobenius,
// and group orders from characteristic polynomials.

#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "g2/curve.hpp"
#include "g2/poly.hpp"

namespace g2 {

/// Reduced divisor class (u, v): u monic, deg v < deg u <= genus,
/// u | f - h v - v^2.  The identity is (1, 0).
struct Divisor {
  Poly u, v;

  bool is_identity() const { return u.degree() == 0; }
  bool operator==(const Divisor& o) const { return u == o.u && v == o.v; }
  std::string to_string() const;
};

/// Formal sum of affine points of an odd-degree model; the point at
/// infinity absorbs the degree.
struct SupportDivisor {
  std::vector<std::pair<Point, int>> points;
};

/// Affine points with multiplicities at which Miller functions are evaluated.
using EvalDivisor = std::vector<std::pair<Point, int>>;

/// Value of a rational function at an EvalDivisor, kept as a fraction.
struct FnValue {
  Fq num, den;
  static FnValue one(const Field* f) { return {f->one(), f->one()}; }
  FnValue& operator*=(const FnValue& o) {
    num *= o.num;
    den *= o.den;
    return *this;
  }
  Fq value() const { return num / den; }
};

// Arithmetic on a single odd-degree model.
Divisor identity_divisor(const HyperellipticModel& m);
bool is_valid_divisor(const HyperellipticModel& m, const Divisor& d);
Divisor negate(const HyperellipticModel& m, const Divisor& d);
/// D1 + D2.  When `eval` is given, multiplies `acc` by g(eval) where
/// D1 + D2 = result + div(g); throws SupportCollision if g has a zero or
/// pole on the evaluation support.
Divisor cantor_add(const HyperellipticModel& m, const Divisor& a, const Divisor& b,
                   const EvalDivisor* eval = nullptr, FnValue* acc = nullptr);
Divisor scalar_mul(const HyperellipticModel& m, const BigInt& n, const Divisor& d);
/// Class of P - infinity.
Divisor point_divisor(const HyperellipticModel& m, const Point& p);
SupportDivisor to_support(const HyperellipticModel& m, const Divisor& d);
Divisor from_support(const HyperellipticModel& m, const SupportDivisor& s);

/// Image of a divisor class under an isomorphism src -> dst.
Divisor transport(const CurveIso& iso, const Divisor& d, const HyperellipticModel& src,
                  const HyperellipticModel& dst);
/// Same, by splitting into points and mapping each one.
Divisor transport_via_points(const CurveIso& iso, const Divisor& d, const HyperellipticModel& src,
                             const HyperellipticModel& dst);

/// Jacobian of a curve over F_q, computed on an odd-degree model over a
/// working field F_{q^w}.  The curve may be given by a defining model with
/// coefficients in F_q (possibly of even degree) plus an isomorphism onto
/// the arithmetic model.
class Jacobian {
 public:
  /// `q_exp`: q = p^q_exp.  `defining` must have coefficients in F_q.
  Jacobian(HyperellipticModel defining, unsigned q_exp, std::optional<CurveIso> to_arith = std::nullopt);

  const FieldPtr& field() const { return model_.field(); }
  const HyperellipticModel& model() const { return model_; }
  const HyperellipticModel& defining_model() const { return defining_; }
  const std::optional<CurveIso>& to_arith() const { return iota_; }
  unsigned q_exp() const { return q_exp_; }
  BigInt q() const { return ipow(BigInt(field()->characteristic()), q_exp_); }
  int genus() const { return model_.genus(); }
  /// Largest d with F_{q^d} inside the working field.
  unsigned max_degree() const { return field()->degree() / q_exp_; }

  Divisor identity() const { return identity_divisor(model_); }
  bool is_valid(const Divisor& d) const { return is_valid_divisor(model_, d); }
  Divisor add(const Divisor& a, const Divisor& b) const { return cantor_add(model_, a, b); }
  Divisor sub(const Divisor& a, const Divisor& b) const { return cantor_add(model_, a, negate(model_, b)); }
  Divisor neg(const Divisor& d) const { return negate(model_, d); }
  Divisor mul(const BigInt& n, const Divisor& d) const { return scalar_mul(model_, n, d); }

  /// pi^j where pi is the q-power Frobenius of the curve.
  Divisor frobenius(const Divisor& d, unsigned j = 1) const;
  /// sum_{i<n} pi^i(D).
  Divisor trace(const Divisor& d, unsigned n) const;
  /// Fixed by pi^d.
  bool is_rational(const Divisor& d, unsigned deg) const { return frobenius(d, deg) == d; }

  /// Defining-model point with coordinates in F_{q^deg}, mapped to the
  /// arithmetic model.
  Point random_point(unsigned deg, std::mt19937_64& rng) const;
  /// Class of P1 + P2 minus the canonical divisor, P_i rational over F_{q^deg}.
  Divisor random_divisor(unsigned deg, std::mt19937_64& rng) const;
  /// Uniform element of the subfield F_{q^deg} of the working field.
  Fq random_subfield_element(unsigned deg, std::mt19937_64& rng) const;

  /// Point of the defining model sent to the arithmetic model.
  Point to_arith_point(const Point& p) const;
  /// Arithmetic-model class of P1 - P2 on the defining model.
  Divisor difference(const Point& p1, const Point& p2) const;

 private:
  HyperellipticModel defining_;
  HyperellipticModel model_;
  unsigned q_exp_;
  std::optional<CurveIso> iota_;
  std::optional<CurveIso> frob_iso_;  // model^(q) -> model
  HyperellipticModel model_q_;        // model^(q)
};

/// Characteristic polynomial of pi^d given that of pi.
IntPoly frobenius_power_charpoly(const IntPoly& p, unsigned d);

struct GroupStructure {
  BigInt order;
  /// Annihilating integer (group exponent when pi^d is a scalar).
  BigInt exponent;
  /// c with pi^d = c, when the characteristic polynomial of pi^d is (T - c)^g2.
  std::optional<BigInt> scalar;
};
GroupStructure group_structure(const IntPoly& p, unsigned d);

/// Element of order exactly r in J(F_{q^deg}), or nullopt after `tries`.
std::optional<Divisor> random_order_r(const Jacobian& j, const BigInt& r, const GroupStructure& gs, unsigned deg,
                                      std::mt19937_64& rng, int tries = 64);

/// Evaluates P(pi) on D.
Divisor apply_charpoly(const Jacobian& j, const IntPoly& p, const Divisor& d);

}  // namespace g2
