// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Univariate polynomials over a Field, and integer polynomials.

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "g2/bigint.hpp"
#include "g2/field.hpp"

namespace g2 {

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field* f) : f_(f) {}
  Poly(const Field* f, std::vector<Fq> c);
  static Poly constant(const Fq& c);
  static Poly x(const Field* f);
  /// x - a.
  static Poly linear_root(const Fq& a);
  /// Coefficients given as small integers, little-endian.
  static Poly from_ints(const Field* f, std::initializer_list<std::int64_t> c);

  const Field* field() const { return f_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  Fq coeff(std::size_t i) const;
  Fq lead() const;
  const std::vector<Fq>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Fq& s) const;
  Poly operator/(const Poly& o) const { return divmod(o).first; }
  Poly operator%(const Poly& o) const { return divmod(o).second; }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;

  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Fq eval(const Fq& a) const;
  /// this(g(x)).
  Poly compose(const Poly& g) const;
  Poly monic() const;
  Poly derivative() const;
  /// Applies a map to each coefficient; the result lives over `target`.
  Poly map(const Field* target, const std::function<Fq(const Fq&)>& fn) const;
  /// Sum of c_i * num^i * den^(d-i) for a fixed total degree d >= deg.
  Poly homogenize(const Poly& num, const Poly& den, int d) const;

  std::string to_string() const;

 private:
  void trim();
  void check(const Poly& o) const;
  const Field* f_ = nullptr;
  std::vector<Fq> c_;
};

inline Poly operator*(const Fq& s, const Poly& p) { return p * s; }

/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
struct Xgcd {
  Poly g, s, t;
};
/// s*a + t*b = g with g monic.
Xgcd xgcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, const BigInt& e, const Poly& mod);
/// Inverse of a modulo m (throws DomainError when not coprime).
Poly invmod(const Poly& a, const Poly& m);

struct Root {
  Fq value;
  unsigned multiplicity;
};
/// Roots of a monic polynomial of degree 1 or 2 in its coefficient field.
std::vector<Root> roots_deg2(const Poly& u);
/// All distinct roots in the coefficient field, sorted ascending.
std::vector<Fq> find_roots(const Poly& u, std::uint64_t seed = 1);

/// Polynomial with arbitrary-precision integer coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> c);
  static IntPoly monomial(const BigInt& c, unsigned deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  BigInt eval(const BigInt& t) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Exact equality of two expanded integer polynomials.
inline bool int_poly_identity_check(const IntPoly& lhs, const IntPoly& rhs) { return lhs == rhs; }

}  // namespace g2
