// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Endomorphism expressions on Jacobians, the splitting maps between
// y^2 = x^6 + 1 and E x E with E: y^2 = x^3 + 1, operator matrices on
// r-torsion, and distortion search.

#pragma once

#include <array>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "g2/jacobian.hpp"

namespace g2 {

/// Maps points of `m` onto `m` and fixes the model equation; checked on
/// `samples` random points.  Throws DomainError otherwise.
void check_automorphism(const CurveIso& iso, const HyperellipticModel& m, int samples = 100, std::uint64_t seed = 1);

/// iota^-1 ∘ aut ∘ iota, an automorphism of the arithmetic model given one
/// of the defining model.
CurveIso to_arithmetic(const Jacobian& j, const CurveIso& aut);

class Endo {
 public:
  enum class Kind { Integer, Frobenius, Automorphism, Conjugated, Compose, Add, Negate };

  static Endo integer(const BigInt& n);
  static Endo identity() { return integer(1); }
  /// pi^j for the q-power Frobenius.
  static Endo frobenius(unsigned j = 1);
  /// Automorphism of the arithmetic model of `j`, validated at construction.
  static Endo automorphism(std::string name, const CurveIso& iso, const Jacobian& j);
  /// iso ∘ e ∘ iso^-1 where e acts on `inner` and iso maps the arithmetic
  /// model of `inner` to that of the outer Jacobian.
  static Endo conjugated(std::string name, std::shared_ptr<const Jacobian> inner, const CurveIso& iso, const Endo& e);

  /// this ∘ o (o applied first).
  Endo operator*(const Endo& o) const;
  Endo operator+(const Endo& o) const;
  Endo operator-(const Endo& o) const;
  Endo operator-() const;
  Endo pow(unsigned n) const;
  Endo renamed(std::string name) const;

  Kind kind() const;
  const std::string& name() const;
  bool is_identity() const;

  Divisor apply(const Jacobian& j, const Divisor& d) const;
  /// Same as apply, with automorphisms acting point by point on the support.
  /// Requires supports that split over the working field.
  Divisor apply_pointwise(const Jacobian& j, const Divisor& d) const;

 private:
  struct Node;
  explicit Endo(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  Divisor eval(const Jacobian& j, const Divisor& d, bool pointwise) const;
  std::shared_ptr<const Node> n_;
};

/// Agreement of two endomorphisms on random classes of the working field.
bool agree_on_samples(const Jacobian& j, const Endo& a, const Endo& b, int samples, std::mt19937_64& rng);

/// Sign s in {+1, -1} with a = s*b on every sample, or 0 when neither fits.
/// Samples where b(D) is 2-torsion do not discriminate and are skipped.
int relation_sign(const Jacobian& j, const Endo& a, const Endo& b, int samples, std::mt19937_64& rng);

// ------------------------------------------------------ splitting maps --

/// Element of E x E as a pair of classes P - O, Q - O.
using EllipticPair = std::pair<Divisor, Divisor>;

/// f(x, y) = (x^2, y) and f'(x, y) = (1/x^2, y/x^3) from C: y^2 = x^6 + 1 to
/// E: y^2 = x^3 + 1, and the induced maps between Jac(C) and E x E.
class SplitMaps {
 public:
  /// `c` has defining model y^2 = x^6 + 1 and the arithmetic model
  /// x' = 1/(x - alpha); `e` is y^2 = x^3 + 1 over the same field.
  SplitMaps(std::shared_ptr<const Jacobian> c, std::shared_ptr<const Jacobian> e, Fq zeta3);

  const Jacobian& curve() const { return *c_; }
  const Jacobian& elliptic() const { return *e_; }

  /// f(X), f'(X) for X on the defining model of C.
  Point f_push(const Point& x) const;
  Point fprime_push(const Point& x) const;
  /// Classes of f^*(P - O) and f'^*(Q - O) on the arithmetic model of C.
  Divisor f_pull(const Point& p) const;
  Divisor fprime_pull(const Point& q) const;
  /// Both preimage points of P under f, from square roots.
  std::vector<Point> f_preimage(const Point& p) const;

  Divisor mu(const EllipticPair& pq) const;
  EllipticPair mu_tilde(const Divisor& d, std::mt19937_64& rng) const;
  /// mu_tilde ∘ psi ∘ mu.
  EllipticPair T(const Endo& psi, const EllipticPair& pq, std::mt19937_64& rng) const;

  // Operations on E x E.
  Point to_point(const Divisor& d) const;
  Divisor from_point(const Point& p) const;
  EllipticPair add(const EllipticPair& a, const EllipticPair& b) const;
  EllipticPair mul(const BigInt& n, const EllipticPair& a) const;
  Divisor frobenius(const Divisor& p) const { return e_->frobenius(p); }
  /// (x, y) -> (zeta3 x, y).
  Divisor rho3(const Divisor& p) const;
  EllipticPair random_pair(std::mt19937_64& rng) const;

 private:
  Divisor push_split(const Divisor& d, bool prime) const;
  std::shared_ptr<const Jacobian> c_, e_;
  CurveIso iota_, iota_inv_;
  Fq zeta3_;
  Point w_;  // iota^-1 of the point at infinity
};

// ------------------------------------------------- r-torsion matrices --

using Mat4 = std::array<std::array<std::uint64_t, 4>, 4>;

/// Four classes spanning J[r], certified by an invertible Weil Gram matrix.
struct TorsionBasis {
  std::uint64_t r = 0;
  std::vector<Divisor> b;
  Fq g;  // generator of mu_r used for discrete logs
  Mat4 gram{}, gram_inv{};
};

/// Samples J[r] over the working field until the Gram matrix is invertible.
TorsionBasis certify_basis(const Jacobian& j, const BigInt& r, const GroupStructure& gs, std::mt19937_64& rng,
                           int tries = 32);

/// Column j holds the coordinates of e(B_j).
Mat4 endo_matrix_mod_r(const Jacobian& j, const Endo& e, const TorsionBasis& basis, std::mt19937_64& rng);

/// sum c_j B_j.
Divisor combine(const Jacobian& j, const TorsionBasis& basis, const std::array<std::uint64_t, 4>& c);

/// Coefficients (constant first) of det(T - M) mod r.
std::vector<std::uint64_t> charpoly_mod_r(const Mat4& m, std::uint64_t r);

/// Rank of the span of the given matrices in M_4(Z/r).
unsigned span_rank(const std::vector<Mat4>& ms, std::uint64_t r);

// -------------------------------------------------- distortion search --

enum class PairingKind { Tate, Weil };

Fq pairing_value(PairingKind k, const Jacobian& j, const Divisor& d1, const Divisor& d2, const BigInt& r,
                 std::mt19937_64& rng);

/// Index of the first catalog element psi with e(D1, psi(D2)) != 1.
std::optional<std::size_t> distortion_search(const Jacobian& j, const Divisor& d1, const Divisor& d2,
                                             const std::vector<Endo>& catalog, PairingKind k, const BigInt& r,
                                             std::mt19937_64& rng);

}  // namespace g2
