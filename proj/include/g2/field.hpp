// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Finite fields F_{p^n} = F_p[x]/(m(x)) with dense coefficient storage.
//
// Odd characteristic stores one coefficient per limb; characteristic two
// packs coefficients as bits.  Elements hold a non-owning pointer to their
// Field, so a Field must outlive every element created from it (owners keep
// a FieldPtr).

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "g2/bigint.hpp"

namespace g2 {

inline constexpr std::size_t kMaxLimbs = 24;

/// Largest supported characteristic (products of two residues stay < 2^40).
inline constexpr std::uint64_t kMaxCharacteristic = 1u << 20;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of a finite field.  Immutable value semantics; all arithmetic
/// requires both operands to come from the same Field.
class Fq {
 public:
  Fq() = default;

  const Field* field() const { return f_; }
  bool valid() const { return f_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  /// Coefficient of x^i in the polynomial-basis representation.
  std::uint64_t coeff(std::size_t i) const;
  /// All n coefficients, little-endian by degree.
  std::vector<std::uint64_t> coeffs() const;

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const;
  Fq operator-() const;
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
  Fq& operator/=(const Fq& o) { return *this = *this / o; }

  Fq square() const;
  Fq inv() const;
  Fq pow(const BigInt& e) const;
  Fq pow(std::uint64_t e) const;
  Fq frobenius(unsigned j = 1) const;

  bool operator==(const Fq& o) const;
  /// Lexicographic on (c0, c1, ..., c_{n-1}); the constant term is most
  /// significant.
  std::strong_ordering operator<=>(const Fq& o) const;

  std::size_t hash() const;

 private:
  friend class Field;
  const Field* f_ = nullptr;
  std::array<std::uint64_t, kMaxLimbs> w_{};
};

/// Field parameters (p, n, modulus) plus precomputed tables.
class Field {
 public:
  /// F_{p^n} with the lexicographically-first monic irreducible modulus.
  static FieldPtr build(std::uint64_t p, unsigned n);
  /// F_{p^n} with an explicit modulus (monic, little-endian, length n+1).
  static FieldPtr with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  /// Coefficients c0..cn of the modulus (cn = 1).
  const std::vector<std::uint64_t>& modulus() const { return mod_; }
  /// Field size p^n.
  const BigInt& order() const { return order_; }
  bool binary() const { return p_ == 2; }

  /// Value equality of (p, n, modulus).
  bool same_spec(const Field& o) const;

  Fq zero() const;
  Fq one() const;
  Fq from_int(std::int64_t v) const;
  Fq from_coeffs(std::span<const std::uint64_t> c) const;
  /// Residue class of x.
  Fq gen() const;
  /// Element whose base-p digits (c0 most significant) spell `index`.
  Fq element_at(const BigInt& index) const;
  Fq random(std::mt19937_64& rng) const;

  /// a^(p^j).
  Fq frobenius(const Fq& a, unsigned j) const;
  /// Square root choosing the lexicographically smaller root, or nullopt.
  std::optional<Fq> sqrt(const Fq& a) const;
  bool is_square(const Fq& a) const;
  /// Root of s^2 + s = c (characteristic 2 only), the smaller of {s, s+1}.
  std::optional<Fq> solve_artin_schreier(const Fq& c) const;
  /// Absolute trace to F_p, as an integer residue.
  std::uint64_t absolute_trace(const Fq& a) const;
  /// g^((p^n - 1)/order) for the first g (in element_at order) giving an
  /// element of exact multiplicative order `order`.
  Fq root_of_unity(const BigInt& order) const;
  /// True when a has multiplicative order exactly `order`.
  bool has_exact_order(const Fq& a, const BigInt& order) const;

  /// `{p: .., n: .., modulus: [..]}`.
  std::string to_text() const;
  std::string format(const Fq& a) const;

  // Raw arithmetic used by Fq.
  void add(const Fq& a, const Fq& b, Fq& out) const;
  void sub(const Fq& a, const Fq& b, Fq& out) const;
  void mul(const Fq& a, const Fq& b, Fq& out) const;
  void sqr(const Fq& a, Fq& out) const;
  void neg(const Fq& a, Fq& out) const;
  void inv(const Fq& a, Fq& out) const;

  Field(std::uint64_t p, std::vector<std::uint64_t> modulus);

 private:
  Fq make() const;
  void check(const Fq& a) const;
  void init_tables();
  std::size_t words() const { return binary() ? (n_ + 63) / 64 : n_; }

  std::uint64_t p_;
  unsigned n_;
  std::vector<std::uint64_t> mod_;
  std::array<std::uint64_t, kMaxLimbs> mod_low_{};  // bit-packed m(x) - x^n
  BigInt order_;
  // Odd characteristic: Tonelli-Shanks data (order - 1 = 2^s * t).
  unsigned ts_s_ = 0;
  BigInt ts_t_;
  std::array<std::uint64_t, kMaxLimbs> ts_z_{};  // nonresidue^t
  // Characteristic 2: XOR basis solving y^2 + y = c.
  struct AsRow {
    std::array<std::uint64_t, kMaxLimbs> image{};
    std::array<std::uint64_t, kMaxLimbs> preimage{};
    unsigned pivot = 0;
  };
  std::vector<AsRow> as_rows_;
};

/// Ring embedding of one field into another of the same characteristic,
/// determined by the image of the source generator.
class TowerEmbedding {
 public:
  /// Uses the lexicographically smallest root of source.modulus in target.
  TowerEmbedding(FieldPtr source, FieldPtr target);
  TowerEmbedding(FieldPtr source, FieldPtr target, Fq image_of_generator);

  const FieldPtr& source() const { return src_; }
  const FieldPtr& target() const { return dst_; }
  const Fq& image_of_generator() const { return img_; }

  Fq operator()(const Fq& a) const;

 private:
  FieldPtr src_, dst_;
  Fq img_;
  std::vector<Fq> powers_;
};

/// Primality check for the small characteristic values used here.
bool is_small_prime(std::uint64_t p);

/// Deterministic irreducibility test for monic polynomials over F_p
/// (coefficients little-endian).
bool is_irreducible_mod_p(std::uint64_t p, const std::vector<std::uint64_t>& poly);

}  // namespace g2

template <>
struct std::hash<g2::Fq> {
  std::size_t operator()(const g2::Fq& a) const noexcept { return a.hash(); }
};
