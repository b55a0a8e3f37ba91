// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

// The four supersingular genus-2 families with their fields, Frobenius
// characteristic polynomials, group orders and distortion sets.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "g2/endo.hpp"

namespace g2 {

enum class FamilyTag { K4, K5, K6, K12 };

std::string tag_name(FamilyTag t);
/// Accepts "k4", "k5", "k6", "k12"; throws DomainError otherwise.
FamilyTag parse_tag(const std::string& s);

/// k4: y^2 = x^5 + A over F_p.  k5: y^2 = x^5 - x + b over F_{5^m}.
/// k6: twist of y^2 = x^6 + 1 over F_p.  k12: y^2 + y = x^5 + x^3 + b over F_{2^m}.
struct FamilyParams {
  FamilyTag tag = FamilyTag::K4;
  std::int64_t p = 0;  // k4, k6
  std::int64_t m = 0;  // k5, k12
  std::int64_t a = 0;  // k4: A
  std::int64_t b = 0;  // k5: +-1, k12: 0 or 1
  /// Working field degree over F_q; 0 selects the family default.
  unsigned work_degree = 0;

  std::string to_string() const;
};

FamilyParams preset(FamilyTag t);
/// The desk-scale instances exercised by the acceptance suite.
std::vector<FamilyParams> preset_list();

/// Embedding degrees allowed for simple supersingular abelian surfaces in
/// characteristic p.
std::vector<unsigned> allowed_embedding_degrees(std::uint64_t p);

/// (P+, P-): T^4 +- c3 T^3 + c2 T^2 +- c1 T + q^2 for the k5 (q = 5^m) and
/// k12 (q = 2^m) families, m odd.
std::pair<IntPoly, IntPoly> charpoly_candidates(FamilyTag t, unsigned m);

/// Multiplicative order of q modulo r.
unsigned embedding_degree(const BigInt& r, const BigInt& q);

/// Largest prime factor of n coprime to 2, 3 and p.
BigInt select_r(const BigInt& n, std::uint64_t p);

/// sigma_omega: (x, y) -> (x + omega, y + s2 x^2 + s1 x + s0) on
/// y^2 + y = x^5 + x^3 + b, with s0 the smaller Artin-Schreier root.
CurveIso build_sigma_omega(const Fq& omega, const HyperellipticModel& m);

struct FamilyInstance {
  FamilyParams params;
  std::uint64_t p = 0;
  unsigned q_exp = 1;
  BigInt q;
  FieldPtr work;
  std::shared_ptr<const Jacobian> jac;

  IntPoly charpoly;
  /// The other sign candidate for families with P^+- (empty otherwise).
  std::optional<IntPoly> rejected_charpoly;
  int sign = 0;  // +1 / -1 for P^+- families, 0 otherwise

  GroupStructure base_group, work_group;
  BigInt order, r;
  unsigned claimed_k = 0, k = 0;

  std::vector<Endo> distortion;
  /// Named generators acting on jac (pi, rho5, psi, phi, sigma_tau, ...).
  std::map<std::string, Endo> gens;
  std::map<std::string, Fq> constants;

  // Embedding degree 6: y^2 = x^6 + 1, E: y^2 = x^3 + 1 and the twist.
  std::optional<TwistData> twist;
  std::shared_ptr<const Jacobian> jac_c, jac_e;
  std::shared_ptr<const SplitMaps> split;
  /// Arithmetic model of C to that of the twist.
  std::optional<CurveIso> to_twist;
  /// pi_C, chi, rho6, u on Jac(C).
  std::map<std::string, Endo> inner;

  /// Conjugates an endomorphism of Jac(C) to the twist.
  Endo conj(const Endo& e) const;
  /// Group structure of J(F_{q^deg}).
  GroupStructure group(unsigned deg) const { return group_structure(charpoly, deg); }
};

FamilyInstance build_family(const FamilyParams& params);

/// Random element of order r in J(F_{q^deg}).
Divisor random_torsion(const FamilyInstance& inst, unsigned deg, std::mt19937_64& rng);
/// Random nonzero order-r class over F_{q^k} with trivial trace to F_q.
Divisor random_trace_zero(const FamilyInstance& inst, std::mt19937_64& rng);

}  // namespace g2
