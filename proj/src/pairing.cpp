// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "g2/pairing.hpp"

#include <cmath>
#include <unordered_map>

#include "g2/error.hpp"

namespace g2 {
namespace {

constexpr int kRetryLimit = 256;

FnValue square(const FnValue& a) { return {a.num.square(), a.den.square()}; }

// Reduced class of genus-many random affine points, with a support that
// splits into affine points.
struct Randomizer {
  Divisor cls;
  EvalDivisor support;
};

Randomizer random_randomizer(const HyperellipticModel& m, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Divisor r = identity_divisor(m);
    for (int i = 0; i < m.genus(); ++i) r = cantor_add(m, r, point_divisor(m, random_affine_point(m, rng)));
    if (r.u.degree() != m.genus()) continue;
    const auto s = to_support(m, r);
    return {r, s.points};
  }
  throw Error("could not sample a randomizing divisor");
}

// D + R = S + div(g): returns S's affine support (or nullopt when S does not
// split over the field), and multiplies `g_acc` by g(ev) when requested.
std::optional<EvalDivisor> shifted_support(const HyperellipticModel& m, const Divisor& d, const Randomizer& r,
                                           const EvalDivisor* ev, FnValue* g_acc) {
  const Divisor s = cantor_add(m, d, r.cls, ev, g_acc);
  if (s.is_identity() || roots_deg2(s.u).empty()) return std::nullopt;
  const auto sup = to_support(m, s);
  EvalDivisor out = sup.points;
  for (const auto& [p, n] : r.support) out.push_back({p, -n});
  return out;
}

}  // namespace

FnValue miller_eval(const HyperellipticModel& m, const Divisor& d, const BigInt& r, const EvalDivisor& ev) {
  const Field* F = m.field().get();
  FnValue f = FnValue::one(F);
  if (ev.empty()) {
    if (!scalar_mul(m, r, d).is_identity()) throw DomainError("miller_eval: divisor not killed by r");
    return f;
  }
  if (r <= 0) throw DomainError("miller_eval: r must be positive");
  Divisor t = d;
  const auto top = boost::multiprecision::msb(r);
  for (std::size_t i = top; i-- > 0;) {
    f = square(f);
    t = cantor_add(m, t, t, &ev, &f);
    if (boost::multiprecision::bit_test(r, i)) t = cantor_add(m, t, d, &ev, &f);
  }
  if (!t.is_identity()) throw DomainError("miller_eval: divisor not killed by r");
  return f;
}

Point random_affine_point(const HyperellipticModel& m, std::mt19937_64& rng) {
  const Field* F = m.field().get();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto pts = m.lift_x(F->random(rng));
    if (!pts.empty()) return pts[rng() % pts.size()];
  }
  throw Error("random_affine_point: no point found");
}

Fq tate_pairing(const HyperellipticModel& m, const Divisor& d1, const Divisor& d2, const BigInt& r,
                std::mt19937_64& rng) {
  const Field* F = m.field().get();
  if (!scalar_mul(m, r, d1).is_identity()) throw DomainError("tate_pairing: first argument not of order dividing r");
  if (d1.is_identity() || d2.is_identity()) return F->one();
  const BigInt exp = (F->order() - 1) / r;
  for (int attempt = 0; attempt < kRetryLimit; ++attempt) {
    const Randomizer rr = random_randomizer(m, rng);
    const auto ev = shifted_support(m, d2, rr, nullptr, nullptr);
    if (!ev) continue;
    try {
      return miller_eval(m, d1, r, *ev).value().pow(exp);
    } catch (const SupportCollision&) {
    }
  }
  throw SupportCollision();
}

Fq weil_pairing(const HyperellipticModel& m, const Divisor& d1, const Divisor& d2, const BigInt& r,
                std::mt19937_64& rng) {
  const Field* F = m.field().get();
  if (d1.is_identity() || d2.is_identity()) return F->one();
  for (int attempt = 0; attempt < kRetryLimit; ++attempt) {
    const Randomizer r1 = random_randomizer(m, rng), r2 = random_randomizer(m, rng);
    try {
      // Supports first, then the correction functions evaluated on them.
      const auto a = shifted_support(m, d1, r1, nullptr, nullptr);
      const auto b = shifted_support(m, d2, r2, nullptr, nullptr);
      if (!a || !b) continue;
      FnValue g1 = FnValue::one(F), g2 = FnValue::one(F);
      shifted_support(m, d1, r1, &*b, &g1);
      shifted_support(m, d2, r2, &*a, &g2);
      const Fq f1 = miller_eval(m, d1, r, *b).value();
      const Fq f2 = miller_eval(m, d2, r, *a).value();
      return f1 * g2.value().pow(r) / (f2 * g1.value().pow(r));
    } catch (const SupportCollision&) {
    }
  }
  throw SupportCollision();
}

BigInt dlog_mu_r(const Fq& g, const Fq& h, const BigInt& r) {
  if (g.is_one()) throw DomainError("dlog_mu_r: base is 1");
  if (r > BigInt(1) << 40) throw DomainError("dlog_mu_r: r too large");
  const auto rr = static_cast<std::uint64_t>(r);
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(rr))));
  std::unordered_map<Fq, std::uint64_t> baby;
  Fq cur = g.field()->one();
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur *= g;
  }
  const Fq giant = g.pow(BigInt(rr - (m % rr)) % rr);  // g^-m
  Fq gamma = h;
  for (std::uint64_t i = 0; i <= m; ++i) {
    const auto it = baby.find(gamma);
    if (it != baby.end()) return BigInt((i * m + it->second) % rr);
    gamma *= giant;
  }
  throw DomainError("dlog_mu_r: no solution");
}

}  // namespace g2
