// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "g2/catalog.hpp"

#include <algorithm>

#include "g2/error.hpp"

namespace g2 {

std::string tag_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::K4: return "k4";
    case FamilyTag::K5: return "k5";
    case FamilyTag::K6: return "k6";
    case FamilyTag::K12: return "k12";
  }
  return "?";
}

FamilyTag parse_tag(const std::string& s) {
  if (s == "k4") return FamilyTag::K4;
  if (s == "k5") return FamilyTag::K5;
  if (s == "k6") return FamilyTag::K6;
  if (s == "k12") return FamilyTag::K12;
  throw DomainError("unknown family '" + s + "'");
}

std::string FamilyParams::to_string() const {
  switch (tag) {
    case FamilyTag::K4: return "k4 p=" + std::to_string(p) + " A=" + std::to_string(a);
    case FamilyTag::K5: return "k5 m=" + std::to_string(m) + " b=" + std::to_string(b);
    case FamilyTag::K6: return "k6 p=" + std::to_string(p);
    case FamilyTag::K12: return "k12 m=" + std::to_string(m) + " b=" + std::to_string(b);
  }
  return "?";
}

FamilyParams preset(FamilyTag t) {
  FamilyParams f;
  f.tag = t;
  switch (t) {
    case FamilyTag::K4: f.p = 7, f.a = 1; break;
    case FamilyTag::K5: f.m = 1, f.b = 1; break;
    case FamilyTag::K6: f.p = 11; break;
    case FamilyTag::K12: f.m = 5, f.b = 1; break;
  }
  return f;
}

std::vector<FamilyParams> preset_list() {
  std::vector<FamilyParams> out;
  for (std::int64_t p : {7, 13}) out.push_back({FamilyTag::K4, p, 0, 1, 0, 0});
  for (std::int64_t b : {1, -1}) out.push_back({FamilyTag::K5, 0, 1, 0, b, 0});
  for (std::int64_t p : {5, 11}) out.push_back({FamilyTag::K6, p, 0, 0, 0, 0});
  for (std::int64_t m : {5, 7})
    for (std::int64_t b : {0, 1}) out.push_back({FamilyTag::K12, 0, m, 0, b, 0});
  return out;
}

std::vector<unsigned> allowed_embedding_degrees(std::uint64_t p) {
  if (p == 2) return {1, 3, 6, 12};
  if (p == 3) return {1, 3, 4};
  if (p == 5) return {1, 3, 4, 5, 6};
  return {1, 3, 4, 6};
}

unsigned embedding_degree(const BigInt& r, const BigInt& q) { return multiplicative_order(q, r); }

BigInt select_r(const BigInt& n, std::uint64_t p) {
  BigInt best = 0;
  for (const auto& [f, e] : factor(n))
    if (f != 2 && f != 3 && f != p && f > best) best = f;
  if (best == 0) throw DomainError("select_r: no admissible prime factor of " + g2::to_string(n));
  return best;
}

CurveIso build_sigma_omega(const Fq& omega, const HyperellipticModel& m) {
  const Field* F = omega.field();
  if (!F->binary()) throw DomainError("sigma_omega: characteristic 2 required");
  const Fq w2 = omega.square(), w4 = w2.square(), w8 = w4.square();
  if (!(w8.square() + w8 + w2 + omega).is_zero()) throw DomainError("sigma_omega: omega is not a root of x^16+x^8+x^2+x");
  const Fq s2 = w8 + w4 + omega, s1 = w4 + w2;
  const auto s0 = F->solve_artin_schreier(w4 * omega + w2 * omega);
  if (!s0) throw Error("sigma_omega: Artin-Schreier equation has no root");
  CurveIso iso{F->one(), omega, F->zero(), F->one(), F->one(), Poly(F, {*s0, s1, s2})};
  check_automorphism(iso, m, 20);
  return iso;
}

Endo FamilyInstance::conj(const Endo& e) const {
  if (!to_twist) throw DomainError("conj: not an embedding-degree-6 instance");
  if (e.is_identity()) return e;
  return Endo::conjugated("phi", jac_c, *to_twist, e);
}

namespace {

HyperellipticModel model_over(const FieldPtr& F, std::initializer_list<std::int64_t> h,
                              std::initializer_list<std::int64_t> f) {
  return HyperellipticModel(F, Poly::from_ints(F.get(), h), Poly::from_ints(F.get(), f));
}

// Smallest root in the working field of a polynomial given low degree first.
Fq smallest_root(const FieldPtr& F, const std::vector<Fq>& c) {
  const auto roots = find_roots(Poly(F.get(), c));
  if (roots.empty()) throw Error("no root in the working field");
  return roots.front();
}

// T^4 + s c3 T^3 + c2 T^2 + s c1 T + c0.
IntPoly signed_quartic(int s, const BigInt& c3, const BigInt& c2, const BigInt& c1, const BigInt& c0) {
  return IntPoly({c0, s * c1, c2, s * c3, 1});
}

}  // namespace

std::pair<IntPoly, IntPoly> charpoly_candidates(FamilyTag t, unsigned m) {
  if (m % 2 == 0) throw DomainError("charpoly_candidates: m must be odd");
  const std::uint64_t p = t == FamilyTag::K5 ? 5 : t == FamilyTag::K12 ? 2 : 0;
  if (!p) throw DomainError("charpoly_candidates: only the k5 and k12 families have two sign candidates");
  const BigInt q = ipow(BigInt(p), m);
  const BigInt c3 = ipow(BigInt(p), (m + 1) / 2), c1 = ipow(BigInt(p), (3 * m + 1) / 2);
  const BigInt c2 = t == FamilyTag::K5 ? 3 * q : q;
  return {signed_quartic(1, c3, c2, c1, q * q), signed_quartic(-1, c3, c2, c1, q * q)};
}

namespace {

void check_params(const FamilyParams& f) {
  switch (f.tag) {
    case FamilyTag::K4:
      if (f.p <= 2 || !is_prime(f.p)) throw DomainError("k4: p must be an odd prime");
      if (f.p % 5 == 1) throw DomainError("k4: p = 1 mod 5 gives an ordinary Jacobian");
      if (f.p % 5 == 4) throw DomainError("k4: p = 4 mod 5 gives a supersingular but not simple Jacobian");
      if (f.p % 5 == 0) throw DomainError("k4: p = 5 is excluded");
      if (f.a % f.p == 0) throw DomainError("k4: A must be nonzero mod p");
      break;
    case FamilyTag::K5:
      if (f.m <= 0 || f.m % 2 == 0 || f.m % 5 == 0) throw DomainError("k5: m must be coprime to 10");
      if (f.b != 1 && f.b != -1) throw DomainError("k5: b must be +1 or -1");
      break;
    case FamilyTag::K6:
      if (f.p < 5 || f.p % 3 != 2 || !is_prime(f.p)) throw DomainError("k6: p must be a prime with p = 2 mod 3, p >= 5");
      break;
    case FamilyTag::K12:
      if (f.m <= 0 || (f.m % 6 != 1 && f.m % 6 != 5)) throw DomainError("k12: m must be +-1 mod 6");
      if (f.b != 0 && f.b != 1) throw DomainError("k12: b must be 0 or 1");
      break;
  }
}

// Picks the sign candidate that annihilates every sample.
void resolve_sign(FamilyInstance& inst, const IntPoly& plus, const IntPoly& minus) {
  std::mt19937_64 rng(0x5eed);
  bool ok_p = true, ok_m = true;
  for (int i = 0; i < 5; ++i) {
    const Divisor d = inst.jac->random_divisor(inst.jac->max_degree(), rng);
    ok_p = ok_p && apply_charpoly(*inst.jac, plus, d).is_identity();
    ok_m = ok_m && apply_charpoly(*inst.jac, minus, d).is_identity();
  }
  if (ok_p == ok_m) throw Error("sign resolution failed for " + inst.params.to_string());
  inst.sign = ok_p ? 1 : -1;
  inst.charpoly = ok_p ? plus : minus;
  inst.rejected_charpoly = ok_p ? minus : plus;
}

void check_charpoly(const FamilyInstance& inst) {
  std::mt19937_64 rng(0xc4a2);
  for (int i = 0; i < 5; ++i)
    if (!apply_charpoly(*inst.jac, inst.charpoly, inst.jac->random_divisor(inst.jac->max_degree(), rng)).is_identity())
      throw Error("characteristic polynomial check failed for " + inst.params.to_string());
}

void build_k4(FamilyInstance& inst) {
  const auto p = static_cast<std::uint64_t>(inst.params.p);
  inst.p = p;
  inst.q_exp = 1;
  inst.claimed_k = 4;
  inst.work = Field::build(p, inst.params.work_degree ? inst.params.work_degree : 8);
  const Field* W = inst.work.get();
  const std::int64_t a = ((inst.params.a % inst.params.p) + inst.params.p) % inst.params.p;
  inst.jac = std::make_shared<Jacobian>(
      HyperellipticModel(inst.work, Poly(W), Poly(W, {W->from_int(a), W->zero(), W->zero(), W->zero(), W->zero(), W->one()})),
      1);
  inst.charpoly = IntPoly({BigInt(p * p), 0, 0, 0, 1});
  check_charpoly(inst);
  const Fq z5 = W->root_of_unity(5);
  inst.constants["zeta5"] = z5;
  const Endo pi = Endo::frobenius(1);
  const Endo rho5 = Endo::automorphism("rho5", CurveIso::mobius(z5, W->zero(), W->zero(), W->one(), W->one()), *inst.jac);
  inst.gens.emplace("pi", pi);
  inst.gens.emplace("rho5", rho5);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) inst.distortion.push_back(pi.pow(i) * rho5.pow(j));
}

void build_k5(FamilyInstance& inst) {
  const auto m = static_cast<unsigned>(inst.params.m);
  const std::int64_t b = inst.params.b;
  inst.p = 5;
  inst.q_exp = m;
  inst.claimed_k = 5;
  inst.work = Field::build(5, m * (inst.params.work_degree ? inst.params.work_degree : 10));
  const FieldPtr& F = inst.work;
  const Field* W = F.get();
  inst.jac = std::make_shared<Jacobian>(model_over(F, {}, {b, -1, 0, 0, 0, 1}), m);
  const auto [plus, minus] = charpoly_candidates(FamilyTag::K5, m);
  resolve_sign(inst, plus, minus);
  const Fq rho = smallest_root(F, {W->from_int(2 * b), -W->one(), W->zero(), W->zero(), W->zero(), W->one()});
  const Fq alpha = smallest_root(F, {W->from_int(b), -W->one(), W->zero(), W->zero(), W->zero(), W->one()});
  const auto beta = W->sqrt(W->from_int(2));
  if (!beta) throw Error("k5: 2 is not a square in the working field");
  inst.constants["rho"] = rho;
  inst.constants["alpha"] = alpha;
  inst.constants["beta"] = *beta;
  const Endo pi = Endo::frobenius(1);
  const Endo psi = Endo::automorphism("psi", CurveIso{-W->one(), rho, W->zero(), W->one(), W->from_int(2), Poly(W)}, *inst.jac);
  const Endo phi = Endo::automorphism("phi", CurveIso{W->from_int(2), -alpha, W->zero(), W->one(), *beta, Poly(W)}, *inst.jac);
  inst.gens.emplace("pi", pi);
  inst.gens.emplace("psi", psi);
  inst.gens.emplace("phi", phi);
  for (unsigned u = 0; u < 4; ++u)
    for (unsigned v = 0; v < 2; ++v)
      for (unsigned w = 0; w < 2; ++w) inst.distortion.push_back(pi.pow(u) * psi.pow(v) * phi.pow(w));
}

void build_k6(FamilyInstance& inst) {
  const auto p = static_cast<std::uint64_t>(inst.params.p);
  inst.p = p;
  inst.q_exp = 1;
  inst.claimed_k = 6;
  inst.twist = construct_twist(p);
  const TwistData& tw = *inst.twist;
  inst.work = Field::build(p, inst.params.work_degree ? inst.params.work_degree : 12);
  const FieldPtr& F = inst.work;
  const Field* W = F.get();
  const TowerEmbedding from_base(tw.base, F), from_sextic(tw.sextic, F);

  // Arithmetic models x' = 1/(x - alpha) for both sextic models.
  const auto arith_iso = [&](const HyperellipticModel& m) {
    const Fq alpha = find_roots(m.f()).front();
    return CurveIso{W->zero(), W->one(), W->one(), -alpha, W->one(), Poly(W)};
  };
  const HyperellipticModel def_twist = tw.model.base_change(from_base);
  const CurveIso iota_t = arith_iso(def_twist);
  inst.jac = std::make_shared<Jacobian>(def_twist, 1, iota_t);
  const HyperellipticModel def_c = model_over(F, {}, {1, 0, 0, 0, 0, 0, 1});
  const CurveIso iota_c = arith_iso(def_c);
  inst.jac_c = std::make_shared<Jacobian>(def_c, 1, iota_c);
  inst.jac_e = std::make_shared<Jacobian>(model_over(F, {}, {1, 0, 0, 1}), 1);

  const CurveIso phi = tw.phi.map(W, [&](const Fq& c) { return from_sextic(c); });
  if (!(phi.transform(def_twist) == def_c)) throw Error("k6: twist isomorphism does not reach y^2 = x^6 + 1");
  inst.to_twist = iota_t.inverse().then(phi).then(iota_c).inverse();

  inst.charpoly = IntPoly({BigInt(p * p), 0, -BigInt(p), 0, 1});
  check_charpoly(inst);

  const Fq z6 = from_sextic(tw.zeta6), z3 = z6.square();
  inst.constants["zeta6"] = z6;
  inst.constants["zeta3"] = z3;
  inst.constants["gamma"] = from_sextic(tw.gamma);
  for (const auto& [name, v] : {std::pair{"a", tw.a}, {"b", tw.b}, {"c", tw.c}, {"d", tw.d}})
    inst.constants[name] = from_sextic(v);
  inst.split = std::make_shared<SplitMaps>(inst.jac_c, inst.jac_e, z3);

  const Fq O = W->zero(), I = W->one();
  const Jacobian& jc = *inst.jac_c;
  const Endo pi_c = Endo::frobenius(1);
  const Endo chi = Endo::automorphism("chi", to_arithmetic(jc, CurveIso{O, I, I, O, I, Poly(W)}), jc);
  const Endo rho6 = Endo::automorphism("rho6", to_arithmetic(jc, CurveIso::mobius(z6, O, O, I, I)), jc);
  const Endo u = Endo::automorphism("u", to_arithmetic(jc, CurveIso{O, z3, I, O, I, Poly(W)}), jc);
  inst.inner.emplace("pi", pi_c);
  inst.inner.emplace("chi", chi);
  inst.inner.emplace("rho6", rho6);
  inst.inner.emplace("u", u);
  inst.gens.emplace("pi", Endo::frobenius(1));
  for (const auto& [name, e] : inst.inner) inst.gens.emplace("conj_" + name, inst.conj(e));

  for (unsigned i = 0; i < 2; ++i)
    for (unsigned a = 0; a < 2; ++a)
      for (unsigned b = 0; b < 6; ++b) inst.distortion.push_back(inst.conj(pi_c.pow(i) * chi.pow(a) * rho6.pow(b)));
  const Endo one = Endo::identity(), r3 = rho6.pow(3), cr3 = chi * r3;
  for (const Endo& e : {one + r3, one - r3, chi + cr3, chi - cr3}) inst.distortion.push_back(inst.conj(e));
}

void build_k12(FamilyInstance& inst) {
  const auto m = static_cast<unsigned>(inst.params.m);
  inst.p = 2;
  inst.q_exp = m;
  inst.claimed_k = 12;
  inst.work = Field::build(2, m * (inst.params.work_degree ? inst.params.work_degree : 24));
  const FieldPtr& F = inst.work;
  const Field* W = F.get();
  inst.jac = std::make_shared<Jacobian>(model_over(F, {1}, {inst.params.b, 0, 0, 1, 0, 1}), m);
  const auto [plus, minus] = charpoly_candidates(FamilyTag::K12, m);
  resolve_sign(inst, plus, minus);

  const Fq tau = smallest_root(F, Poly::from_ints(W, {1, 0, 1, 1, 0, 1, 1}).coeffs());
  const Fq t2 = tau.square(), t4 = t2.square();
  const Fq theta = t4 + t2 + tau, xi = t4 + t2, rho = t2 + tau + W->one();
  inst.constants["tau"] = tau;
  inst.constants["theta"] = theta;
  inst.constants["xi"] = xi;
  inst.constants["rho"] = rho;
  const Endo pi = Endo::frobenius(1);
  inst.gens.emplace("pi", pi);
  std::vector<Endo> sig{Endo::identity()};
  for (const auto& [name, w] : {std::pair{"sigma_tau", tau}, {"sigma_theta", theta}, {"sigma_xi", xi}}) {
    const Endo s = Endo::automorphism(name, build_sigma_omega(w, inst.jac->model()), *inst.jac);
    inst.gens.emplace(name, s);
    sig.push_back(s);
  }
  for (unsigned i = 0; i < 4; ++i)
    for (const Endo& s : sig) inst.distortion.push_back(pi.pow(i) * s);
}

}  // namespace

FamilyInstance build_family(const FamilyParams& params) {
  check_params(params);
  FamilyInstance inst;
  inst.params = params;
  switch (params.tag) {
    case FamilyTag::K4: build_k4(inst); break;
    case FamilyTag::K5: build_k5(inst); break;
    case FamilyTag::K6: build_k6(inst); break;
    case FamilyTag::K12: build_k12(inst); break;
  }
  inst.q = ipow(BigInt(inst.p), inst.q_exp);
  inst.base_group = group_structure(inst.charpoly, 1);
  inst.work_group = group_structure(inst.charpoly, inst.jac->max_degree());
  inst.order = inst.base_group.order;
  inst.r = select_r(inst.order, inst.p);
  inst.k = embedding_degree(inst.r, inst.q);
  if (inst.k != inst.claimed_k)
    throw Error("embedding degree " + std::to_string(inst.k) + " differs from the claimed " +
                std::to_string(inst.claimed_k) + " for " + params.to_string());
  const auto allowed = allowed_embedding_degrees(inst.p);
  if (std::find(allowed.begin(), allowed.end(), inst.k) == allowed.end())
    throw Error("embedding degree not allowed in this characteristic");
  return inst;
}

Divisor random_torsion(const FamilyInstance& inst, unsigned deg, std::mt19937_64& rng) {
  const auto d = random_order_r(*inst.jac, inst.r, inst.group(deg), deg, rng);
  if (!d) throw Error("no order-r class over the requested extension");
  return *d;
}

Divisor random_trace_zero(const FamilyInstance& inst, std::mt19937_64& rng) {
  const Jacobian& j = *inst.jac;
  for (int t = 0; t < 32; ++t) {
    const Divisor d = random_torsion(inst, inst.k, rng);
    const Divisor z = j.sub(j.mul(inst.k, d), j.trace(d, inst.k));
    if (!z.is_identity()) return z;
  }
  throw Error("no nonzero trace-zero class found");
}

}  // namespace g2
