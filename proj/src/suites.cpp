// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "g2/suites.hpp"

#include <algorithm>

#include "g2/error.hpp"
#include "g2/pairing.hpp"

namespace g2 {

namespace {

json big_json(const BigInt& n) {
  if (n >= BigInt(INT64_MIN) && n <= BigInt(INT64_MAX)) return static_cast<std::int64_t>(n);
  return to_string(n);
}

json intpoly_json(const IntPoly& p) {
  json out = json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(big_json(p.coeff(i)));
  return out;
}

// Coefficients in the prime field print as integers, others as coefficient lists.
std::string poly_text(const Poly& p) {
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    const Fq c = p.coeff(i);
    if (c.is_zero()) continue;
    const auto cs = c.coeffs();
    const bool prime = std::all_of(cs.begin() + 1, cs.end(), [](std::uint64_t v) { return v == 0; });
    std::string coef = prime ? std::to_string(cs[0]) : json(cs).dump();
    if (!s.empty()) s += " + ";
    if (i == 0) s += coef;
    else s += (c.is_one() ? "" : coef + "*") + (i == 1 ? std::string("x") : "x^" + std::to_string(i));
  }
  return s.empty() ? "0" : s;
}

std::string model_text(const HyperellipticModel& m) {
  std::string s = "y^2";
  if (const std::string h = poly_text(m.h()); h == "1") s += " + y";
  else if (h != "0") s += " + (" + h + ")*y";
  return s + " = " + poly_text(m.f());
}

json pair_json(const EllipticPair& pq) { return {{"P", divisor_to_json(pq.first)}, {"Q", divisor_to_json(pq.second)}}; }

Check make(std::string name, bool pass, json witness = json::object()) { return {std::move(name), pass, std::move(witness)}; }

// Counts samples on which `ok` fails and keeps the first failing input.
template <class Sample, class Ok>
Check count_check(std::string name, int n, Sample sample, Ok ok) {
  int fails = 0;
  json first;
  for (int t = 0; t < n; ++t) {
    auto x = sample();
    if (!ok(x)) {
      if (!fails) first = x.second;
      ++fails;
    }
  }
  json w = {{"samples", n}, {"failures", fails}};
  if (fails) w["first_failure"] = first;
  return make(std::move(name), fails == 0, std::move(w));
}

Check agree_check(std::string name, const Jacobian& j, const Endo& a, const Endo& b, int n, std::mt19937_64& rng) {
  int fails = 0;
  json first;
  for (int t = 0; t < n; ++t) {
    const Divisor d = j.random_divisor(j.max_degree(), rng);
    if (a.apply(j, d) != b.apply(j, d)) {
      if (!fails) first = divisor_to_json(d);
      ++fails;
    }
  }
  json w = {{"lhs", a.name()}, {"rhs", b.name()}, {"samples", n}, {"failures", fails}};
  if (fails) w["first_failure"] = first;
  return make(std::move(name), fails == 0, std::move(w));
}

std::vector<Check> suite_charpoly(const FamilyInstance& inst, int n, std::mt19937_64& rng) {
  const Jacobian& j = *inst.jac;
  std::vector<Check> out;
  int fails = 0, rejected_nonzero = 0;
  json first;
  for (int t = 0; t < n; ++t) {
    const Divisor d = j.random_divisor(j.max_degree(), rng);
    if (!apply_charpoly(j, inst.charpoly, d).is_identity()) {
      if (!fails) first = divisor_to_json(d);
      ++fails;
    }
    if (inst.rejected_charpoly && !apply_charpoly(j, *inst.rejected_charpoly, d).is_identity()) ++rejected_nonzero;
  }
  json w = {{"charpoly", intpoly_json(inst.charpoly)}, {"samples", n}, {"failures", fails}};
  if (fails) w["first_failure"] = first;
  out.push_back(make("charpoly_annihilates", fails == 0, w));
  if (inst.rejected_charpoly)
    out.push_back(make("rejected_sign_fails", rejected_nonzero > 0,
                       {{"sign", inst.sign},
                        {"rejected", intpoly_json(*inst.rejected_charpoly)},
                        {"samples_not_annihilated", rejected_nonzero}}));
  out.push_back(count_check("rational_order_annihilates", n, [&] {
    const Divisor d = j.random_divisor(1, rng);
    return std::pair{d, divisor_to_json(d)};
  }, [&](const auto& x) { return j.mul(inst.order, x.first).is_identity(); }));
  return out;
}

std::vector<Check> suite_commutation(const FamilyInstance& inst, int n, std::mt19937_64& rng) {
  const Jacobian& j = *inst.jac;
  const Endo pi = inst.gens.at("pi"), rho = inst.gens.at("rho5");
  std::vector<Check> out;
  out.push_back(agree_check("rho5_order_five", j, rho.pow(5), Endo::identity(), n, rng));
  unsigned e = 1;
  for (unsigned k = 1; k <= 3; ++k) {
    e = e * static_cast<unsigned>(inst.p % 5) % 5;
    out.push_back(agree_check("frobenius_power_" + std::to_string(k), j, pi.pow(k) * rho, rho.pow(e) * pi.pow(k), n, rng));
  }
  return out;
}

std::vector<Check> suite_sigma(const FamilyInstance& inst, int n, std::mt19937_64& rng) {
  const Jacobian& j = *inst.jac;
  const Field* W = j.field().get();
  const auto& m = j.model();
  std::vector<Fq> c(17, W->zero());
  c[1] = c[2] = c[8] = c[16] = W->one();
  auto roots = find_roots(Poly(W, c));
  std::vector<Check> out;
  out.push_back(make("root_space_size", roots.size() == 16, {{"roots", roots.size()}}));
  const auto sigma = [&](const Fq& w) { return Endo::automorphism("sigma", build_sigma_omega(w, m), j); };
  out.push_back(make("sigma_tau_squared_minus_one",
                     relation_sign(j, inst.gens.at("sigma_tau").pow(2), Endo::identity(), n, rng) == -1,
                     {{"samples", n}}));
  const Endo pi = Endo::frobenius(1);
  const int pairs = 10;
  json rows = json::array();
  bool ok = true;
  for (int t = 0; t < pairs && roots.size() == 16; ++t) {
    const Fq a = roots[rng() % 16], b = roots[rng() % 16];
    const Endo sa = sigma(a), sb = sigma(b);
    const int add = relation_sign(j, sa * sb, sigma(a + b), n, rng);
    const int comm = relation_sign(j, sa * sb, sb * sa, n, rng);
    const int frob = relation_sign(j, pi * sa, sigma(a.frobenius(inst.q_exp)) * pi, n, rng);
    ok = ok && add != 0 && comm != 0 && frob != 0;
    rows.push_back({{"omega", fq_to_json(a)}, {"omega_prime", fq_to_json(b)}, {"sum_sign", add}, {"commutator_sign", comm},
                    {"frobenius_sign", frob}});
  }
  out.push_back(make("sigma_relations_hold_up_to_sign", ok, {{"pairs", rows}, {"samples_per_relation", n}}));
  return out;
}

// e(D1, D2)^c = e_E(P1, P2) e_E(Q1, Q2) with (Pi, Qi) = mu_tilde(Di); the
// exponent c must be the same on every sample.
Check pairing_factorization(const FamilyInstance& inst, int n, std::mt19937_64& rng) {
  const SplitMaps& s = *inst.split;
  const Jacobian& c = s.curve();
  const auto& em = s.elliptic().model();
  const BigInt& r = inst.r;
  const Fq g = inst.work->root_of_unity(r);
  std::optional<BigInt> exponent;
  bool constant = true;
  json logs = json::array();
  for (int t = 0; t < n;) {
    const auto d1 = random_order_r(c, r, inst.work_group, c.max_degree(), rng);
    const auto d2 = random_order_r(c, r, inst.work_group, c.max_degree(), rng);
    if (!d1 || !d2) throw Error("no order-r classes on the sextic's Jacobian");
    const Fq e = weil_pairing(c.model(), *d1, *d2, r, rng);
    if (e.is_one()) continue;
    const auto [p1, q1] = s.mu_tilde(*d1, rng);
    const auto [p2, q2] = s.mu_tilde(*d2, rng);
    const Fq prod = weil_pairing(em, p1, p2, r, rng) * weil_pairing(em, q1, q2, r, rng);
    const BigInt a = dlog_mu_r(g, e, r), b = dlog_mu_r(g, prod, r);
    const BigInt ex = b * powmod(a, r - 2, r) % r;
    if (exponent && *exponent != ex) constant = false;
    if (!exponent) exponent = ex;
    logs.push_back(big_json(ex));
    ++t;
  }
  return make("pairing_factorization_exponent", constant && exponent && *exponent != 0,
              {{"exponent", exponent ? big_json(*exponent) : json()}, {"samples", n}, {"per_sample", logs}});
}

std::vector<Check> suite_split(const FamilyInstance& inst, int n, std::mt19937_64& rng) {
  const SplitMaps& s = *inst.split;
  const Jacobian& e = s.elliptic();
  std::vector<Check> out;
  bool rational = true;
  const auto& twist = inst.jac->defining_model();
  for (const Poly* poly : {&twist.f(), &twist.h()})
    for (const Fq& c : poly->coeffs()) rational = rational && c.frobenius(1) == c;
  out.push_back(make("twist_coefficients_in_base_field", rational, {{"curve", model_text(twist)}}));
  out.push_back(count_check("mu_tilde_after_mu_is_doubling", n, [&] {
    const auto pq = s.random_pair(rng);
    return std::pair{pq, pair_json(pq)};
  }, [&](const auto& x) { return s.mu_tilde(s.mu(x.first), rng) == s.mul(2, x.first); }));
  out.push_back(count_check("mu_after_mu_tilde_is_doubling", n, [&] {
    const Divisor d = s.curve().random_divisor(s.curve().max_degree(), rng);
    return std::pair{d, divisor_to_json(d)};
  }, [&](const auto& x) { return s.mu(s.mu_tilde(x.first, rng)) == s.curve().mul(2, x.first); }));
  const Endo pi = inst.inner.at("pi"), chi = inst.inner.at("chi"), rho = inst.inner.at("rho6");
  const auto image = [&](const char* name, const Endo& psi, auto expect) {
    out.push_back(count_check(name, n, [&] {
      const auto pq = s.random_pair(rng);
      return std::pair{pq, pair_json(pq)};
    }, [&](const auto& x) { return s.T(psi, x.first, rng) == expect(x.first); }));
  };
  image("image_of_frobenius", pi, [&](const EllipticPair& pq) {
    return s.mul(2, {s.frobenius(pq.first), s.frobenius(pq.second)});
  });
  image("image_of_chi", chi, [&](const EllipticPair& pq) { return s.mul(2, {pq.second, pq.first}); });
  image("image_of_rho6", rho, [&](const EllipticPair& pq) {
    return EllipticPair{e.mul(2, s.rho3(pq.first)), e.mul(-2, s.rho3(s.rho3(pq.second)))};
  });
  const std::vector<Endo> gens = {pi, chi, rho};
  const int per = std::min(n, 20);
  int fails = 0;
  for (const Endo& a : gens)
    for (const Endo& b : gens)
      for (int t = 0; t < per; ++t) {
        const auto pq = s.random_pair(rng);
        fails += s.T(a, s.T(b, pq, rng), rng) != s.mul(2, s.T(a * b, pq, rng));
      }
  out.push_back(make("multiplicativity", fails == 0, {{"generator_pairs", 9}, {"samples_per_pair", per}, {"failures", fails}}));
  out.push_back(pairing_factorization(inst, std::min(n, 20), rng));
  return out;
}

std::vector<Check> suite_projectors(const FamilyInstance& inst, int n, std::mt19937_64& rng) {
  const SplitMaps& s = *inst.split;
  const Jacobian& e = s.elliptic();
  const Divisor O = e.identity();
  const Endo one = Endo::identity(), chi = inst.inner.at("chi"), r3 = inst.inner.at("rho6").pow(3);
  struct Row {
    const char* name;
    Endo psi;
    const char* image;
  };
  const std::vector<Row> rows = {{"projector_1_plus_rho6_cubed", one + r3, "(4P, 0)"},
                                 {"projector_1_minus_rho6_cubed", one - r3, "(0, 4Q)"},
                                 {"projector_chi_plus_chi_rho6_cubed", chi + chi * r3, "(0, 4P)"},
                                 {"projector_chi_minus_chi_rho6_cubed", chi - chi * r3, "(4Q, 0)"}};
  std::vector<Check> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int fails = 0;
    json first;
    for (int t = 0; t < n; ++t) {
      const auto pq = s.random_pair(rng);
      const Divisor P4 = e.mul(4, pq.first), Q4 = e.mul(4, pq.second);
      const EllipticPair want = i == 0 ? EllipticPair{P4, O} : i == 1 ? EllipticPair{O, Q4} : i == 2 ? EllipticPair{O, P4} : EllipticPair{Q4, O};
      if (s.T(rows[i].psi, pq, rng) != want) {
        if (!fails) first = pair_json(pq);
        ++fails;
      }
    }
    json w = {{"image", rows[i].image}, {"samples", n}, {"failures", fails}};
    if (fails) w["first_failure"] = first;
    out.push_back(make(rows[i].name, fails == 0, w));
  }
  return out;
}

std::vector<Check> suite_trace0(const FamilyInstance& inst, int n, std::mt19937_64& rng) {
  const Jacobian& j = *inst.jac;
  const Endo& psi = inst.gens.at("psi");
  std::vector<Check> out;
  out.push_back(agree_check("psi_squared_is_minus_one", j, psi * psi, Endo::integer(-1), n, rng));
  out.push_back(count_check("psi_of_rational_has_trace_zero", n, [&] {
    const Divisor d = j.random_divisor(1, rng);
    return std::pair{d, divisor_to_json(d)};
  }, [&](const auto& x) {
    const Divisor y = psi.apply(j, x.first);
    return j.trace(y, inst.k).is_identity() && (x.first.is_identity() || !y.is_identity());
  }));
  int moved = 0;
  const int tries = std::min(n, 10);
  for (int t = 0; t < tries; ++t) moved += !j.is_rational(inst.gens.at("phi").apply(j, j.random_divisor(inst.k, rng)), inst.k);
  out.push_back(make("phi_not_defined_over_degree_k", moved > 0, {{"samples", tries}, {"moved_off_subfield", moved}}));
  return out;
}

std::vector<Check> suite_pairing_props(const FamilyInstance& inst, int n, std::mt19937_64& rng) {
  const Jacobian& j = *inst.jac;
  const auto& m = j.model();
  const BigInt& r = inst.r;
  const std::uint64_t r64 = static_cast<std::uint64_t>(r);
  const auto tate = [&](const Divisor& a, const Divisor& b) { return tate_pairing(m, a, b, r, rng); };
  const auto sample = [&] { return std::pair{random_torsion(inst, 1, rng), random_torsion(inst, inst.k, rng)}; };
  std::vector<Check> out;
  int bil = 0, mu = 0, nontrivial = 0;
  for (int t = 0; t < n; ++t) {
    const auto [d1, d2] = sample();
    const Fq e = tate(d1, d2);
    nontrivial += !e.is_one();
    mu += !e.pow(r).is_one();
    const std::uint64_t a = 1 + rng() % (r64 - 1), b = 1 + rng() % (r64 - 1);
    bil += tate(j.mul(a, d1), j.mul(b, d2)) != e.pow(BigInt(a) * b % r);
  }
  out.push_back(make("tate_bilinear", bil == 0, {{"samples", n}, {"failures", bil}, {"nontrivial_values", nontrivial}}));
  out.push_back(make("tate_in_mu_r", mu == 0, {{"samples", n}, {"failures", mu}}));
  int ident = 0;
  for (int t = 0; t < std::min(n, 20); ++t) ident += !tate(random_torsion(inst, 1, rng), j.identity()).is_one();
  out.push_back(make("tate_identity_argument", ident == 0, {{"samples", std::min(n, 20)}, {"failures", ident}}));
  const int g = std::min(n, 20);
  int gal = 0, wd = 0;
  for (int t = 0; t < g; ++t) {
    const auto [d1, d2] = sample();
    const Fq e = tate(d1, d2);
    gal += tate(j.frobenius(d1), j.frobenius(d2)) != e.pow(inst.q);
    const Divisor shift = j.mul(r, j.random_divisor(j.max_degree(), rng));
    wd += tate(d1, j.add(d2, shift)) != e;
  }
  out.push_back(make("tate_galois_equivariant", gal == 0, {{"samples", g}, {"failures", gal}}));
  out.push_back(make("tate_well_defined_mod_r", wd == 0, {{"samples", g}, {"failures", wd}}));
  int alt = 0, wbil = 0;
  for (int t = 0; t < g; ++t) {
    const Divisor d1 = random_torsion(inst, inst.k, rng), d2 = random_torsion(inst, inst.k, rng);
    const Fq e = weil_pairing(m, d1, d2, r, rng);
    alt += !weil_pairing(m, d1, d1, r, rng).is_one() || !(e * weil_pairing(m, d2, d1, r, rng)).is_one();
    const std::uint64_t a = 1 + rng() % (r64 - 1);
    wbil += weil_pairing(m, j.mul(a, d1), d2, r, rng) != e.pow(a);
  }
  out.push_back(make("weil_alternating", alt == 0, {{"samples", g}, {"failures", alt}}));
  out.push_back(make("weil_bilinear", wbil == 0, {{"samples", g}, {"failures", wbil}}));
  return out;
}

std::vector<Check> suite_independence(const FamilyInstance& inst, int, std::mt19937_64& rng) {
  const Jacobian& j = *inst.jac;
  const std::uint64_t r = static_cast<std::uint64_t>(inst.r);
  const TorsionBasis basis = certify_basis(j, inst.r, inst.work_group, rng);
  std::vector<Mat4> ms;
  for (const Endo& e : inst.distortion) ms.push_back(endo_matrix_mod_r(j, e, basis, rng));
  const unsigned rank = span_rank(ms, r);
  std::vector<Check> out;
  out.push_back(make("catalog_spans_endomorphisms_mod_r", rank == 16,
                     {{"r", r}, {"catalog_size", inst.distortion.size()}, {"rank", rank}}));
  const auto cp = charpoly_mod_r(endo_matrix_mod_r(j, Endo::frobenius(1), basis, rng), r);
  bool match = true;
  for (std::size_t i = 0; i < cp.size(); ++i)
    match = match && BigInt(cp[i]) == mod_floor(inst.charpoly.coeff(i), inst.r);
  out.push_back(make("frobenius_matrix_charpoly", match, {{"charpoly_mod_r", cp}}));
  return out;
}

std::vector<Check> suite_reciprocity(const FamilyInstance& inst, int n, std::mt19937_64& rng) {
  return {count_check("miller_function_reciprocity", n, [&] {
    const Divisor d = random_torsion(inst, inst.k, rng);
    return std::pair{d, divisor_to_json(d)};
  }, [&](const auto& x) { return reciprocity_holds(inst.jac->model(), x.first, inst.r, rng); })};
}

}  // namespace

json to_json(const Check& c) { return {{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}}; }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"charpoly", "commutation", "sigma",        "split",        "projectors",
                                                 "trace0",   "pairing-props", "independence", "reciprocity"};
  return names;
}

bool suite_applies(const std::string& suite, FamilyTag t) {
  if (suite == "commutation") return t == FamilyTag::K4;
  if (suite == "sigma") return t == FamilyTag::K12;
  if (suite == "split" || suite == "projectors") return t == FamilyTag::K6;
  if (suite == "trace0") return t == FamilyTag::K5;
  return std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end();
}

std::vector<Check> run_suite(const std::string& suite, const FamilyInstance& inst, int samples, std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw DomainError("unknown suite: " + suite);
  if (!suite_applies(suite, inst.params.tag))
    throw DomainError("suite " + suite + " does not apply to family " + tag_name(inst.params.tag));
  if (samples < 1) throw DomainError("samples must be positive");
  std::mt19937_64 rng(seed);
  if (suite == "charpoly") return suite_charpoly(inst, samples, rng);
  if (suite == "commutation") return suite_commutation(inst, samples, rng);
  if (suite == "sigma") return suite_sigma(inst, samples, rng);
  if (suite == "split") return suite_split(inst, samples, rng);
  if (suite == "projectors") return suite_projectors(inst, samples, rng);
  if (suite == "trace0") return suite_trace0(inst, samples, rng);
  if (suite == "pairing-props") return suite_pairing_props(inst, samples, rng);
  if (suite == "independence") return suite_independence(inst, samples, rng);
  return suite_reciprocity(inst, samples, rng);
}

bool reciprocity_holds(const HyperellipticModel& m, const Divisor& d, const BigInt& r, std::mt19937_64& rng) {
  const Field* F = m.field().get();
  for (int attempt = 0; attempt < 200; ++attempt) {
    const Fq c1 = F->random(rng), c2 = F->random(rng);
    if (m.lift_x(c1).empty() || m.lift_x(c2).empty()) continue;
    EvalDivisor ev;
    for (const auto& [c, sign] : {std::pair{c1, 1}, std::pair{c2, -1}}) {
      const auto pts = m.lift_x(c);
      for (const auto& p : pts) ev.push_back({p, sign * (pts.size() == 1 ? 2 : 1)});
    }
    Fq rhs = F->one();
    bool bad = false;
    for (const auto& [p, k] : to_support(m, d).points) {
      const Fq den = p.x - c2;
      if (den.is_zero() || (p.x - c1).is_zero()) bad = true;
      else rhs *= ((p.x - c1) / den).pow(r * k);
    }
    if (bad) continue;
    try {
      return miller_eval(m, d, r, ev).value() == rhs;
    } catch (const SupportCollision&) {
    }
  }
  return false;
}

json info_json(const FamilyInstance& inst) {
  json names = json::array();
  for (const Endo& e : inst.distortion) names.push_back(e.name());
  json gens = json::array();
  for (const auto& [name, e] : inst.gens) gens.push_back(name);
  json consts = json::object();
  for (const auto& [name, c] : inst.constants) consts[name] = fq_to_json(c);
  json out = {{"family", tag_name(inst.params.tag)},
              {"parameters", inst.params.to_string()},
              {"p", inst.p},
              {"q", big_json(inst.q)},
              {"q_exponent", inst.q_exp},
              {"working_field", inst.work->to_text()},
              {"curve", model_text(inst.jac->defining_model())},
              {"arithmetic_model", model_text(inst.jac->model())},
              {"charpoly", intpoly_json(inst.charpoly)},
              {"order", big_json(inst.order)},
              {"r", big_json(inst.r)},
              {"embedding_degree", inst.k},
              {"working_group_order", big_json(inst.work_group.order)},
              {"generators", gens},
              {"constants", consts},
              {"distortion_catalog", names}};
  if (inst.sign) out["sign"] = inst.sign;
  return out;
}

const std::vector<std::string>& pair_kinds() {
  static const std::vector<std::string> kinds = {"rational-rational", "diagonal", "rational-trace0", "trace0-rational",
                                                 "general-general"};
  return kinds;
}

json DistortionRun::to_json() const {
  json kinds = json::object();
  for (const auto& [k, n] : tried_by_kind) {
    const auto it = found_by_kind.find(k);
    kinds[k] = {{"tried", n}, {"found", it == found_by_kind.end() ? 0 : it->second}};
  }
  return {{"pairs", pairs},    {"found", found},
          {"success_rate", success_rate()},
          {"histogram", histogram}, {"by_kind", kinds},
          {"failure_count", failure_count}, {"failures", failures}};
}

DistortionRun distortion_run(const FamilyInstance& inst, int pairs, PairingKind kind, std::uint64_t seed) {
  if (pairs < 1) throw DomainError("pairs must be positive");
  std::mt19937_64 rng(seed);
  const Jacobian& j = *inst.jac;
  DistortionRun run;
  run.pairs = pairs;
  for (const Endo& e : inst.distortion) run.histogram[e.name()] = 0;
  for (int t = 0; t < pairs; ++t) {
    const std::string& k = pair_kinds()[t % pair_kinds().size()];
    Divisor d1, d2;
    if (k == "rational-rational") d1 = random_torsion(inst, 1, rng), d2 = random_torsion(inst, 1, rng);
    else if (k == "diagonal") d1 = d2 = random_torsion(inst, 1, rng);
    else if (k == "rational-trace0") d1 = random_torsion(inst, 1, rng), d2 = random_trace_zero(inst, rng);
    else if (k == "trace0-rational") d1 = random_trace_zero(inst, rng), d2 = random_torsion(inst, 1, rng);
    else d1 = random_torsion(inst, inst.k, rng), d2 = random_torsion(inst, inst.k, rng);
    ++run.tried_by_kind[k];
    const auto hit = distortion_search(j, d1, d2, inst.distortion, kind, inst.r, rng);
    if (hit) {
      ++run.found;
      ++run.found_by_kind[k];
      ++run.histogram[inst.distortion[*hit].name()];
    } else {
      ++run.failure_count;
      if (run.failures.size() < 5)
        run.failures.push_back({{"kind", k}, {"D1", divisor_to_json(d1)}, {"D2", divisor_to_json(d2)}});
    }
  }
  return run;
}

json pairing_json(const FamilyInstance& inst, const Divisor& d1, const Divisor& d2, PairingKind kind, std::uint64_t seed) {
  const Jacobian& j = *inst.jac;
  if (!j.mul(inst.r, d1).is_identity()) throw DomainError("D1 is not killed by r = " + to_string(inst.r));
  if (kind == PairingKind::Weil && !j.mul(inst.r, d2).is_identity())
    throw DomainError("D2 is not killed by r = " + to_string(inst.r));
  std::mt19937_64 rng(seed);
  const Fq e = pairing_value(kind, j, d1, d2, inst.r, rng);
  json out = {{"pairing", kind == PairingKind::Tate ? "tate" : "weil"},
              {"r", big_json(inst.r)},
              {"value", fq_to_json(e)},
              {"in_mu_r", e.pow(inst.r).is_one()},
              {"trivial", e.is_one()}};
  if (e.pow(inst.r).is_one()) {
    const Fq g = inst.work->root_of_unity(inst.r);
    out["generator"] = fq_to_json(g);
    out["log"] = big_json(dlog_mu_r(g, e, inst.r));
  }
  return out;
}

}  // namespace g2
