// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion.  Sample counts and
// tolerances are pinned below.  Criteria that cannot be met at a preset are
// listed in kKnownFailures; they still print FAIL, and the exit status is 0
// only when the failing set equals that list exactly.
//
// Usage: acceptance [path-to-g2-cli]

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "g2/error.hpp"
#include "g2/pairing.hpp"
#include "g2/suites.hpp"

using namespace g2;

namespace {

constexpr std::uint64_t kSeed = 0;
constexpr int kCharpolySamples = 50;
constexpr int kPairingSamples = 50;  // bilinearity; Galois and well-definedness use 20
constexpr int kReciprocitySamples = 100;
constexpr int kCommutationSamples = 50;
constexpr int kTraceSamples = 50;  // psi^2 = -1 uses 20
constexpr int kPsiDistortionPairs = 50;
constexpr int kSplitSamples = 50;  // multiplicativity and factorization use 20
constexpr int kSigmaSamples = 50;
constexpr int kDistortionPairs = 500;
constexpr double kRequiredSuccessRate = 1.0;
constexpr unsigned kFullRank = 16;

// Criterion number -> reason it cannot be met (see the decisions ledger).
const std::map<int, std::string> kKnownFailures = {
    {7, "k4 p=7: pi^i rho5^j span rank 10 mod 5 (rho5 - 1 is nilpotent on J[5])"},
    {11, "k4 p=7: J[5] lies in 5*J over every extension, so the reduced Tate pairing is trivial"},
};

struct Line {
  int id;
  std::string title;
  bool pass;
  std::string detail;
  double seconds;
};

std::vector<Line> lines;

template <class Fn>
void criterion(int id, const std::string& title, Fn fn) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool pass = false;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail << " exception: " << e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  lines.push_back({id, title, pass, detail.str(), s});
  std::printf("%s %2d %s:%s (%.1fs)\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.str().c_str(), s);
  std::fflush(stdout);
}

const Check& find(const std::vector<Check>& cs, const std::string& name) {
  for (const Check& c : cs)
    if (c.name == name) return c;
  throw Error("missing check " + name);
}

bool all_pass(const std::vector<Check>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.pass; });
}

std::string failed_names(const std::vector<Check>& cs) {
  std::string s;
  for (const Check& c : cs)
    if (!c.pass) s += " " + c.name;
  return s;
}

const std::vector<FamilyInstance>& presets() {
  static const std::vector<FamilyInstance> all = [] {
    std::vector<FamilyInstance> v;
    for (const auto& p : preset_list()) v.push_back(build_family(p));
    return v;
  }();
  return all;
}

const FamilyInstance& find_preset(FamilyTag t, std::int64_t p, std::int64_t m, std::int64_t b) {
  for (const auto& i : presets())
    if (i.params.tag == t && i.params.p == p && i.params.m == m && i.params.b == b) return i;
  throw Error("preset not found");
}

// Exhaustive affine count of y^2 = x^5 + 1 over F_{p^n}, plus the single
// point at infinity.
std::uint64_t count_points(std::uint64_t p, unsigned n) {
  const FieldPtr F = Field::build(p, n);
  std::uint64_t count = 1;
  const BigInt size = F->order();
  for (BigInt i = 0; i < size; ++i) {
    const Fq x = F->element_at(i);
    const Fq rhs = x.pow(std::uint64_t{5}) + F->one();
    count += rhs.is_zero() ? 1 : F->is_square(rhs) ? 2 : 0;
  }
  return count;
}

std::string run_cli(const std::string& cmd) {
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) throw Error("cannot run " + cmd);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
  pclose(f);
  return out;
}

std::string without_timing(const std::string& report) {
  json j = json::parse(report);
  j.erase("timing");
  return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "point counts of y^2 = x^5 + 1 over F_7 and F_49", [](std::ostream& d) {
    const std::uint64_t n1 = count_points(7, 1), n2 = count_points(7, 2);
    const std::uint64_t jac = (n1 * n1 + n2) / 2 - 7;
    const auto& inst = find_preset(FamilyTag::K4, 7, 0, 0);
    d << " #C(F_7)=" << n1 << " #C(F_49)=" << n2 << " #J(F_7)=" << jac << " P(1)=" << to_string(inst.order);
    return n1 == 8 && n2 == 50 && jac == 50 && inst.order == 50;
  });

  criterion(2, "characteristic polynomial annihilates 50 divisors per preset", [](std::ostream& d) {
    bool ok = true;
    for (const auto& inst : presets()) {
      const auto cs = run_suite("charpoly", inst, kCharpolySamples, kSeed);
      const bool pass = find(cs, "charpoly_annihilates").pass && (!inst.rejected_charpoly || find(cs, "rejected_sign_fails").pass);
      ok = ok && pass;
      d << " [" << inst.params.to_string();
      if (inst.sign) d << (inst.sign > 0 ? " P+" : " P-");
      d << (pass ? " ok]" : " FAILED]");
    }
    return ok;
  });

  criterion(3, "embedding degrees match the claims and the admissible table", [](std::ostream& d) {
    bool ok = true;
    for (const auto& inst : presets()) {
      const auto allowed = allowed_embedding_degrees(inst.p);
      const bool pass = inst.k == inst.claimed_k && std::find(allowed.begin(), allowed.end(), inst.k) != allowed.end() &&
                        embedding_degree(inst.r, inst.q) == inst.k;
      ok = ok && pass;
      d << " [" << inst.params.to_string() << " r=" << to_string(inst.r) << " k=" << inst.k << "]";
    }
    return ok;
  });

  criterion(4, "integer identities for the sign candidates", [](std::ostream& d) {
    bool ok = true;
    for (unsigned m : {1u, 3u, 7u}) {
      const auto [pp, pm] = charpoly_candidates(FamilyTag::K5, m);
      const BigInt q = ipow(5, m);
      const IntPoly lhs = IntPoly({-q, 0, 1}) * pp * pm;
      const IntPoly rhs = IntPoly::monomial(1, 10) - IntPoly::monomial(ipow(q, 5), 0);
      ok = ok && lhs == rhs;
      d << " [q=5^" << m << (lhs == rhs ? " ok]" : " FAILED]");
    }
    for (unsigned m : {1u, 5u, 7u}) {
      const auto [pp, pm] = charpoly_candidates(FamilyTag::K12, m);
      const BigInt q4 = ipow(2, 4 * m), q2 = ipow(2, 2 * m);
      const IntPoly a = IntPoly::monomial(1, 8) - IntPoly::monomial(q4, 0);
      const IntPoly b = IntPoly::monomial(1, 8) + IntPoly::monomial(q2, 4) + IntPoly::monomial(q4, 0);
      const IntPoly lhs = a * b * pp * pm;
      const IntPoly rhs = IntPoly::monomial(1, 24) - IntPoly::monomial(ipow(2, 12 * m), 0);
      ok = ok && lhs == rhs;
      d << " [q=2^" << m << (lhs == rhs ? " ok]" : " FAILED]");
    }
    return ok;
  });

  criterion(5, "Tate pairing properties on every preset", [](std::ostream& d) {
    bool ok = true;
    for (const auto& inst : presets()) {
      const auto cs = run_suite("pairing-props", inst, kPairingSamples, kSeed);
      ok = ok && all_pass(cs);
      d << " [" << inst.params.to_string() << (all_pass(cs) ? " ok" : " FAILED:" + failed_names(cs));
      if (find(cs, "tate_bilinear").witness["nontrivial_values"] == 0) d << ", all values trivial";
      d << "]";
    }
    return ok;
  });

  criterion(6, "Miller function reciprocity oracle, 100 instances per preset", [](std::ostream& d) {
    bool ok = true;
    for (const auto& inst : presets()) {
      const Check c = run_suite("reciprocity", inst, kReciprocitySamples, kSeed).front();
      ok = ok && c.pass;
      d << " [" << inst.params.to_string() << " " << c.witness["failures"].get<int>() << " failures]";
    }
    return ok;
  });

  criterion(7, "Frobenius/rho5 commutation and rank of pi^i rho5^j mod r", [](std::ostream& d) {
    bool ok = true;
    for (std::int64_t p : {7, 13}) {
      const auto& inst = find_preset(FamilyTag::K4, p, 0, 0);
      const auto cs = run_suite("commutation", inst, kCommutationSamples, kSeed);
      const auto rank = find(run_suite("independence", inst, 1, kSeed), "catalog_spans_endomorphisms_mod_r");
      d << " [p=" << p << " commutation " << (all_pass(cs) ? "ok" : "FAILED") << ", rank " << rank.witness["rank"] << " mod "
        << rank.witness["r"] << "]";
      ok = ok && all_pass(cs);
      if (p == 7) ok = ok && rank.witness["rank"].get<unsigned>() == kFullRank;
    }
    return ok;
  });

  criterion(8, "psi^2 = -1, trace zero, and Tate distortion by psi", [](std::ostream& d) {
    bool ok = true;
    for (std::int64_t b : {1, -1}) {
      const auto& inst = find_preset(FamilyTag::K5, 0, 1, b);
      const auto cs = run_suite("trace0", inst, kTraceSamples, kSeed);
      const bool sq = run_suite("trace0", inst, 20, kSeed).front().pass;
      const bool tr = find(cs, "psi_of_rational_has_trace_zero").pass;
      std::mt19937_64 rng(kSeed);
      const Endo& psi = inst.gens.at("psi");
      int nontrivial = 0;
      for (int t = 0; t < kPsiDistortionPairs; ++t) {
        const Divisor d1 = random_torsion(inst, 1, rng), d2 = random_torsion(inst, 1, rng);
        nontrivial += !tate_pairing(inst.jac->model(), d1, psi.apply(*inst.jac, d2), inst.r, rng).is_one();
      }
      ok = ok && sq && tr && nontrivial == kPsiDistortionPairs;
      d << " [b=" << b << " r=" << to_string(inst.r) << " psi^2 " << (sq ? "ok" : "FAILED") << ", trace "
        << (tr ? "ok" : "FAILED") << ", distortion " << nontrivial << "/" << kPsiDistortionPairs << "]";
    }
    return ok;
  });

  criterion(9, "split Jacobian maps, images, projectors, pairing factorization", [](std::ostream& d) {
    bool ok = true;
    for (std::int64_t p : {5, 11}) {
      const auto& inst = find_preset(FamilyTag::K6, p, 0, 0);
      const auto split = run_suite("split", inst, kSplitSamples, kSeed);
      const auto proj = run_suite("projectors", inst, kSplitSamples, kSeed);
      const auto& fac = find(split, "pairing_factorization_exponent");
      ok = ok && all_pass(split) && all_pass(proj);
      d << " [p=" << p << " split " << (all_pass(split) ? "ok" : "FAILED:" + failed_names(split)) << ", projectors "
        << (all_pass(proj) ? "ok" : "FAILED:" + failed_names(proj)) << ", pairing exponent " << fac.witness["exponent"]
        << (fac.witness["exponent"] == 8 ? "" : " (constant-exponent variant)") << "]";
    }
    return ok;
  });

  criterion(10, "sigma relations and rank of pi^i sigma mod r", [](std::ostream& d) {
    bool ok = true;
    for (const auto& inst : presets()) {
      if (inst.params.tag != FamilyTag::K12) continue;
      const auto cs = run_suite("sigma", inst, kSigmaSamples, kSeed);
      ok = ok && all_pass(cs);
      d << " [" << inst.params.to_string() << (all_pass(cs) ? " ok]" : " FAILED:" + failed_names(cs) + "]");
    }
    const auto& inst = find_preset(FamilyTag::K12, 0, 5, 1);
    const auto rank = find(run_suite("independence", inst, 1, kSeed), "catalog_spans_endomorphisms_mod_r");
    ok = ok && rank.witness["rank"].get<unsigned>() == kFullRank;
    d << " [rank " << rank.witness["rank"] << " mod " << rank.witness["r"] << "]";
    return ok;
  });

  criterion(11, "Tate distortion search over 500 pairs per preset", [](std::ostream& d) {
    bool ok = true;
    for (const auto& inst : presets()) {
      const DistortionRun run = distortion_run(inst, kDistortionPairs, PairingKind::Tate, kSeed);
      ok = ok && run.success_rate() >= kRequiredSuccessRate;
      d << " [" << inst.params.to_string() << " " << run.found << "/" << run.pairs << "]";
      if (run.failure_count) std::cerr << "finding: " << inst.params.to_string() << " " << run.to_json().dump() << "\n";
    }
    return ok;
  });

  criterion(12, "identical seeds give identical reports", [&](std::ostream& d) {
    bool ok = true;
    const auto& inst = find_preset(FamilyTag::K6, 5, 0, 0);
    for (const auto& s : suite_names()) {
      if (!suite_applies(s, inst.params.tag)) continue;
      json a = json::array(), b = json::array();
      for (const Check& c : run_suite(s, inst, 5, 42)) a.push_back(to_json(c));
      for (const Check& c : run_suite(s, inst, 5, 42)) b.push_back(to_json(c));
      ok = ok && a.dump() == b.dump();
    }
    ok = ok && distortion_run(inst, 20, PairingKind::Tate, 42).to_json() == distortion_run(inst, 20, PairingKind::Tate, 42).to_json();
    d << " [in-process suites and distortion " << (ok ? "identical" : "DIFFER") << "]";
    if (!cli.empty()) {
      for (const std::string args : {"verify k5 --samples 5 --seed 9", "distort k12 --pairs 10 --seed 3", "info k6"}) {
        const std::string x = run_cli(cli + " " + args), y = run_cli(cli + " " + args);
        const bool same = !x.empty() && without_timing(x) == without_timing(y);
        ok = ok && same;
        d << " [" << args << (same ? " identical]" : " DIFFER]");
      }
    }
    return ok;
  });

  std::set<int> failed, expected;
  for (const auto& l : lines)
    if (!l.pass) failed.insert(l.id);
  for (const auto& [id, why] : kKnownFailures) expected.insert(id);
  std::printf("\n%zu/%zu criteria pass\n", lines.size() - failed.size(), lines.size());
  for (const auto& [id, why] : kKnownFailures)
    std::printf("known failure %d: %s%s\n", id, why.c_str(), failed.count(id) ? "" : " (now passes; update the list)");
  for (int id : failed)
    if (!expected.count(id)) std::printf("unexpected failure: criterion %d\n", id);
  return failed == expected ? 0 : 1;
}
