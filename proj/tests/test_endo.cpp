#include <gtest/gtest.h>

#include <random>

#include "g2/catalog.hpp"
#include "g2/error.hpp"
#include "g2/pairing.hpp"

using namespace g2;

namespace {

const FamilyInstance& k4(std::int64_t p) {
  static const FamilyInstance i7 = build_family({FamilyTag::K4, 7, 0, 1, 0, 0});
  static const FamilyInstance i13 = build_family({FamilyTag::K4, 13, 0, 1, 0, 0});
  return p == 7 ? i7 : i13;
}

const FamilyInstance& k5() {
  static const FamilyInstance i = build_family(preset(FamilyTag::K5));
  return i;
}

const FamilyInstance& k6() {
  static const FamilyInstance i = build_family(preset(FamilyTag::K6));
  return i;
}

const FamilyInstance& k12() {
  static const FamilyInstance i = build_family({FamilyTag::K12, 0, 5, 0, 1, 0});
  return i;
}

Divisor sample(const FamilyInstance& f, std::mt19937_64& rng) { return f.jac->random_divisor(f.jac->max_degree(), rng); }

}  // namespace

TEST(Endo, IntegerAndNames) {
  const auto& f = k4(7);
  std::mt19937_64 rng(1);
  const Divisor d = sample(f, rng);
  EXPECT_EQ(Endo::identity().apply(*f.jac, d), d);
  EXPECT_EQ(Endo::integer(3).apply(*f.jac, d), f.jac->mul(3, d));
  EXPECT_EQ(f.distortion[0].name(), "1");
  EXPECT_EQ(f.distortion[11].name(), "pi^2*rho5^3");
  EXPECT_EQ(k12().distortion[5].name(), "pi*sigma_tau");
  EXPECT_EQ(k6().distortion[7].name(), "conj(phi, chi*rho6)");
}

TEST(Endo, Rho5HasOrderFive) {
  for (std::int64_t p : {7, 13}) {
    const auto& f = k4(p);
    const Endo& rho = f.gens.at("rho5");
    std::mt19937_64 rng(p);
    for (int t = 0; t < 20; ++t) {
      const Divisor d = sample(f, rng);
      EXPECT_EQ(rho.pow(5).apply(*f.jac, d), d);
      EXPECT_NE(rho.apply(*f.jac, d), d);
    }
  }
}

TEST(Endo, FastPathMatchesPointwise) {
  std::mt19937_64 rng(2);
  const std::vector<std::pair<const FamilyInstance*, std::string>> atoms = {
      {&k4(7), "rho5"}, {&k5(), "psi"}, {&k5(), "phi"}, {&k12(), "sigma_tau"}, {&k12(), "sigma_theta"}};
  for (const auto& [f, name] : atoms) {
    const Endo& e = f->gens.at(name);
    for (int t = 0; t < 200; ++t) {
      const Divisor d = sample(*f, rng);
      EXPECT_EQ(e.apply(*f->jac, d), e.apply_pointwise(*f->jac, d)) << name;
    }
  }
}

TEST(Endo, Additivity) {
  std::mt19937_64 rng(3);
  for (const FamilyInstance* f : {&k4(13), &k5(), &k6(), &k12()}) {
    const Jacobian& j = *f->jac;
    for (const auto& [name, e] : f->gens)
      for (int t = 0; t < 10; ++t) {
        const Divisor a = sample(*f, rng), b = sample(*f, rng);
        EXPECT_EQ(e.apply(j, j.add(a, b)), j.add(e.apply(j, a), e.apply(j, b))) << name;
      }
  }
}

TEST(Endo, FrobeniusRho5Commutation) {
  for (std::int64_t p : {7, 13}) {
    const auto& f = k4(p);
    const Endo pi = Endo::frobenius(1), rho = f.gens.at("rho5");
    std::mt19937_64 rng(4);
    unsigned e = 1;
    for (unsigned j = 1; j <= 3; ++j) {
      e = e * static_cast<unsigned>(p) % 5;
      EXPECT_TRUE(agree_on_samples(*f.jac, pi.pow(j) * rho, rho.pow(e) * pi.pow(j), 20, rng)) << p << " " << j;
    }
    EXPECT_FALSE(agree_on_samples(*f.jac, pi * rho, rho * pi, 5, rng));
  }
}

TEST(Endo, PsiSquaredIsMinusOneAndTraceZero) {
  const auto& f = k5();
  const Jacobian& j = *f.jac;
  const Endo& psi = f.gens.at("psi");
  std::mt19937_64 rng(5);
  EXPECT_TRUE(agree_on_samples(j, psi * psi, Endo::integer(-1), 20, rng));
  for (int t = 0; t < 20; ++t) {
    const Divisor d = j.random_divisor(1, rng);
    EXPECT_TRUE(j.trace(psi.apply(j, d), 5).is_identity());
  }
}

TEST(Endo, PhiNotDefinedOverDegreeFive) {
  const auto& f = k5();
  const Jacobian& j = *f.jac;
  std::mt19937_64 rng(6);
  int moved = 0;
  for (int t = 0; t < 10; ++t) {
    const Divisor d = j.random_divisor(5, rng);
    ASSERT_TRUE(j.is_rational(d, 5));
    moved += !j.is_rational(f.gens.at("phi").apply(j, d), 5);
  }
  EXPECT_GT(moved, 0);
}

TEST(Endo, SigmaOmega) {
  const auto& f = k12();
  const auto& m = f.jac->model();
  const Field* W = f.work.get();
  const CurveIso s0 = build_sigma_omega(W->zero(), m);
  EXPECT_EQ(s0, CurveIso::identity(W));
  const CurveIso s1 = build_sigma_omega(W->one(), m);
  EXPECT_EQ(s1, (CurveIso{W->one(), W->one(), W->zero(), W->one(), W->one(), Poly::from_ints(W, {0, 0, 1})}));
  EXPECT_THROW(build_sigma_omega(W->gen(), m), DomainError);
  std::mt19937_64 rng(7);
  const Endo& st = f.gens.at("sigma_tau");
  EXPECT_EQ(relation_sign(*f.jac, st * st, Endo::identity(), 20, rng), -1);
  const Fq tau = f.constants.at("tau"), theta = f.constants.at("theta"), xi = f.constants.at("xi");
  EXPECT_EQ(theta.square(), theta + W->one());
  EXPECT_EQ(theta + tau, xi);
  EXPECT_EQ(tau.pow(std::uint64_t{8}), tau + W->one());
}

TEST(Endo, SigmaRelationSigns) {
  const auto& f = k12();
  const Jacobian& j = *f.jac;
  const auto& m = j.model();
  std::mt19937_64 rng(8);
  const Fq tau = f.constants.at("tau"), xi = f.constants.at("xi");
  const auto sigma = [&](const Fq& w) { return Endo::automorphism("s", build_sigma_omega(w, m), j); };
  const Endo a = sigma(tau), b = sigma(xi), ab = sigma(tau + xi);
  EXPECT_NE(relation_sign(j, a * b, ab, 20, rng), 0);
  EXPECT_NE(relation_sign(j, a * b, b * a, 20, rng), 0);
  EXPECT_EQ(relation_sign(j, a * sigma(j.field()->zero()), a, 20, rng), 1);
  const Endo pi = Endo::frobenius(1);
  EXPECT_NE(relation_sign(j, pi * a, sigma(tau.frobenius(f.q_exp)) * pi, 20, rng), 0);
}

TEST(Split, CompositionsAreDoubling) {
  const auto& f = k6();
  const SplitMaps& s = *f.split;
  std::mt19937_64 rng(9);
  const auto id = s.elliptic().identity();
  EXPECT_EQ(s.mu({id, id}), s.curve().identity());
  EXPECT_TRUE(s.f_push(Point::infinity()).at_infinity);
  for (int t = 0; t < 20; ++t) {
    const auto pq = s.random_pair(rng);
    EXPECT_EQ(s.mu_tilde(s.mu(pq), rng), s.mul(2, pq));
    const Divisor d = s.curve().random_divisor(s.curve().max_degree(), rng);
    EXPECT_EQ(s.mu(s.mu_tilde(d, rng)), s.curve().mul(2, d));
  }
}

TEST(Split, PullbackMatchesPreimagePoints) {
  const auto& f = k6();
  const SplitMaps& s = *f.split;
  const Jacobian& c = s.curve();
  const auto inf = c.defining_model().infinity_points();
  ASSERT_EQ(inf.size(), 2u);
  std::mt19937_64 rng(10);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const Point p = s.to_point(s.elliptic().random_divisor(12, rng));
    if (p.at_infinity || p.x.is_zero() || !p.x.field()->is_square(p.x)) continue;
    const auto pre = s.f_preimage(p);
    ASSERT_EQ(pre.size(), 2u);
    for (const Point& x : pre) EXPECT_EQ(s.f_push(x), p);
    const Divisor sum = c.add(c.difference(pre[0], inf[0]), c.difference(pre[1], inf[1]));
    EXPECT_EQ(s.f_pull(p), sum);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Split, ImagesOfGenerators) {
  const auto& f = k6();
  const SplitMaps& s = *f.split;
  const Jacobian& e = s.elliptic();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const auto pq = s.random_pair(rng);
    const auto& [P, Q] = pq;
    EXPECT_EQ(s.T(Endo::identity(), pq, rng), s.mul(2, pq));
    EXPECT_EQ(s.T(f.inner.at("pi"), pq, rng), s.mul(2, {s.frobenius(P), s.frobenius(Q)}));
    EXPECT_EQ(s.T(f.inner.at("chi"), pq, rng), s.mul(2, {Q, P}));
    EXPECT_EQ(s.T(f.inner.at("rho6"), pq, rng), (EllipticPair{e.mul(2, s.rho3(P)), e.mul(-2, s.rho3(s.rho3(Q)))}));
  }
}

TEST(Split, Multiplicativity) {
  const auto& f = k6();
  const SplitMaps& s = *f.split;
  std::mt19937_64 rng(12);
  const Endo pi = f.inner.at("pi"), chi = f.inner.at("chi"), rho = f.inner.at("rho6");
  for (const auto& [a, b] : {std::pair{pi, chi}, {rho, rho}, {Endo::identity(), Endo::identity()}})
    for (int t = 0; t < 5; ++t) {
      const auto pq = s.random_pair(rng);
      EXPECT_EQ(s.T(a, s.T(b, pq, rng), rng), s.mul(2, s.T(a * b, pq, rng)));
    }
}

TEST(Split, Projectors) {
  const auto& f = k6();
  const SplitMaps& s = *f.split;
  const Jacobian& e = s.elliptic();
  std::mt19937_64 rng(13);
  const Endo one = Endo::identity(), chi = f.inner.at("chi"), r3 = f.inner.at("rho6").pow(3);
  const Divisor O = e.identity();
  for (int t = 0; t < 10; ++t) {
    const auto pq = s.random_pair(rng);
    const Divisor P4 = e.mul(4, pq.first), Q4 = e.mul(4, pq.second);
    EXPECT_EQ(s.T(one + r3, pq, rng), (EllipticPair{P4, O}));
    EXPECT_EQ(s.T(one - r3, pq, rng), (EllipticPair{O, Q4}));
    EXPECT_EQ(s.T(chi + chi * r3, pq, rng), (EllipticPair{O, P4}));
    EXPECT_EQ(s.T(chi - chi * r3, pq, rng), (EllipticPair{Q4, O}));
  }
  EXPECT_EQ(s.T(one - r3, {s.random_pair(rng).first, O}, rng), (EllipticPair{O, O}));
  EXPECT_EQ(s.T(chi + chi * r3, {O, O}, rng), (EllipticPair{O, O}));
}
