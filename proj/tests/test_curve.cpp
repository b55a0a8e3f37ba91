#include <gtest/gtest.h>

#include <random>

#include "g2/curve.hpp"
#include "g2/error.hpp"

using namespace g2;

namespace {
HyperellipticModel odd_model(std::uint64_t p, unsigned n, std::initializer_list<std::int64_t> f) {
  auto F = Field::build(p, n);
  return HyperellipticModel(F, Poly(F.get()), Poly::from_ints(F.get(), f));
}

// Independent count: all (x, y) pairs plus infinity points found by
// brute force over the same field.
BigInt brute_count(const HyperellipticModel& m) {
  const Field* F = m.field().get();
  BigInt n = 0;
  for (BigInt i = 0; i < F->order(); ++i)
    for (BigInt j = 0; j < F->order(); ++j)
      if (m.is_on_curve(Point::affine(F->element_at(i), F->element_at(j)))) ++n;
  if (m.odd_degree()) return n + 1;
  for (BigInt j = 0; j < F->order(); ++j)
    if (m.is_on_curve(Point::infinity(F->element_at(j)))) ++n;
  return n;
}

BigInt jacobian_order_from_counts(const HyperellipticModel& m) {
  const BigInt n1 = m.count_points_naive(1), n2 = m.count_points_naive(2);
  const BigInt q = m.field()->order();
  return (n1 * n1 + n2) / 2 - q;
}
}  // namespace

TEST(Curve, IsOnCurveExamples) {
  auto c = odd_model(7, 1, {1, 0, 0, 0, 0, 1});
  const Field* F = c.field().get();
  EXPECT_TRUE(c.is_on_curve(Point::affine(F->zero(), F->one())));
  EXPECT_FALSE(c.is_on_curve(Point::affine(F->zero(), F->from_int(2))));
  auto F2 = Field::build(2, 1);
  HyperellipticModel k12(F2, Poly::from_ints(F2.get(), {1}), Poly::from_ints(F2.get(), {0, 0, 0, 1, 0, 1}));
  EXPECT_TRUE(k12.is_on_curve(Point::affine(F2->zero(), F2->zero())));
}

TEST(Curve, NaiveCounts) {
  auto c = odd_model(7, 1, {1, 0, 0, 0, 0, 1});
  EXPECT_EQ(c.count_points_naive(1), 8);
  EXPECT_EQ(c.count_points_naive(2), 50);
  auto e = odd_model(11, 1, {1, 0, 0, 1});
  EXPECT_EQ(e.genus(), 1);
  EXPECT_EQ(e.count_points_naive(1), 12);
  EXPECT_THROW(c.count_points_naive(8), DomainError);
}

TEST(Curve, NaiveCountMatchesBruteForce) {
  std::vector<HyperellipticModel> models = {odd_model(7, 1, {1, 0, 0, 0, 0, 1}), odd_model(5, 2, {1, -1, 0, 0, 0, 1}),
                                            odd_model(11, 1, {1, 0, 0, 0, 0, 0, 1}), odd_model(3, 2, {2, 0, 1, 0, 0, 0, 2})};
  auto F = Field::build(2, 4);
  models.emplace_back(F, Poly::from_ints(F.get(), {1}), Poly::from_ints(F.get(), {1, 0, 0, 1, 0, 1}));
  for (const auto& m : models) EXPECT_EQ(m.count_points_naive(1), brute_count(m)) << m.to_text();
}

TEST(Curve, JacobianOrdersFromCounts) {
  EXPECT_EQ(jacobian_order_from_counts(odd_model(7, 1, {1, 0, 0, 0, 0, 1})), 50);
  EXPECT_EQ(jacobian_order_from_counts(odd_model(13, 1, {1, 0, 0, 0, 0, 1})), 170);
  // y^2 = x^5 - x + b over F_5.  The two signs of b are isomorphic via
  // (x, y) -> (-x, i y) with i^2 = -1 in F_5, so both give the same order.
  const BigInt plus = jacobian_order_from_counts(odd_model(5, 1, {1, -1, 0, 0, 0, 1}));
  const BigInt minus = jacobian_order_from_counts(odd_model(5, 1, {-1, -1, 0, 0, 0, 1}));
  EXPECT_EQ(plus, minus);
  EXPECT_EQ(plus, 71);
}

TEST(Curve, Involution) {
  auto c = odd_model(7, 1, {1, 0, 0, 0, 0, 1});
  const Field* F = c.field().get();
  const Point p = Point::affine(F->from_int(2), F->zero());
  const Point q = Point::affine(F->zero(), F->one());
  EXPECT_EQ(c.involution(q), Point::affine(F->zero(), F->from_int(6)));
  EXPECT_EQ(c.involution(c.involution(q)), q);
  auto F2 = Field::build(2, 3);
  HyperellipticModel k12(F2, Poly::from_ints(F2.get(), {1}), Poly::from_ints(F2.get(), {0, 0, 0, 1, 0, 1}));
  const Point r = Point::affine(F2->zero(), F2->zero());
  EXPECT_EQ(k12.involution(r), Point::affine(F2->zero(), F2->one()));
  // Weierstrass points are the fixed points.
  for (BigInt i = 0; i < 7; ++i)
    for (const auto& pt : c.lift_x(F->element_at(i))) EXPECT_EQ(c.involution(pt) == pt, pt.y.is_zero());
  (void)p;
}

TEST(Curve, NonsingularFamilies) {
  EXPECT_TRUE(odd_model(7, 1, {1, 0, 0, 0, 0, 1}).is_nonsingular());
  EXPECT_TRUE(odd_model(5, 1, {1, -1, 0, 0, 0, 1}).is_nonsingular());
  EXPECT_TRUE(odd_model(11, 1, {1, 0, 0, 0, 0, 0, 1}).is_nonsingular());
  EXPECT_FALSE(odd_model(7, 1, {0, 0, 1, 0, 0, 1}).is_nonsingular());
  auto F2 = Field::build(2, 5);
  for (int b : {0, 1}) {
    HyperellipticModel m(F2, Poly::from_ints(F2.get(), {1}), Poly::from_ints(F2.get(), {b, 0, 0, 1, 0, 1}));
    EXPECT_TRUE(m.is_nonsingular());
  }
}

TEST(CurveIso, TransformApplyComposeInverse) {
  std::mt19937_64 rng(17);
  for (auto [p, n] : {std::pair{7u, 2u}, {2u, 6u}}) {
    auto F = Field::build(p, n);
    const Field* f = F.get();
    HyperellipticModel src = p == 2 ? HyperellipticModel(F, Poly::from_ints(f, {1}), Poly::from_ints(f, {1, 0, 0, 1, 0, 1}))
                                    : HyperellipticModel(F, Poly(f), Poly::from_ints(f, {1, 0, 0, 0, 0, 1}));
    for (int t = 0; t < 6; ++t) {
      CurveIso i1{f->random(rng), f->random(rng), f->random(rng), f->random(rng), f->random(rng) + f->one(),
                  Poly(f, {f->random(rng), f->random(rng), f->random(rng), f->random(rng)})};
      if (i1.det().is_zero() || i1.e.is_zero()) continue;
      const HyperellipticModel dst = i1.transform(src);
      EXPECT_TRUE(i1.inverse().transform(dst) == src);
      EXPECT_TRUE(i1.then(i1.inverse()).equivalent(CurveIso::identity(f)));
      for (BigInt k = 0; k < 20; ++k) {
        for (const auto& pt : src.lift_x(f->element_at(k))) {
          const Point q = i1.apply(pt, src, dst);
          EXPECT_TRUE(dst.is_on_curve(q));
          EXPECT_EQ(i1.inverse().apply(q, dst, src), pt);
        }
      }
      for (const auto& pt : src.infinity_points()) {
        const Point q = i1.apply(pt, src, dst);
        EXPECT_TRUE(dst.is_on_curve(q));
        EXPECT_EQ(i1.inverse().apply(q, dst, src), pt);
      }
      CurveIso i2{f->random(rng), f->random(rng), f->random(rng), f->random(rng), f->one(), Poly(f, {f->random(rng)})};
      if (i2.det().is_zero()) continue;
      const HyperellipticModel dst2 = i2.transform(dst);
      EXPECT_TRUE(i1.then(i2).transform(src) == dst2);
      for (BigInt k = 0; k < 10; ++k)
        for (const auto& pt : src.lift_x(f->element_at(k))) {
          const Point q = i1.apply(pt, src, dst);
          const bool ok = q.at_infinity || !(i2.c * q.x + i2.d).is_zero();
          if (ok && !(i1.c * pt.x + i1.d).is_zero()) EXPECT_EQ(i1.then(i2).apply(pt, src, dst2), i2.apply(q, dst, dst2));
        }
    }
  }
}

TEST(Twist, ConstructP5AndP11) {
  for (std::uint64_t p : {5u, 11u}) {
    const TwistData t = construct_twist(p);
    EXPECT_FALSE(t.a * t.d - t.b * t.c == t.sextic->zero());
    EXPECT_EQ(t.gamma.pow(BigInt(p * p - 1)), t.zeta3);
    const Fq ratio = t.c / t.d;
    EXPECT_NE(ratio.frobenius(1), ratio);
    EXPECT_EQ(ratio.frobenius(2), ratio);
    EXPECT_EQ(t.model.degree(), 6);
    EXPECT_TRUE(t.model.is_nonsingular());
  }
  const TwistData t5 = construct_twist(5);
  EXPECT_EQ(jacobian_order_from_counts(t5.model), 21);
  const TwistData t11 = construct_twist(11);
  EXPECT_EQ(jacobian_order_from_counts(t11.model), 111);
  EXPECT_THROW(construct_twist(7), DomainError);
  EXPECT_THROW(construct_twist(2), DomainError);
}

TEST(Twist, FrobeniusConjugateIsUComposedWithPhi) {
  // phi^(p) = u ∘ phi with u(x, y) = (zeta3/x, y/x^3), checked on points.
  for (std::uint64_t p : {5u, 11u}) {
    const TwistData t = construct_twist(p);
    const Field* S = t.sextic.get();
    const CurveIso u{S->zero(), t.zeta3, S->one(), S->zero(), S->one(), Poly(S)};
    const TowerEmbedding emb(t.base, t.sextic);
    const HyperellipticModel src = t.model.base_change(emb);
    EXPECT_TRUE(u.transform(t.target) == t.target);
    EXPECT_TRUE(t.phi.frobenius(1).equivalent(t.phi.then(u)));
    int checked = 0;
    for (BigInt k = 0; k < 40; ++k)
      for (const auto& pt : src.lift_x(S->element_at(k))) {
        const Point lhs = t.phi.frobenius(1).apply(pt, src, t.target);
        const Point rhs = u.apply(t.phi.apply(pt, src, t.target), t.target, t.target);
        EXPECT_EQ(lhs, rhs);
        ++checked;
      }
    EXPECT_GT(checked, 0);
  }
}
