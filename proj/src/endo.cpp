// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "g2/endo.hpp"

#include "g2/error.hpp"
#include "g2/pairing.hpp"

namespace g2 {

void check_automorphism(const CurveIso& iso, const HyperellipticModel& m, int samples, std::uint64_t seed) {
  if (!(iso.transform(m) == m)) throw DomainError("automorphism does not preserve the model equation");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const Point p = random_affine_point(m, rng);
    if (!m.is_on_curve(iso.apply(p, m, m))) throw DomainError("automorphism maps a point off the curve");
  }
}

CurveIso to_arithmetic(const Jacobian& j, const CurveIso& aut) {
  if (!j.to_arith()) return aut;
  const CurveIso& iota = *j.to_arith();
  return iota.inverse().then(aut).then(iota);
}

struct Endo::Node {
  Kind kind;
  std::string name;
  BigInt n;
  unsigned j = 0;
  CurveIso iso, iso_inv;
  std::shared_ptr<const Jacobian> inner;
  std::shared_ptr<const Node> a, b;
};

namespace {

std::string power_name(const std::string& base, unsigned n) {
  return n == 1 ? base : base + "^" + std::to_string(n);
}

}  // namespace

Endo Endo::integer(const BigInt& n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Integer;
  node->n = n;
  node->name = to_string(n);
  return Endo(node);
}

Endo Endo::frobenius(unsigned j) {
  if (j == 0) return identity();
  auto node = std::make_shared<Node>();
  node->kind = Kind::Frobenius;
  node->j = j;
  node->name = power_name("pi", j);
  return Endo(node);
}

Endo Endo::automorphism(std::string name, const CurveIso& iso, const Jacobian& j) {
  check_automorphism(iso, j.model());
  auto node = std::make_shared<Node>();
  node->kind = Kind::Automorphism;
  node->name = std::move(name);
  node->iso = iso;
  return Endo(node);
}

Endo Endo::conjugated(std::string name, std::shared_ptr<const Jacobian> inner, const CurveIso& iso, const Endo& e) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Conjugated;
  node->name = "conj(" + name + ", " + e.name() + ")";
  node->iso = iso;
  node->iso_inv = iso.inverse();
  node->inner = std::move(inner);
  node->a = e.n_;
  return Endo(node);
}

Endo Endo::operator*(const Endo& o) const {
  if (is_identity()) return o;
  if (o.is_identity()) return *this;
  auto node = std::make_shared<Node>();
  node->kind = Kind::Compose;
  node->name = name() + "*" + o.name();
  node->a = n_;
  node->b = o.n_;
  return Endo(node);
}

Endo Endo::operator+(const Endo& o) const {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Add;
  node->name = name() + "+" + o.name();
  node->a = n_;
  node->b = o.n_;
  return Endo(node);
}

Endo Endo::operator-() const {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Negate;
  node->name = "-" + name();
  node->a = n_;
  return Endo(node);
}

Endo Endo::operator-(const Endo& o) const { return (*this + (-o)).renamed(name() + "-" + o.name()); }

Endo Endo::pow(unsigned n) const {
  if (n == 0) return identity();
  if (n_->kind == Kind::Frobenius) return frobenius(n_->j * n);
  Endo r = *this;
  for (unsigned i = 1; i < n; ++i) r = r * *this;
  if (n_->kind == Kind::Automorphism) r = r.renamed(power_name(name(), n));
  return r;
}

Endo Endo::renamed(std::string name) const {
  auto node = std::make_shared<Node>(*n_);
  node->name = std::move(name);
  return Endo(node);
}

Endo::Kind Endo::kind() const { return n_->kind; }
const std::string& Endo::name() const { return n_->name; }
bool Endo::is_identity() const { return n_->kind == Kind::Integer && n_->n == 1; }

Divisor Endo::apply(const Jacobian& j, const Divisor& d) const { return eval(j, d, false); }
Divisor Endo::apply_pointwise(const Jacobian& j, const Divisor& d) const { return eval(j, d, true); }

Divisor Endo::eval(const Jacobian& j, const Divisor& d, bool pointwise) const {
  const Node& n = *n_;
  const auto sub = [&](const std::shared_ptr<const Node>& c, const Jacobian& jj, const Divisor& x) {
    return Endo(c).eval(jj, x, pointwise);
  };
  switch (n.kind) {
    case Kind::Integer:
      return j.mul(n.n, d);
    case Kind::Frobenius:
      return j.frobenius(d, n.j);
    case Kind::Automorphism:
      return pointwise ? transport_via_points(n.iso, d, j.model(), j.model())
                       : transport(n.iso, d, j.model(), j.model());
    case Kind::Conjugated: {
      const Jacobian& in = *n.inner;
      const Divisor x = transport(n.iso_inv, d, j.model(), in.model());
      return transport(n.iso, sub(n.a, in, x), in.model(), j.model());
    }
    case Kind::Compose:
      return sub(n.a, j, sub(n.b, j, d));
    case Kind::Add:
      return j.add(sub(n.a, j, d), sub(n.b, j, d));
    case Kind::Negate:
      return j.neg(sub(n.a, j, d));
  }
  throw Error("unknown endomorphism kind");
}

bool agree_on_samples(const Jacobian& j, const Endo& a, const Endo& b, int samples, std::mt19937_64& rng) {
  for (int i = 0; i < samples; ++i) {
    const Divisor d = j.random_divisor(j.max_degree(), rng);
    if (!(a.apply(j, d) == b.apply(j, d))) return false;
  }
  return true;
}

int relation_sign(const Jacobian& j, const Endo& a, const Endo& b, int samples, std::mt19937_64& rng) {
  bool plus = true, minus = true;
  for (int i = 0; i < samples; ++i) {
    const Divisor d = j.random_divisor(j.max_degree(), rng);
    const Divisor x = a.apply(j, d), y = b.apply(j, d);
    plus = plus && x == y;
    minus = minus && x == j.neg(y);
  }
  if (plus && !minus) return 1;
  if (minus && !plus) return -1;
  return 0;
}

// ------------------------------------------------------ splitting maps --

SplitMaps::SplitMaps(std::shared_ptr<const Jacobian> c, std::shared_ptr<const Jacobian> e, Fq zeta3)
    : c_(std::move(c)), e_(std::move(e)), zeta3_(std::move(zeta3)) {
  if (!c_->to_arith()) throw DomainError("split maps: curve needs an arithmetic model");
  if (e_->genus() != 1) throw DomainError("split maps: second Jacobian must be elliptic");
  iota_ = *c_->to_arith();
  iota_inv_ = iota_.inverse();
  w_ = iota_inv_.apply(Point::infinity(), c_->model(), c_->defining_model());
  if (w_.at_infinity || !w_.y.is_zero()) throw DomainError("split maps: unexpected image of infinity");
}

Point SplitMaps::f_push(const Point& x) const {
  if (x.at_infinity) return Point::infinity();
  return Point::affine(x.x.square(), x.y);
}

Point SplitMaps::fprime_push(const Point& x) const {
  if (x.at_infinity) return Point::affine(x.y.field()->zero(), x.y);
  if (x.x.is_zero()) return Point::infinity();
  const Fq xi = x.x.inv();
  return Point::affine(xi.square(), x.y * xi.square() * xi);
}

Divisor SplitMaps::f_pull(const Point& p) const {
  if (p.at_infinity) return c_->identity();
  const Field* F = c_->field().get();
  const Divisor d{Poly(F, {-p.x, F->zero(), F->one()}), Poly::constant(p.y)};
  return transport(iota_, d, c_->defining_model(), c_->model());
}

Divisor SplitMaps::fprime_pull(const Point& q) const {
  if (q.at_infinity) return c_->identity();
  const Field* F = c_->field().get();
  if (q.x.is_zero()) {
    const Point a = iota_.apply(Point::infinity(q.y), c_->defining_model(), c_->model());
    return c_->mul(2, point_divisor(c_->model(), a));
  }
  const Fq xi = q.x.inv();
  const Divisor d{Poly(F, {-xi, F->zero(), F->one()}), Poly(F, {F->zero(), q.y * xi})};
  return transport(iota_, d, c_->defining_model(), c_->model());
}

std::vector<Point> SplitMaps::f_preimage(const Point& p) const {
  if (p.at_infinity) return c_->defining_model().infinity_points();
  const auto s = p.x.field()->sqrt(p.x);
  if (!s) throw DomainError("f_preimage: square root outside the working field");
  if (s->is_zero()) return {Point::affine(*s, p.y)};
  return {Point::affine(*s, p.y), Point::affine(-*s, p.y)};
}

Divisor SplitMaps::mu(const EllipticPair& pq) const {
  return c_->add(f_pull(to_point(pq.first)), fprime_pull(to_point(pq.second)));
}

Divisor SplitMaps::push_split(const Divisor& d, bool prime) const {
  const auto push = [&](const Point& x) { return from_point(prime ? fprime_push(x) : f_push(x)); };
  const auto sup = to_support(c_->model(), d);
  Divisor acc = e_->identity();
  int deg = 0;
  for (const auto& [p, n] : sup.points) {
    const Point x = iota_inv_.apply(p, c_->model(), c_->defining_model());
    acc = e_->add(acc, e_->mul(n, push(x)));
    deg += n;
  }
  return e_->sub(acc, e_->mul(deg, push(w_)));
}

namespace {

bool splits(const Divisor& d) {
  if (d.is_identity()) return true;
  unsigned total = 0;
  for (const auto& r : roots_deg2(d.u)) total += r.multiplicity;
  return static_cast<int>(total) == d.u.degree();
}

constexpr int kSplitRetries = 32;

}  // namespace

EllipticPair SplitMaps::mu_tilde(const Divisor& d, std::mt19937_64& rng) const {
  if (splits(d)) return {push_split(d, false), push_split(d, true)};
  const auto& m = c_->model();
  for (int attempt = 0; attempt < kSplitRetries; ++attempt) {
    Divisor r = c_->identity();
    for (int i = 0; i < m.genus(); ++i) r = c_->add(r, point_divisor(m, random_affine_point(m, rng)));
    const Divisor s = c_->add(d, r);
    if (!splits(r) || !splits(s)) continue;
    return {e_->sub(push_split(s, false), push_split(r, false)), e_->sub(push_split(s, true), push_split(r, true))};
  }
  throw Error("mu_tilde: no split representative found");
}

EllipticPair SplitMaps::T(const Endo& psi, const EllipticPair& pq, std::mt19937_64& rng) const {
  return mu_tilde(psi.apply(*c_, mu(pq)), rng);
}

Point SplitMaps::to_point(const Divisor& d) const {
  if (d.is_identity()) return Point::infinity();
  const Fq x = -d.u.coeff(0);
  return Point::affine(x, d.v.eval(x));
}

Divisor SplitMaps::from_point(const Point& p) const { return point_divisor(e_->model(), p); }

EllipticPair SplitMaps::add(const EllipticPair& a, const EllipticPair& b) const {
  return {e_->add(a.first, b.first), e_->add(a.second, b.second)};
}

EllipticPair SplitMaps::mul(const BigInt& n, const EllipticPair& a) const {
  return {e_->mul(n, a.first), e_->mul(n, a.second)};
}

Divisor SplitMaps::rho3(const Divisor& p) const {
  const Point q = to_point(p);
  if (q.at_infinity) return p;
  return from_point(Point::affine(zeta3_ * q.x, q.y));
}

EllipticPair SplitMaps::random_pair(std::mt19937_64& rng) const {
  const unsigned deg = e_->max_degree();
  return {e_->random_divisor(deg, rng), e_->random_divisor(deg, rng)};
}

// ------------------------------------------------- r-torsion matrices --

namespace {

using u64 = std::uint64_t;

u64 inv_mod(u64 a, u64 r) { return static_cast<u64>(powmod(BigInt(a), BigInt(r - 2), BigInt(r))); }

std::optional<Mat4> invert(const Mat4& m, u64 r) {
  std::array<std::array<u64, 8>, 4> a{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) a[i][k] = m[i][k] % r;
    a[i][4 + i] = 1;
  }
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int i = c; i < 4 && piv < 0; ++i)
      if (a[i][c]) piv = i;
    if (piv < 0) return std::nullopt;
    std::swap(a[c], a[piv]);
    const u64 iv = inv_mod(a[c][c], r);
    for (auto& x : a[c]) x = x * iv % r;
    for (int i = 0; i < 4; ++i) {
      if (i == c || !a[i][c]) continue;
      const u64 f = a[i][c];
      for (int k = 0; k < 8; ++k) a[i][k] = (a[i][k] + (r - f) * a[c][k]) % r;
    }
  }
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) out[i][k] = a[i][4 + k];
  return out;
}

u64 to_u64_mod_r(const BigInt& r) {
  if (r <= 4 || r >= (BigInt(1) << 32)) throw DomainError("r must lie in (4, 2^32)");
  return static_cast<u64>(r);
}

u64 dlog_pair(const Jacobian& j, const TorsionBasis& basis, const Divisor& a, const Divisor& b,
              std::mt19937_64& rng) {
  const Fq e = weil_pairing(j.model(), a, b, basis.r, rng);
  return static_cast<u64>(dlog_mu_r(basis.g, e, basis.r));
}

}  // namespace

TorsionBasis certify_basis(const Jacobian& j, const BigInt& r, const GroupStructure& gs, std::mt19937_64& rng,
                           int tries) {
  TorsionBasis basis;
  basis.r = to_u64_mod_r(r);
  basis.g = j.field()->root_of_unity(r);
  const int n = 2 * j.genus();
  if (n != 4) throw DomainError("certify_basis: genus 2 required");
  for (int t = 0; t < tries; ++t) {
    basis.b.clear();
    for (int i = 0; i < n; ++i) {
      const auto d = random_order_r(j, r, gs, j.max_degree(), rng);
      if (!d) throw Error("certify_basis: no r-torsion in the working field");
      basis.b.push_back(*d);
    }
    basis.gram = {};
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k) {
        const u64 v = dlog_pair(j, basis, basis.b[i], basis.b[k], rng);
        basis.gram[i][k] = v;
        basis.gram[k][i] = (basis.r - v) % basis.r;
      }
    if (const auto inv = invert(basis.gram, basis.r)) {
      basis.gram_inv = *inv;
      return basis;
    }
  }
  throw Error("certify_basis: Gram matrix stayed singular");
}

Mat4 endo_matrix_mod_r(const Jacobian& j, const Endo& e, const TorsionBasis& basis, std::mt19937_64& rng) {
  const u64 r = basis.r;
  Mat4 m{};
  for (int c = 0; c < 4; ++c) {
    const Divisor img = e.apply(j, basis.b[c]);
    std::array<u64, 4> w{};
    for (int k = 0; k < 4; ++k) w[k] = dlog_pair(j, basis, basis.b[k], img, rng);
    for (int i = 0; i < 4; ++i) {
      u64 acc = 0;
      for (int k = 0; k < 4; ++k) acc = (acc + basis.gram_inv[i][k] * w[k]) % r;
      m[i][c] = acc;
    }
  }
  return m;
}

Divisor combine(const Jacobian& j, const TorsionBasis& basis, const std::array<std::uint64_t, 4>& c) {
  Divisor acc = j.identity();
  for (int i = 0; i < 4; ++i) acc = j.add(acc, j.mul(c[i], basis.b[i]));
  return acc;
}

std::vector<std::uint64_t> charpoly_mod_r(const Mat4& a, std::uint64_t r) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<u64> c(5, 0);
  c[4] = 1;
  Mat4 m{};
  for (int k = 1; k <= 4; ++k) {
    Mat4 am{};
    for (int i = 0; i < 4; ++i)
      for (int l = 0; l < 4; ++l) {
        u64 acc = 0;
        for (int t = 0; t < 4; ++t) acc = (acc + a[i][t] % r * m[t][l]) % r;
        am[i][l] = acc;
      }
    for (int i = 0; i < 4; ++i) am[i][i] = (am[i][i] + c[5 - k]) % r;
    m = am;
    u64 tr = 0;
    for (int i = 0; i < 4; ++i)
      for (int t = 0; t < 4; ++t) tr = (tr + a[i][t] % r * m[t][i]) % r;
    c[4 - k] = (r - tr * inv_mod(static_cast<u64>(k), r) % r) % r;
  }
  return c;
}

unsigned span_rank(const std::vector<Mat4>& ms, std::uint64_t r) {
  std::vector<std::array<u64, 16>> rows;
  for (const auto& m : ms) {
    std::array<u64, 16> row{};
    for (int i = 0; i < 16; ++i) row[i] = m[i / 4][i % 4] % r;
    rows.push_back(row);
  }
  unsigned rank = 0;
  for (int col = 0; col < 16 && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const u64 iv = inv_mod(rows[rank][col], r);
    for (auto& x : rows[rank]) x = x * iv % r;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const u64 f = rows[i][col];
      for (int k = 0; k < 16; ++k) rows[i][k] = (rows[i][k] + (r - f) * rows[rank][k]) % r;
    }
    ++rank;
  }
  return rank;
}

// -------------------------------------------------- distortion search --

Fq pairing_value(PairingKind k, const Jacobian& j, const Divisor& d1, const Divisor& d2, const BigInt& r,
                 std::mt19937_64& rng) {
  return k == PairingKind::Tate ? tate_pairing(j.model(), d1, d2, r, rng) : weil_pairing(j.model(), d1, d2, r, rng);
}

std::optional<std::size_t> distortion_search(const Jacobian& j, const Divisor& d1, const Divisor& d2,
                                             const std::vector<Endo>& catalog, PairingKind k, const BigInt& r,
                                             std::mt19937_64& rng) {
  for (std::size_t i = 0; i < catalog.size(); ++i)
    if (!pairing_value(k, j, d1, catalog[i].apply(j, d2), r, rng).is_one()) return i;
  return std::nullopt;
}

}  // namespace g2
