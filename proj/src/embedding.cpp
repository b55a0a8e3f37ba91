// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "g2/error.hpp"
#include "g2/field.hpp"
#include "g2/poly.hpp"

namespace g2 {
namespace {

Fq smallest_modulus_root(const Field& src, const Field& dst) {
  if (src.characteristic() != dst.characteristic()) throw MismatchError("embedding between different characteristics");
  if (dst.degree() % src.degree() != 0) throw DomainError("embedding: source degree does not divide target degree");
  std::vector<Fq> c;
  for (auto m : src.modulus()) c.push_back(dst.from_int(static_cast<std::int64_t>(m)));
  const auto roots = find_roots(Poly(&dst, std::move(c)));
  if (roots.empty()) throw DomainError("embedding: source modulus has no root in target");
  return roots.front();
}

}  // namespace

TowerEmbedding::TowerEmbedding(FieldPtr source, FieldPtr target)
    : TowerEmbedding(source, target, smallest_modulus_root(*source, *target)) {}

TowerEmbedding::TowerEmbedding(FieldPtr source, FieldPtr target, Fq image_of_generator)
    : src_(std::move(source)), dst_(std::move(target)), img_(image_of_generator) {
  if (!img_.valid() || !img_.field()->same_spec(*dst_)) throw MismatchError("embedding image not in target field");
  std::vector<Fq> c;
  for (auto m : src_->modulus()) c.push_back(dst_->from_int(static_cast<std::int64_t>(m)));
  if (!Poly(dst_.get(), std::move(c)).eval(img_).is_zero())
    throw DomainError("embedding image is not a root of the source modulus");
  Fq p = dst_->one();
  for (unsigned i = 0; i < src_->degree(); ++i) {
    powers_.push_back(p);
    p *= img_;
  }
}

Fq TowerEmbedding::operator()(const Fq& a) const {
  if (!a.valid() || !a.field()->same_spec(*src_)) throw MismatchError("embedding input not in source field");
  Fq r = dst_->zero();
  for (unsigned i = 0; i < src_->degree(); ++i) {
    const auto c = a.coeff(i);
    if (c) r += powers_[i] * dst_->from_int(static_cast<std::int64_t>(c));
  }
  return r;
}

}  // namespace g2
