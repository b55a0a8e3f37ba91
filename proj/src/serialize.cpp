// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "g2/serialize.hpp"

#include "g2/error.hpp"

namespace g2 {

json fq_to_json(const Fq& a) { return a.coeffs(); }

Fq fq_from_json(const json& j, const Field* f) {
  if (!j.is_array() || j.size() != f->degree()) throw DomainError("field element must have " + std::to_string(f->degree()) + " coefficients");
  std::vector<std::uint64_t> c;
  for (const auto& x : j) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
      throw DomainError("coefficients must be non-negative integers");
    const auto v = x.get<std::uint64_t>();
    if (v >= f->characteristic()) throw DomainError("coefficient out of range");
    c.push_back(v);
  }
  return f->from_coeffs(c);
}

json poly_to_json(const Poly& p) {
  json out = json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(fq_to_json(p.coeff(i)));
  return out;
}

Poly poly_from_json(const json& j, const Field* f) {
  if (!j.is_array()) throw DomainError("polynomial must be an array of coefficients");
  std::vector<Fq> c;
  for (const auto& x : j) c.push_back(fq_from_json(x, f));
  return Poly(f, std::move(c));
}

json divisor_to_json(const Divisor& d) {
  return {{"u", poly_to_json(d.u)}, {"v", poly_to_json(d.v)}, {"field_degree", d.u.field()->degree()}};
}

Divisor divisor_from_json(const json& j, const Jacobian& jac) {
  if (!j.is_object() || !j.contains("u") || !j.contains("v") || !j.contains("field_degree"))
    throw DomainError("divisor needs keys u, v, field_degree");
  const Field* f = jac.field().get();
  if (!j["field_degree"].is_number_integer() || j["field_degree"].get<std::int64_t>() != static_cast<std::int64_t>(f->degree()))
    throw DomainError("field_degree does not match the working field (" + std::to_string(f->degree()) + ")");
  Divisor d{poly_from_json(j["u"], f), poly_from_json(j["v"], f)};
  if (!jac.is_valid(d)) throw DomainError("not a reduced divisor on this curve");
  return d;
}

}  // namespace g2
