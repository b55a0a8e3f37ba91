// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

// JSON forms of field elements, polynomials and divisor classes.
// A divisor is {"u": [...], "v": [...], "field_degree": n}; each polynomial
// coefficient is the coefficient list of a field element, low degree first.

#pragma once

#include <json.hpp>

#include "g2/jacobian.hpp"

namespace g2 {

using nlohmann::json;

json fq_to_json(const Fq& a);
Fq fq_from_json(const json& j, const Field* f);
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j, const Field* f);

json divisor_to_json(const Divisor& d);
/// Throws DomainError on malformed input, a field-degree mismatch, or a
/// pair that is not a reduced divisor on the Jacobian's model.
Divisor divisor_from_json(const json& j, const Jacobian& jac);

}  // namespace g2
