// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Miller functions, reduced Tate and Weil pairings on odd-degree models
// (genus 1 or 2), and discrete logarithms in mu_r.

#pragma once

#include <random>

#include "g2/jacobian.hpp"

namespace g2 {

/// f(ev) where div(f) = r*D - [r*D] with [r*D] = 0.  Throws DomainError
/// unless r*D is the identity, and SupportCollision when ev meets the
/// support of an intermediate function.
FnValue miller_eval(const HyperellipticModel& m, const Divisor& d, const BigInt& r, const EvalDivisor& ev);

/// Random affine point of the model over its full field.
Point random_affine_point(const HyperellipticModel& m, std::mt19937_64& rng);

/// Reduced Tate pairing f_{D1}(D2')^((Q - 1)/r), Q the model field size.
Fq tate_pairing(const HyperellipticModel& m, const Divisor& d1, const Divisor& d2, const BigInt& r,
                std::mt19937_64& rng);

/// Weil pairing f_{D1'}(D2') / f_{D2'}(D1') with affine representatives.
Fq weil_pairing(const HyperellipticModel& m, const Divisor& d1, const Divisor& d2, const BigInt& r,
                std::mt19937_64& rng);

/// e with g^e = h for g of order r (baby-step giant-step).
BigInt dlog_mu_r(const Fq& g, const Fq& h, const BigInt& r);

}  // namespace g2
