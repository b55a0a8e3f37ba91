// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace g2 {

using BigInt = boost::multiprecision::cpp_int;

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<BigInt, unsigned>>;

bool is_prime(const BigInt& n);

/// Trial division up to 2^21 followed by a probable-prime test on the
/// cofactor. Throws DomainError if a composite cofactor remains.
Factorization factor(const BigInt& n);

BigInt ipow(const BigInt& base, unsigned exp);
BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& mod);

/// Multiplicative order of q modulo r (r prime, gcd(q, r) = 1).
unsigned multiplicative_order(const BigInt& q, const BigInt& r);

/// Nonnegative residue of a modulo m.
BigInt mod_floor(const BigInt& a, const BigInt& m);

std::string to_string(const BigInt& n);

}  // namespace g2
