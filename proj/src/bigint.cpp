// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "g2/bigint.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <random>

#include "g2/error.hpp"

namespace g2 {

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n < (BigInt(1) << 40)) {
    const auto v = n.convert_to<std::uint64_t>();
    for (std::uint64_t d = 3; d * d <= v; d += 2)
      if (v % d == 0) return false;
    return true;
  }
  std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
  return boost::multiprecision::miller_rabin_test(n, 40, gen);
}

Factorization factor(const BigInt& n) {
  if (n < 1) throw DomainError("factor: argument must be positive");
  Factorization out;
  BigInt m = n;
  auto strip = [&](const BigInt& d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  };
  strip(2);
  for (std::uint64_t d = 3; d < (1u << 21); d += 2) {
    if (BigInt(d) * d > m) break;
    strip(d);
  }
  if (m > 1) {
    if (!is_prime(m)) throw DomainError("factor: cofactor " + to_string(m) + " not factored");
    out.emplace_back(m, 1);
  }
  return out;
}

BigInt ipow(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  return boost::multiprecision::powm(mod_floor(base, mod), exp, mod);
}

unsigned multiplicative_order(const BigInt& q, const BigInt& r) {
  const BigInt qr = mod_floor(q, r);
  if (qr == 0) throw DomainError("multiplicative_order: gcd(q, r) != 1");
  BigInt acc = qr;
  unsigned k = 1;
  while (acc != 1) {
    acc = (acc * qr) % r;
    ++k;
  }
  return k;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt t = a % m;
  if (t < 0) t += m;
  return t;
}

std::string to_string(const BigInt& n) { return n.str(); }

}  // namespace g2
