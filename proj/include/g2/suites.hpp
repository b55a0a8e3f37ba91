// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Verification suites over a family instance, distortion searches and
// their JSON reports.  Every result depends only on the instance, the
// sample counts and the seed.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2/catalog.hpp"
#include "g2/serialize.hpp"

namespace g2 {

struct Check {
  std::string name;
  bool pass = false;
  json witness;
};

json to_json(const Check& c);

/// Names accepted by run_suite, in report order.
const std::vector<std::string>& suite_names();
/// Whether a suite applies to the family (e.g. "split" only to k6).
bool suite_applies(const std::string& suite, FamilyTag t);

/// Runs one suite with `samples` samples per check and an rng seeded with
/// `seed`.  Throws DomainError for unknown or inapplicable suites.
std::vector<Check> run_suite(const std::string& suite, const FamilyInstance& inst, int samples, std::uint64_t seed);

/// Miller-function oracle: f_{r,D}(div l) against prod l^{r n_P} over the
/// support of D, for l = (x - c1)/(x - c2) with random c1, c2.
bool reciprocity_holds(const HyperellipticModel& m, const Divisor& d, const BigInt& r, std::mt19937_64& rng);

/// Static description of an instance: field, curve, orders, catalog.
json info_json(const FamilyInstance& inst);

struct DistortionRun {
  int pairs = 0, found = 0;
  std::map<std::string, int> histogram;       // catalog name -> hits
  std::map<std::string, int> found_by_kind;   // pair kind -> hits
  std::map<std::string, int> tried_by_kind;
  std::vector<json> failures;                 // first few unresolved pairs
  int failure_count = 0;

  double success_rate() const { return pairs ? static_cast<double>(found) / pairs : 0.0; }
  json to_json() const;
};

/// Pair kinds cycled by distortion_run.
const std::vector<std::string>& pair_kinds();

/// Samples `pairs` pairs of order-r classes, cycling through pair_kinds(),
/// and searches the instance's distortion catalog for each.
DistortionRun distortion_run(const FamilyInstance& inst, int pairs, PairingKind kind, std::uint64_t seed);

/// Pairing of two classes with the checks a caller needs to interpret it.
json pairing_json(const FamilyInstance& inst, const Divisor& d1, const Divisor& d2, PairingKind kind,
                  std::uint64_t seed);

}  // namespace g2
