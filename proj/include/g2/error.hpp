// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace g2 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different fields, curves or Jacobians.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition (bad prime, bad congruence, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An evaluation point hit a zero or pole of a function being evaluated.
/// Callers re-randomise the representative and retry.
class SupportCollision : public Error {
 public:
  SupportCollision() : Error("support collision") {}
};

}  // namespace g2
