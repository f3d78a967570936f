// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace tetraprop {

/// Input that violates a documented precondition (bad chart, mismatched
/// spaces, parameters out of range).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested method does not exist for the given space.
class Unavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

}  // namespace tetraprop
