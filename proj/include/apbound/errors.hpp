// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace apbound {

// Raised when a brute-force enumeration would exceed the configured cap.
// Callers must treat this as a resource error, never as a silent truncation.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised by omega projection when the input polynomial is not affine
// invariant. Carries the first offending monomial pair in the message.
struct not_invariant : std::runtime_error {
  explicit not_invariant(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace apbound
