// Copyright 2026 The qmagic authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qmagic {

// Invalid configuration or input data (CLI exit code 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A size/memory guard was exceeded (CLI exit code 3).
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical-integrity check failed, e.g. a tolerance breach that signals a
// bug rather than statistical noise (CLI exit code 4).
struct NumericsError : std::runtime_error {
  explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr double kDefaultTol = 1e-9;

}  // namespace qmagic
