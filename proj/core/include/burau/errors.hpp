#pragma once

#include <stdexcept>
#include <string>

namespace burau {

// Base class for all domain errors raised by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed the configured memory cap.
// Callers are expected to report this (e.g. as a skipped verification),
// not to treat it as a crash.
class capacity_error : public error {
 public:
  using error::error;
};

}  // namespace burau
