#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkspec {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the supported domain (integer width, alpha range, ...).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input (bad spec, reducible modulus, non-prime where a prime is required).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Integer result does not fit the working width.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Factorization gave up after spending its configured effort.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Group enumeration (or element powering) ran past its cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t found) : Error(what), found_(found) {}

  /// Number of elements (or powers) produced before giving up.
  std::size_t found() const noexcept { return found_; }

 private:
  std::size_t found_;
};

}  // namespace gkspec
