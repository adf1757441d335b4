#pragma once

#include <stdexcept>
#include <string>

namespace zdcert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain where the quantity is defined or reachable.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameter tuple violates a structural invariant (ordering, positivity, caps).
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// A zero-density context for which the requested bound is vacuous.
class InadmissibleContext : public Error {
 public:
  using Error::Error;
};

/// Malformed run configuration or unknown key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace zdcert
