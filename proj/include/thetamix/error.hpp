#pragma once

#include <stdexcept>
#include <string>

namespace thetamix {

/// Base class for every runtime or physics error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands carry incompatible Gaussian-CGS dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An input lies outside the domain of an operation (r <= 0, |theta| too
/// large, unbound pair, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed command-line or config input. Maps to exit code 2 in the CLI.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace thetamix
