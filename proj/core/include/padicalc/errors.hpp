#pragma once

#include <stdexcept>
#include <string>

namespace padic {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on the mathematical domain was violated
/// (non-unit inversion, element outside a convergence domain, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Not enough tracked precision to carry out the requested operation.
class PrecisionError : public Error {
public:
  explicit PrecisionError(const std::string& what) : Error(what) {}
};

/// An internal or input invariant failed (mismatched primes, bad
/// structure constants, integrality violations, ...).
class InvariantError : public Error {
public:
  explicit InvariantError(const std::string& what) : Error(what) {}
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace padic
