#pragma once

#include <stdexcept>
#include <string>

namespace shimura {

/// A caller violated an operation's precondition (bad D, non-Hall m, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A quantity that must be an integer (a genus, a component count) came out
/// fractional. Always a formula or data bug, never rounded away.
class IntegralityError : public std::logic_error {
 public:
  explicit IntegralityError(const std::string& what) : std::logic_error(what) {}
};

/// Fixture file could not be parsed or failed load-time validation.
class FixtureError : public std::runtime_error {
 public:
  explicit FixtureError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

}  // namespace detail
}  // namespace shimura
