#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace compmat {

/// A precondition on user input failed: wrong ring, degree, or shape.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input (polynomial, ring spec, word).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation contradicted an identity that holds unconditionally.
/// Carries a dump of the inputs and both sides of the failed comparison.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what, std::string dump = {})
      : std::logic_error(what), dump_(std::move(dump)) {}

  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

}  // namespace compmat
