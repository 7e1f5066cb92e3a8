// errors.hpp
// Exception types shared across the toolkit. The CLI maps these onto
// exit codes: domain/validity errors -> 1, capacity errors -> 2.

#pragma once

#include <stdexcept>
#include <string>

namespace ptomo {

// Input violates an operation's mathematical precondition.
using domain_error = std::domain_error;

// Request exceeds a configured dense/enumeration size limit.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Parameters fall outside the validity window of a closed-form bound.
class validity_error : public std::domain_error {
 public:
  explicit validity_error(const std::string& what) : std::domain_error(what) {}
};

// Restriction to a subspace carrying (numerically) zero weight.
class degenerate_restriction_error : public std::domain_error {
 public:
  explicit degenerate_restriction_error(const std::string& what)
      : std::domain_error(what) {}
};

// A learner broke its declared trace-distance budget mid-protocol.
class protocol_violation_error : public std::runtime_error {
 public:
  explicit protocol_violation_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace ptomo
