#pragma once

#include <stdexcept>
#include <string>

namespace sgmtopo {

/// Input violates a documented precondition (bad shape, bad parameter, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Data that passed validation turned out to be mutually inconsistent,
/// e.g. a sequence claimed exact that is not.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded enumeration would exceed its configured limit.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sgmtopo
