#pragma once

#include <stdexcept>
#include <string>

namespace fairdiv {

/// Malformed files, unknown names, out-of-range indices, bad parameters.
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was invoked on an instance it is not defined for
/// (e.g. a common-valuation algorithm on a general instance).
/// Also mapped to exit code 2; the message names the precondition.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fairdiv
