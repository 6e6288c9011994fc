#ifndef GSTONE_ERRORS_HPP_
#define GSTONE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gstone {

// Malformed or unknown input data (bad identifiers, ragged tables, broken
// JSON). CLI exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A stated operation precondition does not hold for otherwise well-formed
// input. Also maps to CLI exit code 2.
struct PreconditionError : InputError {
  explicit PreconditionError(const std::string& what) : InputError(what) {}
};

// An enumeration guard would be exceeded. CLI exit code 3.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gstone

#endif  // GSTONE_ERRORS_HPP_
