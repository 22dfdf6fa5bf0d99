#pragma once

#include <stdexcept>
#include <string>

namespace ccx {

// A malformed document, argument, or precondition failure on user input.
struct invalid_input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A verified property failed on valid input. Carries a printable witness.
struct check_violation : std::runtime_error {
  std::string witness;
  check_violation(const std::string& what, std::string w)
      : std::runtime_error(what), witness(std::move(w)) {}
};

// A configured cap (vertex count, geodesic count, search nodes) was exceeded.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two routes that must agree disagreed, or an invariant broke. Always a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ccx
