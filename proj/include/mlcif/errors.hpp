#pragma once

#include <stdexcept>

namespace mlcif {

// Bad argument values (out-of-range parameters, malformed literals, ...).
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A precondition that callers must establish was violated.
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A configured search/enumeration budget was exceeded.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mlcif
