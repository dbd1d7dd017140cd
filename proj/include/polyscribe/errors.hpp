#pragma once

#include <stdexcept>
#include <string>

namespace polyscribe {

/// Bad input data or violated operation precondition.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A configured resource guard (cycle cap, iteration cap) was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An iterative solver failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polyscribe
