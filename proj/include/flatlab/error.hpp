#pragma once

#include <stdexcept>
#include <string>

namespace flatlab {

/// All operations report contract violations and numerical failures by
/// throwing; the CLI maps exception categories to exit codes.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed inputs: bad grids, bad files, out-of-range parameters (exit 2).
class InputError : public Error {
  public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// Numerical failures: solver non-convergence, lost positivity,
/// degenerate immersions (exit 3).
class NumericalError : public Error {
  public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

}  // namespace flatlab
