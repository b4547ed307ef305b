#pragma once

#include <complex>
#include <stdexcept>

namespace opke {

using Complex = std::complex<double>;

/// A violated mathematical hypothesis or malformed input (CLI exit code 2).
struct hypothesis_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A numerical process that failed to reach its target (CLI exit code 1).
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace opke
