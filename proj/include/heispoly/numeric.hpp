#pragma once

#include <complex>
#include <stdexcept>

namespace heispoly {

using CF64 = std::complex<double>;

/// Raised when a quadrature or oracle evaluation fails to converge or
/// produces a non-finite value. Never swallowed: callers either handle it or
/// it reaches the process boundary as a numerical failure.
class numerical_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace heispoly
