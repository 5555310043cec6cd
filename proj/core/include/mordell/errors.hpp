#pragma once

#include <stdexcept>
#include <string>

namespace mordell {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// argument outside the documented domain of an operation
struct DomainError : Error {
  using Error::Error;
};

// evaluation at a pole (Gamma at non-positive integers, zeta at 1, ...)
struct PoleError : Error {
  using Error::Error;
};

// result magnitude exceeds double range; caller should move to log scale
struct OverflowError : Error {
  using Error::Error;
};

// a series or adaptive scheme failed to meet its tolerance within budget
struct ConvergenceError : Error {
  using Error::Error;
};

// integrand returned a non-finite value away from its removable point
struct SingularityError : Error {
  using Error::Error;
};

// no built-in real primitive character for the requested modulus
struct UnsupportedModulusError : Error {
  using Error::Error;
};

// optimal truncation asked for a series evaluated far outside its regime
struct DegenerateSeriesError : Error {
  using Error::Error;
};

}  // namespace mordell
