#pragma once

#include <stdexcept>
#include <string>

namespace bsvy {

/// Bad user input: unknown ids, parameters outside their documented range,
/// violated preconditions. The CLI maps this to exit status 2.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine could not produce a trustworthy value (non-bracketing
/// bisection, singular normal system, non-convergent sequence).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two quadrature resolutions disagree beyond tolerance. Exit status 3.
class QuadratureInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

}  // namespace bsvy
