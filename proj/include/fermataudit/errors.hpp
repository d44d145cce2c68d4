#pragma once

#include <stdexcept>

namespace fermataudit {

// Violation of an operation's mathematical domain (division by zero,
// zero polynomial, k > n, negative radicand, ...).
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Invalid caller-supplied parameters (p not an odd prime, u outside (0,1),
// malformed rational string, ...).
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A certification could not be established at the requested epsilon;
// the message names the remedy (retry with a smaller epsilon).
struct tolerance_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fermataudit
