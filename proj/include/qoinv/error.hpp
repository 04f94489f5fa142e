#pragma once

#include <stdexcept>
#include <string>

namespace qoinv {

/// Malformed or out-of-contract user data (bad fraction, zero denominator,
/// a tuple that is not a reduced prototype, ...).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A structural identity that must hold for every valid branch did not.
/// Reaching this means a bug upstream, not bad input.
class TheoremViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class SingularSwap : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class CannotDerive : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace qoinv
