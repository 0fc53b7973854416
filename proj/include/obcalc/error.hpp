#pragma once

#include <stdexcept>
#include <string>

namespace obcalc {

/// Raised when an input is well-formed but outside an operation's domain
/// (non-periodic word passed to an FDTC query, missing cap metadata, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed input text: bad word tokens, unparsable rationals,
/// JSON that does not follow a descriptor schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace obcalc
