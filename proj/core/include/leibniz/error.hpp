#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

// domain error: bad arguments, field mismatches, objects that violate a precondition
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed textual input (scalar strings, JSON documents)
struct ParseError : Error {
  using Error::Error;
};

}  // namespace leibniz
