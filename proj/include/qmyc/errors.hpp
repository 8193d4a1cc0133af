#pragma once

#include <stdexcept>
#include <string>

namespace qmyc {

// Domain error: invalid input, violated invariant, failed precondition.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed file or JSON document.
struct ParseError : Error {
  using Error::Error;
};

// Input exceeds a configured size limit (automorphism search, labelings).
struct SizeLimitError : Error {
  using Error::Error;
};

}  // namespace qmyc
