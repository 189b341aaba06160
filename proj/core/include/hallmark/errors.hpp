#pragma once

#include <stdexcept>
#include <string>

namespace hallmark {

// Error taxonomy shared by the library and the CLI. The CLI maps each
// category onto a fixed process exit code (usage 2, resource 3, scope 4).

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mathematically invalid input (n = 0, gcd violation, bad parameters).
struct DomainError : Error {
  using Error::Error;
};

/// Malformed textual input (group files, factor grammar, cycle notation).
struct FormatError : Error {
  using Error::Error;
};

/// An enumeration cap or memory guard was hit; message names the offender.
struct ResourceError : Error {
  using Error::Error;
};

/// Request outside the range where the answer would be trustworthy
/// (e.g. Hall C/D questions with more than two relevant primes).
struct ScopeError : Error {
  using Error::Error;
};

}  // namespace hallmark
