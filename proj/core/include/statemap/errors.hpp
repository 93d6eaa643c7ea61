#pragma once

#include <stdexcept>

namespace statemap {

// Raised for violated preconditions on caller-supplied data: dimension
// mismatch, zero state vectors, non-finite amplitudes, malformed indices.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation has no meaning for the generator's case, e.g.
// asking for the spectrum of T[a,b] = 0.
class UnsupportedCaseError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace statemap
