#pragma once

#include <stdexcept>
#include <string>

namespace balcone {

// Malformed input: bad dimensions, mismatched ambient spaces, bad documents.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Products whose total degree does not match the dimension they are
// integrated over.
class DegreeMismatchError : public ValidationError {
  public:
    DegreeMismatchError(int expected, int actual);

    int expected() const { return expected_; }
    int actual() const { return actual_; }

  private:
    int expected_;
    int actual_;
};

// Well-formed input on which a computation has no answer (degenerate
// pairings, parallel rays, a balanced map that vanishes).
class ComputationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace balcone
