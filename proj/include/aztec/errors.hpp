#pragma once

#include <stdexcept>

namespace aztec {

// Path span is negative or odd.
struct InvalidSpanError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A sequence does not reach the indices a Hankel matrix or a reconstruction
// needs.
struct InsufficientTermsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration was asked to run past its configured cutoff.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A determinant profile has a zero pivot, so reconstruction is not determined.
struct IllPosedProfileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A determinant profile admits no integer sequence.
struct InconsistentProfileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument violates a documented domain condition (anchor scheme,
// non-intersection, permutation shape, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// External input (a tiling, a JSON document) fails structural validation.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A state the algorithms guarantee unreachable for valid input; seeing one is
// a bug, not a user error.
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace aztec
