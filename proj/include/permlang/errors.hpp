#pragma once

#include <stdexcept>
#include <string>

namespace permlang {

// Base of everything this library throws on bad input or violated domains.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed arguments: bad parse, out-of-range index, invalid partition data.
struct InvalidInput : Error {
  using Error::Error;
};

// An operator was applied outside its domain (e.g. psi_2 on a permutation
// starting with 1, psi_s without an identity suffix).
struct DomainError : Error {
  using Error::Error;
};

// encode_rect found a peel step where no case applies.
struct NotRectangular : DomainError {
  using DomainError::DomainError;
};

// Input contains one of 2413, 4132, 4213, 3214.
struct NotEvilAvoiding : DomainError {
  using DomainError::DomainError;
};

// Input contains one of 4321, 4312, 3421, 3412.
struct NotAlmostIncreasing : DomainError {
  using DomainError::DomainError;
};

struct InvalidWord : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct InvalidWalk : InvalidInput {
  using InvalidInput::InvalidInput;
};

// A "cannot happen" branch fired: generate-and-verify inversion found zero or
// two preimages, or two routes that must agree disagreed.  Always a bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace permlang
