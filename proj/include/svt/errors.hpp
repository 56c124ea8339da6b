#pragma once

#include <stdexcept>
#include <string>

namespace svt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: parse failures, size mismatches, mixed fields.
class InputError : public Error {
 public:
  using Error::Error;
};

// The input is well formed but outside the mathematical scope of an operation
// (non-concise tensor, total degree below 3, non-nilpotent element, ...).
class ScopeError : public Error {
 public:
  using Error::Error;
};

class NotConcise : public ScopeError {
 public:
  using ScopeError::ScopeError;
};

class ZeroTensor : public ScopeError {
 public:
  using ScopeError::ScopeError;
};

// A parameter value for which a construction degenerates; the caller may retry.
class DegenerateParameter : public ScopeError {
 public:
  using ScopeError::ScopeError;
};

class CharacteristicTooSmall : public ScopeError {
 public:
  using ScopeError::ScopeError;
};

// An identity that must hold exactly did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace svt
