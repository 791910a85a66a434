#pragma once

#include <stdexcept>
#include <string>

namespace latdet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance, dimension mismatch, out-of-range index.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A chain was asked to advance past its last local state.
class AtTop : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured state budget.
class OracleTooLarge : public Error {
 public:
  using Error::Error;
};

/// An adapter hook broke the promise its capability makes.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// An engine asked for a hook the adapter does not provide.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace latdet
