#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace primnorm {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: degree mismatches, points out of range, bad parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (e.g. an intransitive or
/// imprimitive group where a primitive one is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input is imprimitive; carries a nontrivial block system as witness
/// (0-based points, one vector per block).
class ImprimitiveError : public PreconditionError {
 public:
  ImprimitiveError(const std::string& what, std::vector<std::vector<std::size_t>> blocks)
      : PreconditionError(what), blocks_(std::move(blocks)) {}

  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
};

/// A configured resource cap (enumeration size, coset count, degree) was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace primnorm
