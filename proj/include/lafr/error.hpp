#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lafr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual graph input. `offset` is the byte offset of the offending
/// character, or the line number for line-oriented formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A precondition on the arguments does not hold (bad index, bad size, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Strong cospectrality was requested for a vertex whose eigenvalue support
/// contains non-integers; the exact test is only defined on integer supports.
class NonIntegerSupport : public Error {
 public:
  using Error::Error;
};

/// The characterization needs at least three vertices; K2 has its own
/// closed-form schedule (see `k2_schedule`).
class SpecialSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace lafr
