#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prand {

/// Base class for every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested universe or enumeration exceeds a configured size cap.
class BoundedUniverseError : public Error {
 public:
  using Error::Error;
};

/// An h table has no entry for a string that was evaluated.
class MissingHError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search refused because its input is too large.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or value.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Expression syntax error; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace prand
