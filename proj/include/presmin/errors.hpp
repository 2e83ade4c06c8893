#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace presmin {

using Natural = std::uint64_t;
using Integer = std::int64_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A membership query (or a window, or a prefix) reaches past the declared
/// horizon of a finite set handle.
class HorizonExceeded : public Error {
 public:
  HorizonExceeded(Natural requested, Natural horizon);

  Natural requested() const { return requested_; }
  Natural horizon() const { return horizon_; }

 private:
  Natural requested_;
  Natural horizon_;
};

/// Precondition on an argument violated (e.g. successor of a non-member).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a formula, a set literal or a source spec.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The inference pipeline could not produce a verified decomposition.
class InferenceFailure : public Error {
 public:
  using Error::Error;
};

/// Unknown builtin, unreadable or malformed input file.
class SourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace presmin
