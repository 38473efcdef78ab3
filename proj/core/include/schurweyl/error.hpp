#pragma once

#include <stdexcept>
#include <string>

namespace schurweyl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (bad box, index out of range, ...).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// The requested tensor space exceeds the configured d^N cap.
class DimensionCapExceeded : public Error {
  public:
    using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace schurweyl
