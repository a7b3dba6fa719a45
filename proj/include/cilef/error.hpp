#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cilef {

enum class ErrorKind {
  ParseError,
  UnknownVariable,
  AlphabetMismatch,
  InvalidArgument,
  NotHomogeneous,
  DegreeTooSmall,
  NotZeroDimensional,
  JacobianInSocleFailure,
  SingularHypersurface,
  TooManyVariables,
  DegreeOutOfRange,
  InternalError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. what() reads "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& detail)
      : Error(kind, detail + " at position " + std::to_string(position)),
        position_(position) {}

  // Zero-based offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cilef
