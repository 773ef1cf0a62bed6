#pragma once

#include <stdexcept>
#include <string>

namespace biord {

enum class ErrorCode {
  IndexOutOfRange,
  RankMismatch,
  MissingImage,
  Parse,
  RangeViolation,
  StrandMismatch,
  NotConjugacyForm,
  SigmaNotBijective,
  I0NotFixed,
  NoFixedPoint,
  DepthExceedsCap,
  HNonzero,
  GcdViolation,
  GeneratorNotInOrbit,
  Precondition,
  Overflow,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry a 1-based line and column into the offending input.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace biord
