#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symprod {

/// Stable error codes. The numeric values are part of the CLI contract
/// (printed as `E<nn>`), so never renumber existing entries.
enum class ErrorCode : int {
  invalid_argument = 1,
  parse_error = 2,
  degenerate_map = 3,
  division_by_zero = 4,
  field_mismatch = 5,
  not_periodic = 6,
  budget_exceeded = 7,
  precision_not_reached = 8,
  invariant_violation = 9,
  certificate_failure = 10,
  io_error = 11,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in a map/point expression; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::parse_error, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const char* what) {
  if (!cond) throw Error(code, what);
}

}  // namespace symprod
