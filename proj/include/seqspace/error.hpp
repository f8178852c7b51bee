#pragma once

#include <stdexcept>
#include <string>

namespace seqspace {

/// Error categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
  invalid_argument = 2,
  parse_error = 3,
  unknown_kind = 4,
  range_error = 5,
  dimension_overflow = 6,
  not_bracketable = 7,
  not_in_range = 8,
  condition_failed = 9,
  requires_generator = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace seqspace
