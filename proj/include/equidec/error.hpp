#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equidec {

enum class ErrorCode {
  NotSaturated,
  NotCoprime,
  NotUnimodular,
  DegenerateInput,
  NotFullDim,
  FitMismatch,
  NotLatticePolytope,
  NotEmpty,
  NoWidthOne,
  DegeneratePolygon,
  NotHalfUnimodular,
  NoMapFound,
  NotEhrhartEquivalent,
  MalformedInput,
};

/// Machine-readable upper-case name, e.g. "NOT_EHRHART_EQUIVALENT".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace equidec
