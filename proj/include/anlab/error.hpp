#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace anlab {

enum class ErrorCode {
  InvalidSpec,
  ParseError,
  ConditionViolation,
  InvalidDecomposition,
  DegenerateTails,
  EqualValues,
  NotHermitian,
  NotPSD,
  NoConvergence,
  NotOrthonormal,
  DependentInput,
  DimensionMismatch,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace anlab
