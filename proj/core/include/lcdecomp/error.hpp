#ifndef LCDECOMP_ERROR_HPP
#define LCDECOMP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcdecomp {

enum class ErrorCode {
  // input validation
  InvalidInput,
  MixedOrientation,
  MixedDimension,
  InvalidParams,
  EmptyWindow,
  WrongShape,
  BadFactorShape,
  ShapeMismatch,
  ZeroOrUnitIdeal,
  // mathematical conditions
  ZeroInput,
  NotDecomposable,
  NoGap,
  LengthOutOfRange,
  LPInfeasible,
  NotPd1,
  NonzeroDroppedEntry,
  NotSaCM,
  ZeroModule,
  DepthZero,
  HasDim1Submodule,
  HypothesisViolated,
  InfiniteLength,
  // resources
  WindowTooNarrow,
  ResourceCap,
};

std::string_view error_code_name(ErrorCode code);

/// Process exit status for the CLI: 2 validation, 3 mathematical, 4 resource cap.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lcdecomp

#endif
