#pragma once

#include <stdexcept>
#include <string>

namespace spiv {

// Domain error categories. The names are part of the CLI contract: they are
// printed verbatim on standard error when a subcommand fails.
enum class ErrorKind {
  ConstraintViolation,
  ZeroParameter,
  ChartSingular,
  StepFailure,
  NonFiniteState,
  UntabulatedPair,
  MissingZeroData,
  NonGenericParameters,
  ReductionCapExceeded,
  PoleOfTransform,
  IdenticallyZeroPivot,
  NonSimplePole,
  InverseUndefined,
  BracketLost,
  NoInteriorPoint,
  IntermediatePole,
  PreconditionFailed,
  ParseError,
};

const char* error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace spiv
