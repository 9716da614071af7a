#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mfcat {

enum class ErrorCode {
  RingMismatch,
  LengthMismatch,
  ParseError,
  SchemaError,
  ValidationError,
  NotAFactorization,
  ContextMismatch,
  InvalidMorphism,
  VariableCollision,
  ImageNotInKernel,
  CompositionNonzero,
  NonUnimodularBasis,
  UnresolvableRay,
  MissingParameter,
  InfiniteCriticalLocus,
  NonIsolated,
  CriticalValue,
  InvalidArgument,
};

// Upper-case identifier used in reports, e.g. "NOT_A_FACTORIZATION".
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mfcat
