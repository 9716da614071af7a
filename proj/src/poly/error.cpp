#include "mfcat/error.hpp"

namespace mfcat {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::RingMismatch: return "RING_MISMATCH";
    case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::SchemaError: return "SCHEMA_ERROR";
    case ErrorCode::ValidationError: return "VALIDATION_ERROR";
    case ErrorCode::NotAFactorization: return "NOT_A_FACTORIZATION";
    case ErrorCode::ContextMismatch: return "CONTEXT_MISMATCH";
    case ErrorCode::InvalidMorphism: return "INVALID_MORPHISM";
    case ErrorCode::VariableCollision: return "VARIABLE_COLLISION";
    case ErrorCode::ImageNotInKernel: return "IMAGE_NOT_IN_KERNEL";
    case ErrorCode::CompositionNonzero: return "COMPOSITION_NONZERO";
    case ErrorCode::NonUnimodularBasis: return "NON_UNIMODULAR_BASIS";
    case ErrorCode::UnresolvableRay: return "UNRESOLVABLE_RAY";
    case ErrorCode::MissingParameter: return "MISSING_PARAMETER";
    case ErrorCode::InfiniteCriticalLocus: return "INFINITE_CRITICAL_LOCUS";
    case ErrorCode::NonIsolated: return "NON_ISOLATED";
    case ErrorCode::CriticalValue: return "CRITICAL_VALUE";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace mfcat
