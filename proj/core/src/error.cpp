#include "monadica/error.hpp"

namespace monadica {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::LengthUndefined: return "LengthUndefined";
    case ErrorCode::NotMonadic: return "NotMonadic";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotDifferentiable: return "NotDifferentiable";
    case ErrorCode::ProvisoViolated: return "ProvisoViolated";
    case ErrorCode::RegionMismatch: return "RegionMismatch";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::VanishingDerivative: return "VanishingDerivative";
    case ErrorCode::GammaNotFound: return "GammaNotFound";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace monadica
