#include "climate_stress/error.hpp"

namespace climate_stress {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroTotalValue: return "ZeroTotalValue";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::DuplicateKey: return "DuplicateKey";
    case ErrorCode::UnknownHazardToken: return "UnknownHazardToken";
    case ErrorCode::UnknownChannel: return "UnknownChannel";
    case ErrorCode::NegativeIntensity: return "NegativeIntensity";
    case ErrorCode::NegativeFragility: return "NegativeFragility";
    case ErrorCode::UnresolvedGeo: return "UnresolvedGeo";
    case ErrorCode::MissingHazard: return "MissingHazard";
    case ErrorCode::MissingFragility: return "MissingFragility";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::NegativeParameter: return "NegativeParameter";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::Misalignment: return "Misalignment";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ScenarioMismatch: return "ScenarioMismatch";
  }
  return "Unknown";
}

}  // namespace climate_stress
