#include "stasheff/error.hpp"

namespace stasheff {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::NotADiagonal: return "NotADiagonal";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FrozenDirection: return "FrozenDirection";
    case ErrorCode::IncompleteTriangulation: return "IncompleteTriangulation";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotALamination: return "NotALamination";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NotStasheff: return "NotStasheff";
    case ErrorCode::NotInImageLattice: return "NotInImageLattice";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace stasheff
