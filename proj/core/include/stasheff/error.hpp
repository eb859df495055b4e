#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stasheff {

/// Failure categories raised by the library. Each operation documents which
/// codes it may raise; callers that need to branch on the cause use code().
enum class ErrorCode {
  InvalidVertex,
  InvalidPolygon,
  NotADiagonal,
  InvariantViolation,
  SizeMismatch,
  NonIntegral,
  NotDivisible,
  NotPositive,
  DimensionMismatch,
  FrozenDirection,
  IncompleteTriangulation,
  RankDeficient,
  NotALamination,
  EmptyInput,
  Unbounded,
  NotStasheff,
  NotInImageLattice,
  BudgetExceeded,
  SchemaViolation,
  InternalInvariant,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stasheff
