#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace climate_stress {

enum class ErrorCode {
  ZeroTotalValue,
  InvalidWeights,
  MalformedRow,
  SchemaMismatch,
  InvariantViolation,
  DuplicateKey,
  UnknownHazardToken,
  UnknownChannel,
  NegativeIntensity,
  NegativeFragility,
  UnresolvedGeo,
  MissingHazard,
  MissingFragility,
  ParseError,
  UnknownField,
  UnknownKind,
  NegativeParameter,
  KindMismatch,
  DomainError,
  LengthMismatch,
  Misalignment,
  AllZero,
  ZeroDenominator,
  ScenarioMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the engine. `line` is a 1-based line in the
/// source file when the error came from a loader; `index` is the 0-based
/// instrument position when the error concerns a portfolio row.
class StressError : public std::runtime_error {
 public:
  StressError(ErrorCode code, const std::string& message,
              std::optional<std::size_t> line = std::nullopt,
              std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(message), code_(code), line_(line), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> index_;
};

}  // namespace climate_stress
