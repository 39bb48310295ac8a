#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rankext {

enum class ErrorCode {
  // field construction and arithmetic
  NotPrime,
  ReducibleModulus,
  InvalidModulus,
  UnsupportedField,
  FieldTooLarge,
  DivisionByZero,
  InvalidElement,
  // matrices and subspaces
  DimensionMismatch,
  FieldMismatch,
  AmbientMismatch,
  SearchSpaceTooLarge,
  // codes and maps
  CodeTooLarge,
  ZeroCode,
  NotInCode,
  InconsistentAssignment,
  NotInjective,
  ImageNotInCodomain,
  // paths
  NotInSupport,
  NotOnClosedSimplePath,
  DuplicatePosition,
  // extension engine
  NotClosedSimple,
  NoDropValue,
  NotIrreducible,
  ZeroScalar,
  NotAnIsometry,
  WrongField,
  NotRankOneGenerated,
  WitnessInvalid,
  VerificationFailed,
  // fixtures
  UnknownFixture,
  UnsupportedParams,
  SearchExhausted,
  // I/O
  InvalidInput,
};

std::string_view error_name(ErrorCode code) noexcept;

// Errors that signal a desk-scale resource cap rather than bad input.
bool is_resource_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Upper bound on exhaustive group/pair searches. Defaults to 10^8 and can be
// overridden through the RANKEXT_MAX_SEARCH environment variable.
std::uint64_t search_cap();

// Upper bound on the number of codewords enumerated for a single code (10^6).
inline constexpr std::uint64_t kCodewordCap = 1'000'000;

// Saturating q^e; returns UINT64_MAX on overflow.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept;
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace rankext
