#include "rankext/error.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>

namespace rankext {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::CodeTooLarge: return "CodeTooLarge";
    case ErrorCode::ZeroCode: return "ZeroCode";
    case ErrorCode::NotInCode: return "NotInCode";
    case ErrorCode::InconsistentAssignment: return "InconsistentAssignment";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::ImageNotInCodomain: return "ImageNotInCodomain";
    case ErrorCode::NotInSupport: return "NotInSupport";
    case ErrorCode::NotOnClosedSimplePath: return "NotOnClosedSimplePath";
    case ErrorCode::DuplicatePosition: return "DuplicatePosition";
    case ErrorCode::NotClosedSimple: return "NotClosedSimple";
    case ErrorCode::NoDropValue: return "NoDropValue";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::NotAnIsometry: return "NotAnIsometry";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::NotRankOneGenerated: return "NotRankOneGenerated";
    case ErrorCode::WitnessInvalid: return "WitnessInvalid";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::UnsupportedParams: return "UnsupportedParams";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

bool is_resource_error(ErrorCode code) noexcept {
  return code == ErrorCode::SearchSpaceTooLarge || code == ErrorCode::CodeTooLarge ||
         code == ErrorCode::FieldTooLarge;
}

// Read on every call (searches start rarely) so the override can change
// within one process.
std::uint64_t search_cap() {
  constexpr std::uint64_t kDefault = 100'000'000;
  const char* env = std::getenv("RANKEXT_MAX_SEARCH");
  if (env == nullptr) return kDefault;
  std::string_view text(env);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) return kDefault;
  return value;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    result = saturating_mul(result, base);
  }
  return result;
}

}  // namespace rankext
