#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace logcsm {

enum class ErrorCode {
  EmptyFactors,
  NonPositiveDimension,
  AmbientMismatch,
  Overflow,
  NotASurface,
  DuplicateLabel,
  InvalidSurfaceData,
  NotADivisorClass,
  NotAUnitSeries,
  IndexOutOfRange,
  MalformedExpression,
  MissingSmoothDim,
  InvalidBounds,
  ParseError,
  SchemaViolation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the engine carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked
}  // namespace logcsm
