#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace depthcut {

/// Exact rational scalar. mpq_class keeps the canonical form (gcd 1,
/// positive denominator) as long as every value enters through
/// make_scalar/parse_scalar or arithmetic on canonical operands.
using Scalar = mpq_class;

enum class ErrorCode {
  Parse,
  EqualHeights,
  CutOutOfRange,
  NotACycle,
  OrientationViolation,
  OnZeroSet,
  WrongKind,
  PerturbationFailed,
  CyclicInput,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

Scalar make_scalar(long num, long den = 1);

/// Parses "p/q" or "p". Throws Error(Parse) on malformed input or q == 0.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is 1.
std::string format_scalar(const Scalar& value);

int sign(const Scalar& value);

/// Parameter bound; nullopt stands for an infinite end.
using Bound = std::optional<Scalar>;

}  // namespace depthcut
