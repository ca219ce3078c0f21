#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maedalab {

enum class ErrorCode {
  kValidation,
  kDegreeOutOfRange,
  kInvalidCycleLength,
  kPrecondition,
  kNonpositiveDenominator,
  kEmptyTower,
  kLeadingCoefficientVanishes,
  kNotSquarefree,
  kZeroPolynomial,
  kPrecisionTooSmall,
  kParse,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure the library reports carries a machine-readable code; the CLI
// maps these onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace maedalab
