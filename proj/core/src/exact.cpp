#include "maedalab/exact.hpp"

#include <cassert>

#include "maedalab/error.hpp"

namespace maedalab {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kDegreeOutOfRange: return "degree_out_of_range";
    case ErrorCode::kInvalidCycleLength: return "invalid_d";
    case ErrorCode::kPrecondition: return "precondition_violation";
    case ErrorCode::kNonpositiveDenominator: return "nonpositive_denominator";
    case ErrorCode::kEmptyTower: return "empty_tower";
    case ErrorCode::kLeadingCoefficientVanishes: return "leading_coefficient_vanishes";
    case ErrorCode::kNotSquarefree: return "not_squarefree";
    case ErrorCode::kZeroPolynomial: return "zero_polynomial";
    case ErrorCode::kPrecisionTooSmall: return "precision_too_small";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt power(const BigInt& base, unsigned exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational r(power(base.get_num(), exponent), power(base.get_den(), exponent));
  r.canonicalize();
  return r;
}

Rational inverse_factorial_power(unsigned j, unsigned d) {
  Rational r(BigInt(1), factorial(j) * power(BigInt(d), j));
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt to_integer(const Rational& q) {
  require(is_integer(q), ErrorCode::kPrecondition,
          "expected an integer, got " + q.get_str());
  return q.get_num();
}

std::string to_decimal(const BigInt& z) { return z.get_str(10); }

double to_double(const Rational& q) { return q.get_d(); }

RationalInterval::RationalInterval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  require(lo <= hi, ErrorCode::kPrecondition, "interval with lo > hi");
}

RationalInterval clamp_unit(const RationalInterval& x) {
  auto clamp = [](const Rational& v) -> Rational {
    if (v < 0) return Rational(0);
    if (v > 1) return Rational(1);
    return v;
  };
  return {clamp(x.lo), clamp(x.hi)};
}

}  // namespace maedalab
