#pragma once

// Exact arithmetic vocabulary shared by every module: GMP integers and
// rationals plus a closed rational interval.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace maedalab {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);
BigInt power(const BigInt& base, unsigned exponent);
Rational power(const Rational& base, unsigned exponent);

// 1 / (j! * d^j)
Rational inverse_factorial_power(unsigned j, unsigned d);

bool is_integer(const Rational& q);
BigInt to_integer(const Rational& q);  // requires is_integer(q)

std::string to_decimal(const BigInt& z);
double to_double(const Rational& q);

/// Closed interval [lo, hi] with exact endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational lo_, Rational hi_);
  static RationalInterval point(const Rational& x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const RationalInterval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

// Intersection with [0, 1]; an empty result collapses onto the nearer bound.
RationalInterval clamp_unit(const RationalInterval& x);

}  // namespace maedalab
