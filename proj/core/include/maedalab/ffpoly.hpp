#pragma once

// Polynomials over Z and over F_p (p a 64-bit prime), and distinct-degree
// factorization. Residue degrees at unramified primes are read off the
// factor degrees of the reduction (Dedekind).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "maedalab/exact.hpp"
#include "maedalab/modarith.hpp"

namespace maedalab {

/// Integer polynomial, constant term first, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const BigInt& leading() const { return coeffs_.back(); }

  /// Human-readable form, e.g. "x^5 - x - 1".
  std::string to_string() const;
  /// "c0,c1,...,cn"
  std::string to_coefficient_list() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Polynomial over F_p, constant term first, no trailing zeros.
class ModPolynomial {
 public:
  explicit ModPolynomial(u64 p) : p_(p) {}
  ModPolynomial(u64 p, std::vector<u64> coeffs);  // coefficients reduced mod p

  static ModPolynomial x(u64 p);
  static ModPolynomial constant(u64 p, u64 c);

  u64 modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 leading() const { return c_.back(); }

  ModPolynomial monic() const;
  ModPolynomial derivative() const;

  friend ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b);
  friend ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b);
  friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);
  friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;

  /// Quotient and remainder; divisor must be nonzero.
  static void divmod(const ModPolynomial& a, const ModPolynomial& b, ModPolynomial& q,
                     ModPolynomial& r);
  ModPolynomial operator%(const ModPolynomial& m) const;
  ModPolynomial operator/(const ModPolynomial& m) const;

 private:
  void trim();

  u64 p_;
  std::vector<u64> c_;
};

ModPolynomial gcd(ModPolynomial a, ModPolynomial b);  // monic, or zero

/// (a * b) mod m
ModPolynomial mul_mod(const ModPolynomial& a, const ModPolynomial& b, const ModPolynomial& m);

/// base^exponent mod m by square-and-multiply.
ModPolynomial pow_mod(const ModPolynomial& base, u64 exponent, const ModPolynomial& m);

/// Throws kLeadingCoefficientVanishes when p divides the leading coefficient.
ModPolynomial reduce_mod_p(const IntPolynomial& f, u64 p);

bool is_squarefree(const ModPolynomial& g);

/// degree -> number of irreducible factors of that degree.
using DegreeCounts = std::map<int, int>;

/// Distinct-degree factorization of a monic squarefree g. Only factor
/// degrees are produced; the factors themselves are not split.
DegreeCounts distinct_degree_profile(const ModPolynomial& g);

struct ResidueDegreeProfile {
  u64 p = 0;
  DegreeCounts degrees;
  bool ramified = false;

  bool contains(int degree) const { return degrees.count(degree) != 0; }
  /// Degrees sorted non-increasing with multiplicity.
  std::vector<unsigned> cycle_type() const;
  /// e.g. "2-1-1-1"; empty when ramified.
  std::string label() const;
};

/// Ramified means the reduction is not squarefree (or the leading
/// coefficient vanishes); such primes carry no degrees.
ResidueDegreeProfile residue_degrees(const IntPolynomial& f, u64 p);

/// Reduced monic coefficients of f, precomputed once per prime.
ResidueDegreeProfile residue_degrees(const ModPolynomial& reduced);

}  // namespace maedalab
