#pragma once

// Independent reference computations used only by tests. None of these
// call into the code paths they check.

#include <map>
#include <vector>

#include "maedalab/exact.hpp"
#include "maedalab/modarith.hpp"

namespace oracle {

using maedalab::BigInt;
using maedalab::Rational;

/// Roots of f mod p by evaluating at every residue (small p only).
unsigned count_roots(const std::vector<long>& coeffs, unsigned p);

/// Factor degrees of a degree <= 3 polynomial over F_p by root counting:
/// a cubic with no root is irreducible, a cubic with one simple root is 1+2.
std::map<int, int> small_degree_profile(const std::vector<long>& coeffs, unsigned p);

/// Schoolbook (a * b) mod m with GMP integers, coefficient lists mod p.
std::vector<maedalab::u64> schoolbook_mulmod(const std::vector<maedalab::u64>& a,
                                             const std::vector<maedalab::u64>& b,
                                             const std::vector<maedalab::u64>& m,
                                             maedalab::u64 p);

/// q prod_{n>=1} (1 - q^n)^24 up to q^prec.
std::vector<BigInt> delta_product(std::size_t prec);

/// det(xI - M) via Faddeev-LeVerrier over the rationals; constant term first.
std::vector<Rational> faddeev_leverrier(const std::vector<std::vector<BigInt>>& m);

/// 1 - exp(-1/d) as a double from the standard library.
double limit_float(unsigned d);

}  // namespace oracle
