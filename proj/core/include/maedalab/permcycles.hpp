#pragma once

// Exact d-cycle statistics in symmetric groups.
//
// Closed-form counts are evaluated with rational arithmetic and checked to be
// integral; census_bruteforce is the independent oracle that enumerates S_n.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "maedalab/exact.hpp"

namespace maedalab {

/// A bijection of {1, ..., n}; images[k] is the image of k + 1.
class Permutation {
 public:
  explicit Permutation(std::vector<unsigned> images);
  static Permutation identity(unsigned n);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  std::span<const unsigned> images() const { return images_; }
  unsigned operator()(unsigned point) const { return images_[point - 1]; }

 private:
  std::vector<unsigned> images_;
};

struct CycleType {
  std::vector<unsigned> lengths;  // non-increasing
  unsigned n = 0;
  int sign = 1;

  unsigned count(unsigned length) const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& p);

struct DCycleCensus {
  unsigned n = 0;
  unsigned d = 0;
  BigInt total;
  BigInt at_least_one;
  std::vector<BigInt> exactly_j;  // index j - 1, j = 1 .. floor(n/d)
  BigInt plus;
  BigInt minus;
  BigInt special_b1;
  BigInt special_b2;

  friend bool operator==(const DCycleCensus&, const DCycleCensus&) = default;
};

inline constexpr unsigned kMaxEnumerationDegree = 10;

/// Exhaustive census over all n! permutations. The enumeration is split by
/// the image of 1; partitions are merged in order so `workers` never changes
/// the result.
DCycleCensus census_bruteforce(unsigned n, unsigned d, unsigned workers = 1);

/// Number of permutations of each cycle type in S_n, by enumeration.
std::map<std::vector<unsigned>, BigInt> cycle_type_counts(unsigned n);

// Closed forms; each requires n >= 2d >= 2.
BigInt count_at_least_one(unsigned n, unsigned d);
BigInt count_exactly_j(unsigned n, unsigned d, unsigned j);
BigInt count_special_b1(unsigned n, unsigned d);
BigInt count_special_b2(unsigned n, unsigned d);

/// Upper bound for |#A+_n(d) - #A-_n(d)|, from the special-set counts.
Rational signed_discrepancy_bound(unsigned n, unsigned d);

/// n! * 2 / (n - 1), the coarse form of the same bound.
Rational coarse_discrepancy_bound(unsigned n);

/// Counter-based generator: the k-th draw is a pure function of (seed, k).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next();
  /// Uniform on [0, bound) without modulo bias.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

struct ProportionEstimate {
  double value = 0.0;
  double standard_error = 0.0;
};

struct MonteCarloCensus {
  unsigned n = 0;
  unsigned d = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  ProportionEstimate at_least_one;
  std::vector<ProportionEstimate> exactly_j;  // index j - 1
};

MonteCarloCensus monte_carlo_census(unsigned n, unsigned d, std::uint64_t samples,
                                    std::uint64_t seed);

}  // namespace maedalab
