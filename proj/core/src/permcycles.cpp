#include "maedalab/permcycles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "maedalab/detail/parallel.hpp"
#include "maedalab/error.hpp"
#include "maedalab/modarith.hpp"
#include "maedalab/sequences.hpp"

namespace maedalab {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  const auto n = images_.size();
  std::vector<bool> seen(n + 1, false);
  for (unsigned v : images_) {
    require(v >= 1 && v <= n && !seen[v], ErrorCode::kValidation,
            "images do not form a bijection of {1..n}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1u);
  return Permutation(std::move(images));
}

unsigned CycleType::count(unsigned length) const {
  return static_cast<unsigned>(std::count(lengths.begin(), lengths.end(), length));
}

namespace {

// Cycle lengths of a 0-based image array, unsorted.
template <class Images>
void orbit_lengths(const Images& images, unsigned n, std::vector<unsigned>& out,
                   std::vector<char>& seen) {
  out.clear();
  std::fill(seen.begin(), seen.begin() + n, 0);
  for (unsigned start = 0; start < n; ++start) {
    if (seen[start]) continue;
    unsigned len = 0;
    for (unsigned x = start; !seen[x]; x = images[x]) {
      seen[x] = 1;
      ++len;
    }
    out.push_back(len);
  }
}

void check_census_args(unsigned n, unsigned d) {
  require(n >= 1 && n <= kMaxEnumerationDegree, ErrorCode::kDegreeOutOfRange,
          "census enumeration needs 1 <= n <= " + std::to_string(kMaxEnumerationDegree));
  require(d >= 1 && d <= n, ErrorCode::kInvalidCycleLength, "census needs 1 <= d <= n");
}

void check_formula_args(unsigned n, unsigned d) {
  require(d >= 1 && n >= 2 * d, ErrorCode::kPrecondition,
          "closed forms hold for n >= 2d >= 2 (n=" + std::to_string(n) +
              ", d=" + std::to_string(d) + ")");
}

struct PartialCensus {
  std::uint64_t at_least_one = 0;
  std::vector<std::uint64_t> exactly_j;
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
  std::uint64_t special_b1 = 0;
  std::uint64_t special_b2 = 0;
};

// All permutations with images[0] == first (0-based).
PartialCensus census_partition(unsigned n, unsigned d, unsigned first) {
  PartialCensus part;
  part.exactly_j.assign(n / d, 0);
  std::vector<unsigned> images(n);
  images[0] = first;
  for (unsigned k = 1, v = 0; k < n; ++v) {
    if (v != first) images[k++] = v;
  }
  std::vector<char> seen(n);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    unsigned cycles = 0;
    unsigned d_cycles = 0;
    bool one_in_d = false;
    bool two_in_d = false;
    unsigned cycle_with_one = 0;
    unsigned cycle_with_two = 0;
    for (unsigned start = 0; start < n; ++start) {
      if (seen[start]) continue;
      unsigned len = 0;
      bool has1 = false;
      bool has2 = false;
      for (unsigned x = start; !seen[x]; x = images[x]) {
        seen[x] = 1;
        has1 |= x == 0;
        has2 |= x == 1;
        ++len;
      }
      ++cycles;
      if (has1) cycle_with_one = cycles;
      if (has2) cycle_with_two = cycles;
      if (len == d) {
        ++d_cycles;
        one_in_d |= has1;
        two_in_d |= has2;
      }
    }
    if (d_cycles == 0) continue;
    ++part.at_least_one;
    ++part.exactly_j[d_cycles - 1];
    if ((n - cycles) % 2 == 0) {
      ++part.plus;
    } else {
      ++part.minus;
    }
    if (d_cycles == 1 && (one_in_d || two_in_d)) ++part.special_b1;
    if (d_cycles == 2 && one_in_d && two_in_d && cycle_with_one != cycle_with_two) {
      ++part.special_b2;
    }
  } while (std::next_permutation(images.begin() + 1, images.end()));
  return part;
}

}  // namespace

CycleType cycle_type(const Permutation& p) {
  const unsigned n = p.degree();
  std::vector<unsigned> zero_based(n);
  for (unsigned k = 0; k < n; ++k) zero_based[k] = p.images()[k] - 1;
  CycleType type;
  std::vector<char> seen(n);
  orbit_lengths(zero_based, n, type.lengths, seen);
  std::sort(type.lengths.begin(), type.lengths.end(), std::greater<>());
  type.n = n;
  type.sign = (n - type.lengths.size()) % 2 == 0 ? 1 : -1;
  return type;
}

DCycleCensus census_bruteforce(unsigned n, unsigned d, unsigned workers) {
  check_census_args(n, d);
  std::vector<PartialCensus> parts(n);
  parallel_for_segments(n, workers, [&](std::size_t first) {
    parts[first] = census_partition(n, d, static_cast<unsigned>(first));
  });

  DCycleCensus census;
  census.n = n;
  census.d = d;
  census.total = factorial(n);
  census.exactly_j.assign(n / d, BigInt(0));
  for (const auto& part : parts) {
    census.at_least_one += part.at_least_one;
    for (std::size_t j = 0; j < part.exactly_j.size(); ++j) {
      census.exactly_j[j] += part.exactly_j[j];
    }
    census.plus += part.plus;
    census.minus += part.minus;
    census.special_b1 += part.special_b1;
    census.special_b2 += part.special_b2;
  }
  return census;
}

std::map<std::vector<unsigned>, BigInt> cycle_type_counts(unsigned n) {
  require(n >= 1 && n <= kMaxEnumerationDegree, ErrorCode::kDegreeOutOfRange,
          "cycle type enumeration needs 1 <= n <= " + std::to_string(kMaxEnumerationDegree));
  std::map<std::vector<unsigned>, std::uint64_t> tally;
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<char> seen(n);
  std::vector<unsigned> lens;
  do {
    orbit_lengths(images, n, lens, seen);
    std::sort(lens.begin(), lens.end(), std::greater<>());
    ++tally[lens];
  } while (std::next_permutation(images.begin(), images.end()));
  std::map<std::vector<unsigned>, BigInt> out;
  for (const auto& [type, count] : tally) out.emplace(type, BigInt(count));
  return out;
}

namespace {

// n! * q, asserted integral.
BigInt scaled_count(unsigned n, const Rational& q) {
  Rational scaled = Rational(factorial(n)) * q;
  scaled.canonicalize();
  return to_integer(scaled);
}

}  // namespace

BigInt count_at_least_one(unsigned n, unsigned d) {
  check_formula_args(n, d);
  return scaled_count(n, a_closed(d, n / d));
}

BigInt count_exactly_j(unsigned n, unsigned d, unsigned j) {
  check_formula_args(n, d);
  const unsigned i = n / d;
  require(j >= 1 && j <= i, ErrorCode::kPrecondition, "need 1 <= j <= floor(n/d)");
  return scaled_count(n, a_recursive(d, i).b(i, j));
}

namespace {

Rational special_b1_fraction(unsigned n, unsigned d) {
  const unsigned i = n / d;
  Rational share(BigInt(2 * n - d - 1), BigInt(n) * (n - 1));
  share.canonicalize();
  return share * (1 - a_closed(d, i - 1));
}

Rational special_b2_fraction(unsigned n, unsigned d) {
  const unsigned i = n / d;
  Rational share(BigInt(1), BigInt(n) * (n - 1));
  share.canonicalize();
  return share * (1 - a_closed(d, i - 2));
}

}  // namespace

BigInt count_special_b1(unsigned n, unsigned d) {
  check_formula_args(n, d);
  return scaled_count(n, special_b1_fraction(n, d));
}

BigInt count_special_b2(unsigned n, unsigned d) {
  check_formula_args(n, d);
  return scaled_count(n, special_b2_fraction(n, d));
}

Rational signed_discrepancy_bound(unsigned n, unsigned d) {
  check_formula_args(n, d);
  Rational bound = Rational(factorial(n)) * (special_b1_fraction(n, d) + special_b2_fraction(n, d));
  bound.canonicalize();
  return bound;
}

Rational coarse_discrepancy_bound(unsigned n) {
  require(n >= 2, ErrorCode::kPrecondition, "coarse bound needs n >= 2");
  Rational r(factorial(n) * 2, BigInt(n - 1));
  r.canonicalize();
  return r;
}

std::uint64_t CounterRng::next() {
  // splitmix64 finalizer applied to seed + counter * golden gamma
  std::uint64_t z = seed_ + (++counter_) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection
  std::uint64_t x = next();
  u128 m = static_cast<u128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = next();
      m = static_cast<u128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

MonteCarloCensus monte_carlo_census(unsigned n, unsigned d, std::uint64_t samples,
                                    std::uint64_t seed) {
  require(n >= 1, ErrorCode::kValidation, "monte carlo census needs n >= 1");
  require(d >= 1, ErrorCode::kInvalidCycleLength, "monte carlo census needs d >= 1");
  require(samples >= 1, ErrorCode::kValidation, "monte carlo census needs samples >= 1");

  CounterRng rng(seed);
  const unsigned max_j = n / d;
  std::uint64_t hits = 0;
  std::vector<std::uint64_t> exact(max_j, 0);
  std::vector<unsigned> images(n);
  std::vector<char> seen(n);
  std::vector<unsigned> lens;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::iota(images.begin(), images.end(), 0u);
    for (unsigned k = n; k > 1; --k) {
      std::swap(images[k - 1], images[rng.below(k)]);
    }
    orbit_lengths(images, n, lens, seen);
    const auto c = static_cast<unsigned>(std::count(lens.begin(), lens.end(), d));
    if (c > 0) {
      ++hits;
      ++exact[c - 1];
    }
  }

  auto estimate = [samples](std::uint64_t count) {
    const double p = static_cast<double>(count) / static_cast<double>(samples);
    return ProportionEstimate{p, std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
  };
  MonteCarloCensus out;
  out.n = n;
  out.d = d;
  out.samples = samples;
  out.seed = seed;
  out.at_least_one = estimate(hits);
  for (auto c : exact) out.exactly_j.push_back(estimate(c));
  return out;
}

}  // namespace maedalab
