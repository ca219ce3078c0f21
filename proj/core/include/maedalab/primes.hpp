#pragma once

#include <cstdint>
#include <vector>

namespace maedalab {

/// Primes <= limit by a plain sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Contiguous block of integers [lo, hi).
struct Segment {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

/// Splits [2, limit + 1) into contiguous segments of at most `span` integers.
std::vector<Segment> partition_range(std::uint64_t limit, std::uint64_t span);

/// Primes inside one segment, using base primes covering sqrt(seg.hi).
std::vector<std::uint64_t> sieve_segment(const Segment& seg,
                                         const std::vector<std::uint32_t>& base_primes);

/// Runs fn(segment_index) for every index on `workers` threads. Indices are
/// handed out dynamically, so callers must store results per index.
template <class Fn>
void parallel_for_segments(std::size_t count, unsigned workers, Fn&& fn);

}  // namespace maedalab

#include "maedalab/detail/parallel.hpp"
