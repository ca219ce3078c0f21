#include "maedalab/primes.hpp"

#include <algorithm>
#include <cmath>

namespace maedalab {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<Segment> partition_range(std::uint64_t limit, std::uint64_t span) {
  std::vector<Segment> out;
  if (span == 0) span = 1;
  for (std::uint64_t lo = 2; lo <= limit; lo += span) {
    out.push_back({lo, std::min(lo + span, limit + 1)});
  }
  return out;
}

std::vector<std::uint64_t> sieve_segment(const Segment& seg,
                                         const std::vector<std::uint32_t>& base_primes) {
  std::vector<std::uint64_t> out;
  if (seg.hi <= seg.lo) return out;
  std::vector<bool> composite(seg.hi - seg.lo, false);
  for (std::uint64_t q : base_primes) {
    if (q * q >= seg.hi) break;
    std::uint64_t start = std::max(q * q, (seg.lo + q - 1) / q * q);
    for (std::uint64_t m = start; m < seg.hi; m += q) composite[m - seg.lo] = true;
  }
  for (std::uint64_t v = std::max<std::uint64_t>(seg.lo, 2); v < seg.hi; ++v) {
    if (!composite[v - seg.lo]) out.push_back(v);
  }
  return out;
}

}  // namespace maedalab
