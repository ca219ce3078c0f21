#pragma once

#include <cstdint>

namespace maedalab {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

inline u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  if (s < a || s >= p) s -= p;
  return s;
}

inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

inline u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 pow_mod(u64 base, u64 exponent, u64 p);
u64 inv_mod(u64 a, u64 p);  // p prime, a != 0 mod p

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(u64 n);

}  // namespace maedalab
