#include "maedalab/modarith.hpp"

#include "maedalab/error.hpp"

namespace maedalab {

u64 pow_mod(u64 base, u64 exponent, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  require(a % p != 0, ErrorCode::kPrecondition, "inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 odd = n - 1;
  unsigned twos = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }
  // These bases are deterministic for n < 3.3 * 10^24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, odd, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < twos; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace maedalab
