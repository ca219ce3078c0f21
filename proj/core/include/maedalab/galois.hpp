#pragma once

// Empirical Chebotarev experiments over rational primes and a sufficient
// test for Galois group S_n based on factorization patterns.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maedalab/exact.hpp"
#include "maedalab/ffpoly.hpp"

namespace maedalab {

enum class Verdict { kCertifiedSn, kInconclusive };

std::string_view to_string(Verdict v);

struct GaloisCertificate {
  IntPolynomial poly;
  unsigned n = 0;
  std::set<std::vector<unsigned>> observed_patterns;
  Verdict verdict = Verdict::kInconclusive;
  // "transitive" (n-cycle), "n-1_cycle", "transposition" -> witnessing prime
  std::map<std::string, u64> witnesses;
  u64 primes_examined = 0;
};

/// Scans primes p <= prime_budget until an n-cycle, an (n-1)-cycle and a
/// pattern yielding a transposition (one 2, all else odd) have been seen.
/// Transitive plus an (n-1)-cycle is 2-transitive, hence primitive, and a
/// primitive group with a transposition is S_n.
GaloisCertificate certify_symmetric_group(const IntPolynomial& f, u64 prime_budget);

struct ScanRow {
  u64 p = 0;
  bool ramified = false;
  std::string profile;
  bool hit = false;
};

struct DensityExperiment {
  IntPolynomial poly;
  unsigned d = 1;
  u64 prime_limit = 0;
  u64 unramified_count = 0;
  u64 hit_count = 0;
  u64 ramified_skipped = 0;
  Rational estimate;
  std::optional<Rational> predicted;  // a(floor(n/d)) once certified S_n
  std::optional<Verdict> certificate_verdict;
  // Smallest scanned prime with an irreducible reduction; without one the
  // input is not known to be irreducible and callers should warn.
  std::optional<u64> irreducible_witness;
  std::vector<ScanRow> rows;  // filled only when requested
};

struct ScanOptions {
  unsigned workers = 1;
  bool keep_rows = false;
  std::uint64_t segment_span = 1u << 16;
};

/// Counts unramified p <= prime_limit whose residue degrees include d.
/// Segments are tallied independently and merged in ascending order, so the
/// result does not depend on `workers`.
DensityExperiment chebotarev_scan(const IntPolynomial& f, unsigned d, u64 prime_limit,
                                  const ScanOptions& options = {});

/// Attaches a certificate and, when it certifies S_n, the predicted density.
void attach_prediction(DensityExperiment& experiment, const GaloisCertificate& certificate);

struct ProfileTable {
  u64 unramified_count = 0;
  std::map<std::vector<unsigned>, u64> counts;  // cycle type -> primes

  Rational frequency(const std::vector<unsigned>& type) const;
};

ProfileTable profile_density_table(const IntPolynomial& f, u64 prime_limit,
                                   unsigned workers = 1);

inline constexpr u64 kDefaultPrimeLimitCap = u64{1} << 32;

}  // namespace maedalab
