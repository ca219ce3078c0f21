#include "maedalab/galois.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "maedalab/error.hpp"
#include "maedalab/primes.hpp"
#include "maedalab/sequences.hpp"

namespace maedalab {

std::string_view to_string(Verdict v) {
  return v == Verdict::kCertifiedSn ? "certified_Sn" : "inconclusive";
}

namespace {

void require_monic(const IntPolynomial& f) {
  require(!f.is_zero(), ErrorCode::kZeroPolynomial, "polynomial is zero");
  require(f.degree() >= 1, ErrorCode::kValidation, "polynomial must have degree >= 1");
  require(f.is_monic(), ErrorCode::kValidation, "polynomial must be monic");
}

void require_limit(u64 limit, u64 minimum) {
  require(limit >= minimum, ErrorCode::kValidation,
          "prime limit must be >= " + std::to_string(minimum));
  require(limit <= kDefaultPrimeLimitCap, ErrorCode::kValidation, "prime limit exceeds 2^32");
}

bool is_transposition_seed(const std::vector<unsigned>& type) {
  unsigned twos = 0;
  for (unsigned len : type) {
    if (len == 2) {
      ++twos;
    } else if (len % 2 == 0) {
      return false;
    }
  }
  return twos == 1;
}

std::vector<u64> primes_in_range(u64 limit) {
  std::vector<u64> out;
  for (auto q : primes_up_to(static_cast<std::uint32_t>(limit))) out.push_back(q);
  return out;
}

// Walks all primes <= limit segment by segment on `workers` threads and
// hands each prime's profile to a per-segment accumulator. Accumulators are
// returned in ascending segment order.
template <class Tally, class Visit>
std::vector<Tally> scan_segments(const IntPolynomial& f, u64 limit, unsigned workers,
                                 u64 span, Visit visit) {
  const auto base = primes_up_to(static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit))) + 2);
  const auto segments = partition_range(limit, span);
  std::vector<Tally> tallies(segments.size());
  parallel_for_segments(segments.size(), workers, [&](std::size_t idx) {
    Tally& tally = tallies[idx];
    for (u64 p : sieve_segment(segments[idx], base)) visit(tally, residue_degrees(f, p));
  });
  return tallies;
}

}  // namespace

GaloisCertificate certify_symmetric_group(const IntPolynomial& f, u64 prime_budget) {
  require_monic(f);
  require_limit(prime_budget, 2);
  GaloisCertificate cert;
  cert.poly = f;
  cert.n = static_cast<unsigned>(f.degree());
  const unsigned n = cert.n;
  if (n == 1) {
    // S_1 is trivial.
    cert.verdict = Verdict::kCertifiedSn;
    return cert;
  }
  auto done = [&] {
    if (n == 2) return cert.witnesses.count("transposition") != 0;
    return cert.witnesses.size() == 3;
  };
  for (u64 p : primes_in_range(prime_budget)) {
    ++cert.primes_examined;
    const auto profile = residue_degrees(f, p);
    if (profile.ramified) continue;
    const auto type = profile.cycle_type();
    cert.observed_patterns.insert(type);
    if (type.size() == 1) cert.witnesses.try_emplace("transitive", p);
    if (n >= 3 && type == std::vector<unsigned>{n - 1, 1}) cert.witnesses.try_emplace("n-1_cycle", p);
    if (is_transposition_seed(type)) cert.witnesses.try_emplace("transposition", p);
    if (done()) {
      cert.verdict = Verdict::kCertifiedSn;
      break;
    }
  }
  return cert;
}

namespace {

struct ScanTally {
  u64 unramified = 0;
  u64 hits = 0;
  u64 ramified = 0;
  std::optional<u64> irreducible_witness;
  std::vector<ScanRow> rows;
};

}  // namespace

DensityExperiment chebotarev_scan(const IntPolynomial& f, unsigned d, u64 prime_limit,
                                  const ScanOptions& options) {
  require_monic(f);
  require(d >= 1 && static_cast<int>(d) <= f.degree(), ErrorCode::kValidation,
          "need 1 <= d <= deg f");
  require_limit(prime_limit, 100);
  const unsigned n = static_cast<unsigned>(f.degree());
  const bool keep_rows = options.keep_rows;

  auto tallies = scan_segments<ScanTally>(
      f, prime_limit, options.workers, options.segment_span,
      [&](ScanTally& t, const ResidueDegreeProfile& profile) {
        const bool hit = !profile.ramified && profile.contains(static_cast<int>(d));
        if (profile.ramified) {
          ++t.ramified;
        } else {
          ++t.unramified;
          if (hit) ++t.hits;
          if (!t.irreducible_witness && profile.degrees.size() == 1 &&
              profile.degrees.begin()->first == static_cast<int>(n)) {
            t.irreducible_witness = profile.p;
          }
        }
        if (keep_rows) t.rows.push_back({profile.p, profile.ramified, profile.label(), hit});
      });

  DensityExperiment exp;
  exp.poly = f;
  exp.d = d;
  exp.prime_limit = prime_limit;
  for (auto& t : tallies) {
    exp.unramified_count += t.unramified;
    exp.hit_count += t.hits;
    exp.ramified_skipped += t.ramified;
    if (!exp.irreducible_witness) exp.irreducible_witness = t.irreducible_witness;
    if (keep_rows) std::move(t.rows.begin(), t.rows.end(), std::back_inserter(exp.rows));
  }
  exp.estimate = exp.unramified_count == 0
                     ? Rational(0)
                     : Rational(BigInt(exp.hit_count), BigInt(exp.unramified_count));
  exp.estimate.canonicalize();
  return exp;
}

void attach_prediction(DensityExperiment& experiment, const GaloisCertificate& certificate) {
  experiment.certificate_verdict = certificate.verdict;
  if (certificate.verdict == Verdict::kCertifiedSn) {
    experiment.predicted = a_closed(experiment.d, certificate.n / experiment.d);
  } else {
    experiment.predicted.reset();
  }
}

Rational ProfileTable::frequency(const std::vector<unsigned>& type) const {
  const auto it = counts.find(type);
  if (it == counts.end() || unramified_count == 0) return Rational(0);
  Rational q(BigInt(it->second), BigInt(unramified_count));
  q.canonicalize();
  return q;
}

ProfileTable profile_density_table(const IntPolynomial& f, u64 prime_limit, unsigned workers) {
  require_monic(f);
  require_limit(prime_limit, 2);
  auto tallies = scan_segments<ProfileTable>(
      f, prime_limit, workers, 1u << 16, [](ProfileTable& t, const ResidueDegreeProfile& profile) {
        if (profile.ramified) return;
        ++t.unramified_count;
        ++t.counts[profile.cycle_type()];
      });
  ProfileTable table;
  for (const auto& t : tallies) {
    table.unramified_count += t.unramified_count;
    for (const auto& [type, count] : t.counts) table.counts[type] += count;
  }
  return table;
}

}  // namespace maedalab
