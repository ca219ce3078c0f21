#include <cmath>

#include "doctest.h"
#include "maedalab/error.hpp"
#include "maedalab/galois.hpp"
#include "maedalab/permcycles.hpp"
#include "maedalab/polyparse.hpp"

using namespace maedalab;

TEST_CASE("certify_symmetric_group") {
  SUBCASE("x^5 - x - 1 is S_5") {
    auto cert = certify_symmetric_group(parse_polynomial("x^5-x-1"), 10000);
    CHECK(cert.verdict == Verdict::kCertifiedSn);
    CHECK(cert.witnesses.count("transitive") == 1);
    CHECK(cert.witnesses.count("n-1_cycle") == 1);
    CHECK(cert.witnesses.count("transposition") == 1);
    for (const auto& [name, p] : cert.witnesses) CHECK(p <= 10000);
  }
  SUBCASE("x^2 + 1 is S_2") {
    auto cert = certify_symmetric_group(parse_polynomial("x^2+1"), 1000);
    CHECK(cert.verdict == Verdict::kCertifiedSn);
    CHECK(cert.witnesses.at("transposition") == 3);
  }
  SUBCASE("x^4 + 1 has Klein four group") {
    auto cert = certify_symmetric_group(parse_polynomial("x^4+1"), 100000);
    CHECK(cert.verdict == Verdict::kInconclusive);
    CHECK(cert.witnesses.count("transitive") == 0);
    for (const auto& pattern : cert.observed_patterns) CHECK(pattern.size() >= 2);
  }
  SUBCASE("cyclic cubic x^3 - 3x + 1 is not S_3") {
    auto cert = certify_symmetric_group(parse_polynomial("x^3-3x+1"), 20000);
    CHECK(cert.verdict == Verdict::kInconclusive);
    CHECK(cert.witnesses.count("transposition") == 0);
  }
  SUBCASE("degree one") {
    CHECK(certify_symmetric_group(parse_polynomial("x+5"), 100).verdict == Verdict::kCertifiedSn);
  }
  CHECK_THROWS_AS(certify_symmetric_group(parse_polynomial("2x^2+1"), 100), Error);
}

TEST_CASE("chebotarev_scan on x^2 + 1") {
  const auto f = parse_polynomial("x^2+1");
  auto split = chebotarev_scan(f, 1, 100000);
  CHECK(std::abs(split.estimate.get_d() - 0.5) < 0.02);
  CHECK(split.ramified_skipped == 1);
  auto inert = chebotarev_scan(f, 2, 100000);
  CHECK(std::abs(inert.estimate.get_d() - 0.5) < 0.02);
  CHECK(split.hit_count + inert.hit_count == split.unramified_count);
  CHECK(inert.irreducible_witness == 3u);

  attach_prediction(inert, certify_symmetric_group(f, 1000));
  REQUIRE(inert.predicted.has_value());
  CHECK(*inert.predicted == Rational(1, 2));
}

TEST_CASE("chebotarev_scan validation") {
  const auto f = parse_polynomial("x^5-x-1");
  CHECK_THROWS_AS(chebotarev_scan(f, 0, 1000), Error);
  CHECK_THROWS_AS(chebotarev_scan(f, 6, 1000), Error);
  CHECK_THROWS_AS(chebotarev_scan(f, 2, 99), Error);
  CHECK_THROWS_AS(chebotarev_scan(parse_polynomial("3x^2+1"), 1, 1000), Error);
  CHECK_THROWS_AS(chebotarev_scan(f, 2, (u64{1} << 32) + 1), Error);
}

TEST_CASE("chebotarev_scan is worker-count invariant") {
  const auto f = parse_polynomial("x^5-x-1");
  ScanOptions one{1, true, 4096};
  ScanOptions eight{8, true, 4096};
  const auto a = chebotarev_scan(f, 2, 60000, one);
  const auto b = chebotarev_scan(f, 2, 60000, eight);
  CHECK(a.hit_count == b.hit_count);
  CHECK(a.unramified_count == b.unramified_count);
  CHECK(a.ramified_skipped == b.ramified_skipped);
  CHECK(a.estimate == b.estimate);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].p == b.rows[i].p);
    CHECK(a.rows[i].profile == b.rows[i].profile);
  }
  for (std::size_t i = 1; i < a.rows.size(); ++i) CHECK(a.rows[i - 1].p < a.rows[i].p);
  // disc(x^5 - x - 1) = 2869 = 19 * 151
  std::vector<u64> ramified;
  for (const auto& r : a.rows)
    if (r.ramified) ramified.push_back(r.p);
  CHECK(ramified == std::vector<u64>{19, 151});
}

TEST_CASE("profile_density_table sums to one and tracks S_n classes") {
  const auto f = parse_polynomial("x^3-2");
  const auto table = profile_density_table(f, 200000, 2);
  Rational total(0);
  for (const auto& [type, count] : table.counts) total += table.frequency(type);
  CHECK(total == 1);
  const auto classes = cycle_type_counts(3);
  const double tolerance = 3.0 / std::sqrt(static_cast<double>(table.unramified_count));
  for (const auto& [type, count] : classes) {
    Rational expected(count, BigInt(6));
    expected.canonicalize();
    CAPTURE(type.size());
    CHECK(std::abs(table.frequency(type).get_d() - expected.get_d()) <= tolerance);
  }
}
