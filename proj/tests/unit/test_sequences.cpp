#include <cmath>

#include "doctest.h"
#include "maedalab/error.hpp"
#include "maedalab/sequences.hpp"
#include "oracles.hpp"

using namespace maedalab;

namespace {
Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("a_recursive spot values") {
  for (unsigned d = 1; d <= 5; ++d) CHECK(a_recursive(d, 0).a(0) == 0);
  auto s2 = a_recursive(2, 3);
  CHECK(s2.a(1) == q(1, 2));
  CHECK(s2.a(2) == q(3, 8));
  CHECK(s2.a(3) == q(19, 48));
  CHECK(s2.b(2, 2) == q(1, 8));
  CHECK(a_recursive(1, 1).a(1) == 1);
  CHECK_THROWS_AS(s2.b(2, 3), Error);
  CHECK_THROWS_AS(a_recursive(0, 4), Error);
}

TEST_CASE("a_closed spot values") {
  CHECK(a_closed(2, 0) == 0);
  CHECK(a_closed(2, 2) == q(3, 8));
  CHECK(a_closed(2, 3) == q(19, 48));
}

TEST_CASE("recursion equals closed form, d <= 8, i <= 40") {
  for (unsigned d = 1; d <= 8; ++d) {
    const auto seq = a_recursive(d, 40);
    for (unsigned i = 0; i <= 40; ++i) {
      CAPTURE(d);
      CAPTURE(i);
      REQUIRE(seq.a(i) == a_closed(d, i));
      REQUIRE(seq.a(i) >= 0);
      REQUIRE(seq.a(i) <= 1);
      if (i >= 1) {
        Rational sum(0);
        for (unsigned j = 1; j <= i; ++j) sum += seq.b(i, j);
        REQUIRE(sum == seq.a(i));
      }
    }
  }
}

TEST_CASE("limit_enclosure") {
  auto e1 = limit_enclosure(1, 1);
  CHECK(e1.lo == q(1, 2));
  CHECK(e1.hi == 1);
  CHECK(e1.contains(Rational(oracle::limit_float(1))));

  auto e2 = limit_enclosure(2, 3);
  CHECK(e2.width() <= q(1, 24 * 16));
  CHECK(e2.contains(Rational(oracle::limit_float(2))));

  for (unsigned d = 1; d <= 6; ++d) {
    RationalInterval prev = limit_enclosure(d, 1);
    for (unsigned t = 2; t <= 15; ++t) {
      auto cur = limit_enclosure(d, t);
      CHECK(cur.width() < prev.width());
      CHECK(prev.contains(cur));
      CHECK(cur.width() <= inverse_factorial_power(t + 1, d));
      prev = cur;
    }
  }
}

TEST_CASE("tail_bound") {
  CHECK(tail_bound(2, 3) == q(1, 192));
  CHECK(std::abs(a_closed(2, 3).get_d() - oracle::limit_float(2)) <= tail_bound(2, 3).get_d());
  CHECK(tail_bound(1, 0) == 2);
}

TEST_CASE("tail bound holds with rational enclosures, d <= 8, i <= 20") {
  for (unsigned d = 1; d <= 8; ++d) {
    const auto enc = limit_enclosure(d, 30);
    for (unsigned i = 0; i <= 20; ++i) {
      const Rational a = a_closed(d, i);
      const Rational worst = std::max(abs(a - enc.lo), abs(a - enc.hi));
      CHECK(worst <= tail_bound(d, i));
      // a(i) is within the enclosure widened by its own tail
      CHECK(a >= enc.lo - tail_bound(d, i));
      CHECK(a <= enc.hi + tail_bound(d, i));
    }
  }
}

TEST_CASE("delta_bound") {
  const Rational b = delta_bound(2, 121, 10);
  CHECK(b.get_d() <= (1.0 / 120) * (2.0 / 0.39));
  CHECK(b.get_d() >= (1.0 / 120) * (2.0 / 0.3935));
  // dominates the same expression evaluated with the true exponential
  CHECK(b.get_d() >= fp::delta_bound(2, 121) * (1 - 1e-12));
  // decays with n
  CHECK(delta_bound(3, 400, 12) < delta_bound(3, 40, 12));
  CHECK_THROWS_AS(delta_bound(3, 5, 10), Error);  // n < 2d
  CHECK_THROWS_AS(delta_bound(1, 4, 10), Error);  // n < 5
}

TEST_CASE("delta_bound reports a nonpositive denominator") {
  // Zero terms leave the crude enclosure [0, 1/d], whose lower end cannot
  // beat the error term.
  try {
    delta_bound(2, 10, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonpositiveDenominator);
  }
  // One term is already enough for every valid (d, n).
  for (unsigned d = 1; d <= 30; ++d) CHECK(delta_bound(d, std::max(5u, 2 * d), 1) > 0);
}

TEST_CASE("include_exclude_step") {
  const Rational a = q(3, 8);
  auto first = include_exclude_step(RationalInterval::point(Rational(0)), a, q(1, 2));
  CHECK(first == RationalInterval::point(a));

  auto same = include_exclude_step(RationalInterval::point(q(3, 8)), q(3, 8), Rational(0));
  CHECK(same == RationalInterval::point(q(39, 64)));

  // monotone in both the input interval and the delta bound
  const RationalInterval narrow(q(1, 4), q(1, 3));
  const RationalInterval wide(q(1, 5), q(1, 2));
  for (const Rational& bound : {Rational(0), q(1, 10), q(1, 2)}) {
    auto small = include_exclude_step(narrow, a, bound);
    auto big = include_exclude_step(wide, a, bound);
    CHECK(big.contains(small));
    auto bigger_delta = include_exclude_step(narrow, a, bound + q(1, 7));
    CHECK(bigger_delta.contains(small));
  }
  // brute-force grid stays inside the corner interval
  auto out = include_exclude_step(wide, a, q(1, 3));
  for (int ci = 0; ci <= 10; ++ci) {
    for (int di = -10; di <= 10; ++di) {
      Rational c = wide.lo + (wide.hi - wide.lo) * q(ci, 10);
      Rational delta = q(di, 30);
      CHECK(out.contains(c + a - (1 + delta) * a * c));
    }
  }
  CHECK_THROWS_AS(include_exclude_step(narrow, Rational(2), Rational(0)), Error);
  CHECK_THROWS_AS(include_exclude_step(narrow, a, Rational(-1)), Error);
}

TEST_CASE("converge_part_a") {
  SUBCASE("geometric residual") {
    std::vector<Rational> as(60, q(1, 2));
    auto trace = converge_part_a(Rational(0), Rational(1), as);
    for (unsigned n = 0; n <= 60; ++n) {
      CHECK(1 - trace.terms[n] == power(q(1, 2), n));
    }
  }
  SUBCASE("fixed point") {
    const Rational gamma = q(5, 3);
    std::vector<Rational> as{q(1, 7), q(1, 2), q(3, 10)};
    auto trace = converge_part_a(1 / gamma, gamma, as);
    for (const auto& t : trace.terms) CHECK(t == 1 / gamma);
  }
  SUBCASE("harmonic terms drive the residual to zero") {
    std::vector<Rational> as;
    for (long n = 1; n <= 200; ++n) as.push_back(q(1, n + 1));
    auto trace = converge_part_a(Rational(0), Rational(1), as);
    CHECK(trace.residuals.back() == q(1, 201));
  }
  CHECK_THROWS_AS(converge_part_a(Rational(0), Rational(2), {q(1, 2)}), Error);
  CHECK_THROWS_AS(converge_part_a(Rational(0), Rational(0), {q(1, 2)}), Error);
}

TEST_CASE("converge_part_b") {
  SUBCASE("delta = 0 matches part a with gamma = 1") {
    std::vector<Rational> as{q(1, 3), q(2, 5), q(1, 9), q(3, 8)};
    auto b = converge_part_b(q(1, 10), as, std::vector<Rational>(as.size(), Rational(0)));
    auto a = converge_part_a(q(1, 10), Rational(1), as);
    CHECK(a.terms == b.terms);
  }
  SUBCASE("constant a = 3/8") {
    std::vector<Rational> as(30, q(3, 8));
    auto trace = converge_part_b(Rational(0), as, std::vector<Rational>(30, Rational(0)));
    for (unsigned n = 0; n <= 30; ++n) CHECK(trace.terms[n] == 1 - power(q(5, 8), n));
  }
  SUBCASE("perturbed sequence stays in the comparison sandwich") {
    const unsigned steps = 400;
    std::vector<Rational> as(steps, q(3, 8));
    std::vector<Rational> deltas;
    for (unsigned n = 1; n <= steps; ++n) deltas.push_back(q(n % 2 == 0 ? 1 : -1, n + 10));
    auto c = converge_part_b(Rational(0), as, deltas);
    // from N on, |delta_n| < eps; compare with gamma = 1 +- eps started at c_N
    const Rational eps = q(1, 20);
    const unsigned big_n = 10;
    std::vector<Rational> tail(as.begin() + big_n, as.end());
    auto lower = converge_part_a(c.terms[big_n], 1 + eps, tail);
    auto upper = converge_part_a(c.terms[big_n], 1 - eps, tail);
    for (unsigned m = 0; m < tail.size(); ++m) {
      CHECK(lower.terms[m] <= c.terms[big_n + m]);
      CHECK(c.terms[big_n + m] <= upper.terms[m]);
    }
    CHECK(std::abs(c.terms.back().get_d() - 1.0) < 0.01);
  }
  CHECK_THROWS_AS(converge_part_b(Rational(0), {q(1, 2)}, {}), Error);
  CHECK_THROWS_AS(converge_part_b(Rational(0), {q(-1, 2)}, {Rational(0)}), Error);
}

TEST_CASE("float mirrors track the exact values") {
  for (unsigned d = 1; d <= 6; ++d) {
    CHECK(fp::a_closed(d, 12) == doctest::Approx(a_closed(d, 12).get_d()).epsilon(1e-14));
    CHECK(fp::limit(d) == doctest::Approx(oracle::limit_float(d)).epsilon(1e-14));
    CHECK(fp::tail_bound(d, 5) == doctest::Approx(tail_bound(d, 5).get_d()).epsilon(1e-12));
  }
}
