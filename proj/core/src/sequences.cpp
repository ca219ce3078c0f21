#include "maedalab/sequences.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "maedalab/error.hpp"

namespace maedalab {

const Rational& MaedaSequence::b(unsigned i, unsigned j) const {
  require(i >= 1 && i <= i_max() && j >= 1 && j <= i, ErrorCode::kPrecondition,
          "b(i, j) needs 1 <= j <= i <= i_max");
  return b_[i][j - 1];
}

MaedaSequence a_recursive(unsigned d, unsigned i_max) {
  require(d >= 1, ErrorCode::kValidation, "d must be >= 1");
  MaedaSequence seq;
  seq.d_ = d;
  seq.a_.assign(i_max + 1, Rational(0));
  seq.b_.resize(i_max + 1);
  std::vector<Rational> weight(i_max + 1);  // 1 / (j! d^j)
  for (unsigned j = 1; j <= i_max; ++j) weight[j] = inverse_factorial_power(j, d);
  for (unsigned i = 1; i <= i_max; ++i) {
    auto& row = seq.b_[i];
    row.reserve(i);
    Rational sum(0);
    for (unsigned j = 1; j <= i; ++j) {
      Rational bij = weight[j] * (1 - seq.a_[i - j]);
      sum += bij;
      row.push_back(std::move(bij));
    }
    seq.a_[i] = std::move(sum);
  }
  return seq;
}

Rational a_closed(unsigned d, unsigned i) {
  require(d >= 1, ErrorCode::kValidation, "d must be >= 1");
  Rational sum(0);
  for (unsigned j = 1; j <= i; ++j) {
    if (j % 2 == 1) {
      sum += inverse_factorial_power(j, d);
    } else {
      sum -= inverse_factorial_power(j, d);
    }
  }
  return sum;
}

RationalInterval limit_enclosure(unsigned d, unsigned terms) {
  require(d >= 1 && terms >= 1, ErrorCode::kValidation,
          "limit_enclosure needs d >= 1 and at least one term");
  Rational s = a_closed(d, terms);
  Rational t = a_closed(d, terms + 1);
  return s <= t ? RationalInterval(s, t) : RationalInterval(t, s);
}

Rational tail_bound(unsigned d, unsigned i) {
  require(d >= 1, ErrorCode::kValidation, "d must be >= 1");
  return 2 * inverse_factorial_power(i + 1, d);
}

Rational delta_bound(unsigned d, unsigned n, unsigned enclosure_terms) {
  require(d >= 1 && n >= std::max(5u, 2 * d), ErrorCode::kPrecondition,
          "delta_bound needs n >= max(5, 2d)");
  const unsigned ceil_ratio = (n + d - 1) / d;
  // lower end of the bracket by partial sums; zero terms gives [0, 1/d]
  const Rational lower = std::min(a_closed(d, enclosure_terms), a_closed(d, enclosure_terms + 1));
  Rational denom = lower - 2 * inverse_factorial_power(1 + ceil_ratio, d);
  require(denom > 0, ErrorCode::kNonpositiveDenominator,
          "delta_bound denominator not provably positive; raise enclosure terms or n");
  Rational bound = Rational(2) / (Rational(n - 1) * denom);
  bound.canonicalize();
  return bound;
}

RationalInterval include_exclude_step(const RationalInterval& c_prev, const Rational& a,
                                      const Rational& delta_abs_bound) {
  require(a >= 0 && a <= 1, ErrorCode::kPrecondition, "need 0 <= a <= 1");
  require(c_prev.lo >= 0 && c_prev.hi <= 1, ErrorCode::kPrecondition,
          "c_prev must lie in [0, 1]");
  require(delta_abs_bound >= 0, ErrorCode::kPrecondition, "delta bound must be >= 0");
  auto eval = [&](const Rational& c, const Rational& delta) -> Rational {
    return c + a - (1 + delta) * a * c;
  };
  const Rational neg = -delta_abs_bound;
  std::array<Rational, 4> corners{eval(c_prev.lo, neg), eval(c_prev.lo, delta_abs_bound),
                                  eval(c_prev.hi, neg), eval(c_prev.hi, delta_abs_bound)};
  auto [lo, hi] = std::minmax_element(corners.begin(), corners.end());
  return clamp_unit(RationalInterval(*lo, *hi));
}

ConvergenceTrace converge_part_a(const Rational& b0, const Rational& gamma,
                                 const std::vector<Rational>& a_terms) {
  require(gamma > 0, ErrorCode::kPrecondition, "gamma must be positive");
  for (const auto& a : a_terms) {
    require(a >= 0 && a * gamma < 1, ErrorCode::kPrecondition,
            "need 0 <= a_n < 1/gamma");
  }
  ConvergenceTrace trace;
  trace.gamma = gamma;
  trace.a_terms = a_terms;
  trace.terms.push_back(b0);
  trace.residuals.push_back(1 - gamma * b0);
  Rational product = 1 - gamma * b0;
  for (const auto& a : a_terms) {
    const Rational& prev = trace.terms.back();
    Rational next = prev + a - gamma * prev * a;
    product *= 1 - gamma * a;
    Rational residual = 1 - gamma * next;
    require(residual == product, ErrorCode::kPrecondition,
            "residual product identity violated");
    trace.terms.push_back(std::move(next));
    trace.residuals.push_back(std::move(residual));
  }
  return trace;
}

ConvergenceTrace converge_part_b(const Rational& c0, const std::vector<Rational>& a_terms,
                                 const std::vector<Rational>& delta_terms) {
  require(a_terms.size() == delta_terms.size(), ErrorCode::kValidation,
          "a_terms and delta_terms must have equal length");
  for (const auto& a : a_terms) {
    require(a >= 0, ErrorCode::kPrecondition, "a_n must be non-negative");
  }
  ConvergenceTrace trace;
  trace.a_terms = a_terms;
  trace.delta_terms = delta_terms;
  trace.terms.push_back(c0);
  for (std::size_t n = 0; n < a_terms.size(); ++n) {
    const Rational& prev = trace.terms.back();
    trace.terms.push_back(prev + a_terms[n] - (1 + delta_terms[n]) * prev * a_terms[n]);
  }
  return trace;
}

namespace fp {

double a_closed(unsigned d, unsigned i) {
  double sum = 0.0;
  double term = 1.0;
  for (unsigned j = 1; j <= i; ++j) {
    term /= static_cast<double>(j) * d;
    sum += (j % 2 == 1) ? term : -term;
  }
  return sum;
}

double limit(unsigned d) { return -std::expm1(-1.0 / d); }

double tail_bound(unsigned d, unsigned i) {
  return 2.0 * std::exp(-std::lgamma(i + 2.0) - (i + 1.0) * std::log(static_cast<double>(d)));
}

double delta_bound(unsigned d, unsigned n) {
  const unsigned ceil_ratio = (n + d - 1) / d;
  return 2.0 / ((n - 1.0) * (limit(d) - tail_bound(d, ceil_ratio)));
}

}  // namespace fp

}  // namespace maedalab
