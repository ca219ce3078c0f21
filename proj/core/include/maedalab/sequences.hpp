#pragma once

// The d-cycle density sequences a(i), b(i, j), rational enclosures of their
// limit 1 - exp(-1/d), and the inclusion-exclusion recursions they drive.

#include <vector>

#include "maedalab/exact.hpp"

namespace maedalab {

/// a(0..i_max) and the triangle b(i, j), 1 <= j <= i <= i_max, for one d.
class MaedaSequence {
 public:
  unsigned d() const { return d_; }
  unsigned i_max() const { return static_cast<unsigned>(a_.size()) - 1; }
  const Rational& a(unsigned i) const { return a_.at(i); }
  const Rational& b(unsigned i, unsigned j) const;
  const std::vector<Rational>& a_values() const { return a_; }

  friend MaedaSequence a_recursive(unsigned d, unsigned i_max);

 private:
  unsigned d_ = 1;
  std::vector<Rational> a_;
  std::vector<std::vector<Rational>> b_;  // b_[i][j - 1]
};

/// Fills a and b by the mutual recursion a(0) = 0,
/// b(i, j) = (1 - a(i - j)) / (j! d^j), a(i) = sum_k b(i, k).
MaedaSequence a_recursive(unsigned d, unsigned i_max);

/// sum_{j=1..i} (-1)^(j+1) / (j! d^j)
Rational a_closed(unsigned d, unsigned i);

/// Brackets 1 - exp(-1/d) between the partial sums with `terms` and
/// `terms + 1` summands of the alternating series.
RationalInterval limit_enclosure(unsigned d, unsigned terms);

/// 2 / ((i + 1)! d^(i + 1)), which dominates |a(i) - (1 - exp(-1/d))|.
Rational tail_bound(unsigned d, unsigned i);

/// Rational upper bound for |delta| in the two-field inclusion-exclusion
/// formula; 1 - exp(-1/d) is replaced by the lower end of limit_enclosure,
/// which can only increase the bound. Uses ceil(n/d) in the error term.
Rational delta_bound(unsigned d, unsigned n, unsigned enclosure_terms);

/// Image of (c, delta) -> c + a - (1 + delta) a c over c in c_prev and
/// |delta| <= delta_abs_bound, clamped to [0, 1].
///
/// The map is affine in c for fixed delta and affine in delta for fixed c,
/// so on the box c_prev x [-bound, bound] both extremes sit at corners and
/// evaluating the four corners gives the exact image.
RationalInterval include_exclude_step(const RationalInterval& c_prev, const Rational& a,
                                      const Rational& delta_abs_bound);

struct ConvergenceTrace {
  std::vector<Rational> terms;      // terms[0] is the start value
  std::vector<Rational> residuals;  // 1 - gamma * terms[n]; empty for part b
  std::vector<Rational> a_terms;
  std::vector<Rational> delta_terms;
  Rational gamma{1};
};

/// b_n = b_{n-1} + a_n - gamma b_{n-1} a_n. Every residual is checked
/// against (1 - gamma b_0) prod (1 - gamma a_i).
ConvergenceTrace converge_part_a(const Rational& b0, const Rational& gamma,
                                 const std::vector<Rational>& a_terms);

/// c_n = c_{n-1} + a_n - (1 + delta_n) c_{n-1} a_n.
ConvergenceTrace converge_part_b(const Rational& c0, const std::vector<Rational>& a_terms,
                                 const std::vector<Rational>& delta_terms);

// Floating-point mirrors for tables and plots. Not guaranteed.
namespace fp {
double a_closed(unsigned d, unsigned i);
double limit(unsigned d);
double tail_bound(unsigned d, unsigned i);
double delta_bound(unsigned d, unsigned n);
}  // namespace fp

}  // namespace maedalab
