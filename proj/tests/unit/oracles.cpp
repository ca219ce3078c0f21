#include "oracles.hpp"

#include <cmath>

namespace oracle {

unsigned count_roots(const std::vector<long>& coeffs, unsigned p) {
  unsigned roots = 0;
  for (unsigned x = 0; x < p; ++x) {
    long long acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      acc = (acc * x + coeffs[i]) % static_cast<long long>(p);
    }
    if ((acc % static_cast<long long>(p) + p) % p == 0) ++roots;
  }
  return roots;
}

std::map<int, int> small_degree_profile(const std::vector<long>& coeffs, unsigned p) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  const unsigned r = count_roots(coeffs, p);
  if (deg == 1) return {{1, 1}};
  if (deg == 2) return r == 0 ? std::map<int, int>{{2, 1}} : std::map<int, int>{{1, 2}};
  // squarefree cubic
  if (r == 0) return {{3, 1}};
  if (r == 1) return {{1, 1}, {2, 1}};
  return {{1, 3}};
}

std::vector<maedalab::u64> schoolbook_mulmod(const std::vector<maedalab::u64>& a,
                                             const std::vector<maedalab::u64>& b,
                                             const std::vector<maedalab::u64>& m,
                                             maedalab::u64 p) {
  const BigInt P(std::to_string(p), 10);
  std::vector<BigInt> prod(a.size() + b.size(), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] += BigInt(std::to_string(a[i]), 10) * BigInt(std::to_string(b[j]), 10);
    }
  }
  for (auto& c : prod) c = ((c % P) + P) % P;
  std::vector<BigInt> mod;
  for (auto c : m) mod.emplace_back(std::to_string(c), 10);
  while (!mod.empty() && mod.back() == 0) mod.pop_back();
  // inverse of the leading coefficient by Fermat
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), mod.back().get_mpz_t(), P.get_mpz_t());
  const std::size_t dm = mod.size() - 1;
  for (std::size_t top = prod.size(); top-- > dm;) {
    BigInt coef = (prod[top] * inv) % P;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      prod[top - dm + j] = ((prod[top - dm + j] - coef * mod[j]) % P + P) % P;
    }
  }
  prod.resize(dm);
  while (!prod.empty() && prod.back() == 0) prod.pop_back();
  std::vector<maedalab::u64> out;
  for (const auto& c : prod) out.push_back(std::stoull(c.get_str()));
  return out;
}

std::vector<BigInt> delta_product(std::size_t prec) {
  // series in q: start from 1, multiply by (1 - q^n) 24 times for each n
  std::vector<BigInt> s(prec + 1, BigInt(0));
  s[0] = 1;
  for (std::size_t n = 1; n <= prec; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (std::size_t i = prec; i >= n; --i) s[i] -= s[i - n];
    }
  }
  std::vector<BigInt> out(prec + 1, BigInt(0));
  for (std::size_t i = 1; i <= prec; ++i) out[i] = s[i - 1];
  return out;
}

std::vector<Rational> faddeev_leverrier(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  using Mat = std::vector<std::vector<Rational>>;
  Mat a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Mat mk(n, std::vector<Rational>(n, Rational(0)));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Mat next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        if (i == j) s += c[n - k + 1];
        next[i][j] = s;
      }
    mk = std::move(next);
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

double limit_float(unsigned d) { return 1.0 - std::exp(-1.0 / d); }

}  // namespace oracle
