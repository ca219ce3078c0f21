#include "maedalab/hecke.hpp"

#include <algorithm>
#include <string>

#include "maedalab/density_model.hpp"
#include "maedalab/detail/parallel.hpp"
#include "maedalab/error.hpp"

namespace maedalab {

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
  require(a.weight == b.weight, ErrorCode::kPrecondition, "adding forms of different weight");
  QExpansion out;
  out.weight = a.weight;
  const std::size_t len = std::min(a.coeffs.size(), b.coeffs.size());
  out.coeffs.resize(len);
  for (std::size_t n = 0; n < len; ++n) out.coeffs[n] = a.coeffs[n] + b.coeffs[n];
  return out;
}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  QExpansion out;
  out.weight = a.weight + b.weight;
  const std::size_t len = std::min(a.coeffs.size(), b.coeffs.size());
  out.coeffs.assign(len, BigInt(0));
  // skip the zero prefix of each factor (powers of Delta start at q^j)
  std::size_t a0 = 0, b0 = 0;
  while (a0 < len && a.coeffs[a0] == 0) ++a0;
  while (b0 < len && b.coeffs[b0] == 0) ++b0;
  for (std::size_t i = a0; i < len; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = b0; i + j < len; ++j) {
      mpz_addmul(out.coeffs[i + j].get_mpz_t(), a.coeffs[i].get_mpz_t(), b.coeffs[j].get_mpz_t());
    }
  }
  return out;
}

namespace {

QExpansion one(std::size_t prec) {
  QExpansion out;
  out.coeffs.assign(prec + 1, BigInt(0));
  out.coeffs[0] = 1;
  return out;
}

// sigma_r(n) for n = 0..prec (entry 0 unused)
std::vector<BigInt> divisor_power_sums(unsigned r, std::size_t prec) {
  std::vector<BigInt> sigma(prec + 1, BigInt(0));
  for (std::size_t m = 1; m <= prec; ++m) {
    const BigInt mr = power(BigInt(static_cast<unsigned long>(m)), r);
    for (std::size_t n = m; n <= prec; n += m) sigma[n] += mr;
  }
  return sigma;
}

}  // namespace

QExpansion eisenstein(unsigned weight, std::size_t prec) {
  require(weight == 4 || weight == 6, ErrorCode::kValidation, "eisenstein weight must be 4 or 6");
  require(prec >= 1, ErrorCode::kValidation, "precision must be >= 1");
  const auto sigma = divisor_power_sums(weight - 1, prec);
  const long scale = weight == 4 ? 240 : -504;
  QExpansion out = one(prec);
  out.weight = weight;
  for (std::size_t n = 1; n <= prec; ++n) out.coeffs[n] = scale * sigma[n];
  return out;
}

QExpansion delta_form(std::size_t prec) {
  require(prec >= 1, ErrorCode::kValidation, "precision must be >= 1");
  const QExpansion e4 = eisenstein(4, prec);
  const QExpansion e6 = eisenstein(6, prec);
  const QExpansion e4_cubed = e4 * e4 * e4;
  const QExpansion e6_squared = e6 * e6;
  QExpansion out;
  out.weight = 12;
  out.coeffs.resize(prec + 1);
  for (std::size_t n = 0; n <= prec; ++n) {
    BigInt diff = e4_cubed.coeffs[n] - e6_squared.coeffs[n];
    require(mpz_divisible_ui_p(diff.get_mpz_t(), 1728) != 0, ErrorCode::kPrecondition,
            "E4^3 - E6^2 not divisible by 1728");
    mpz_divexact_ui(out.coeffs[n].get_mpz_t(), diff.get_mpz_t(), 1728);
  }
  return out;
}

ModularFormRing::ModularFormRing(std::size_t prec)
    : prec_(prec), e6_(eisenstein(6, prec)) {
  require(prec >= 1, ErrorCode::kValidation, "precision must be >= 1");
  e4_powers_.push_back(one(prec));
  e4_powers_.push_back(eisenstein(4, prec));
  delta_powers_.push_back(one(prec));
  delta_powers_.push_back(delta_form(prec));
}

const QExpansion& ModularFormRing::e4_power(unsigned a) {
  while (e4_powers_.size() <= a) e4_powers_.push_back(e4_powers_.back() * e4_powers_[1]);
  return e4_powers_[a];
}

const QExpansion& ModularFormRing::delta_power(unsigned j) {
  while (delta_powers_.size() <= j) delta_powers_.push_back(delta_powers_.back() * delta_powers_[1]);
  return delta_powers_[j];
}

QExpansion ModularFormRing::eisenstein_monomial(unsigned weight) {
  require(weight % 2 == 0 && weight != 2, ErrorCode::kValidation,
          "no modular form of weight " + std::to_string(weight) + " at level one");
  const unsigned b = weight % 4 == 0 ? 0 : 1;
  const unsigned a = (weight - 6 * b) / 4;
  return b == 0 ? e4_power(a) : e4_power(a) * e6_;
}

std::vector<QExpansion> victor_miller_basis(ModularFormRing& ring, unsigned k) {
  require(k >= 12 && k % 2 == 0, ErrorCode::kValidation, "weight must be even and >= 12");
  std::vector<QExpansion> forms;
  for (unsigned j = 1; 12 * j <= k; ++j) {
    const unsigned rest = k - 12 * j;
    if (rest == 2) continue;
    forms.push_back(ring.delta_power(j) * ring.eisenstein_monomial(rest));
  }
  const std::size_t dk = forms.size();
  require(ring.prec() >= 2 * dk + 2, ErrorCode::kPrecisionTooSmall,
          "precision " + std::to_string(ring.prec()) + " below 2 d_k + 2 = " +
              std::to_string(2 * dk + 2));
  for (std::size_t j = 1; j <= dk; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      require(forms[j - 1].coeffs[i] == 0, ErrorCode::kPrecondition, "basis form vanishing order");
    }
    require(forms[j - 1].coeffs[j] == 1, ErrorCode::kPrecondition, "basis form not normalized");
  }
  // Clear coefficient i of every earlier form using f_i, bottom-up.
  for (std::size_t i = dk; i >= 1; --i) {
    const QExpansion& pivot = forms[i - 1];
    for (std::size_t j = 1; j < i; ++j) {
      QExpansion& target = forms[j - 1];
      const BigInt c = target.coeffs[i];
      if (c == 0) continue;
      for (std::size_t n = i; n < target.coeffs.size(); ++n) {
        mpz_submul(target.coeffs[n].get_mpz_t(), c.get_mpz_t(), pivot.coeffs[n].get_mpz_t());
      }
    }
  }
  for (auto& f : forms) f.weight = k;
  return forms;
}

std::vector<QExpansion> victor_miller_basis(unsigned k, std::size_t prec) {
  ModularFormRing ring(prec);
  return victor_miller_basis(ring, k);
}

std::vector<std::vector<BigInt>> t2_matrix(const std::vector<QExpansion>& basis, unsigned k) {
  const std::size_t dk = basis.size();
  const BigInt two_pow = power(BigInt(2), k - 1);
  std::vector<std::vector<BigInt>> m(dk, std::vector<BigInt>(dk));
  for (std::size_t i = 0; i < dk; ++i) {
    const auto& f = basis[i];
    require(f.prec() >= 2 * dk, ErrorCode::kPrecisionTooSmall, "basis precision too small for T_2");
    for (std::size_t n = 1; n <= dk; ++n) {
      BigInt c = f.coeffs[2 * n];
      if (n % 2 == 0) c += two_pow * f.coeffs[n / 2];
      m[n - 1][i] = std::move(c);
    }
  }
  return m;
}

namespace {

using ZPoly = std::vector<BigInt>;  // constant term first

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

ZPoly sub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a / b for monic b; the remainder must vanish.
ZPoly exact_div_monic(ZPoly a, const ZPoly& b) {
  require(!b.empty() && b.back() == 1, ErrorCode::kPrecondition, "Bareiss pivot is not monic");
  if (a.empty()) return {};
  const std::size_t db = b.size() - 1;
  require(a.size() > db, ErrorCode::kPrecondition, "Bareiss division is not exact");
  ZPoly q(a.size() - db, BigInt(0));
  for (std::size_t top = a.size(); top-- > db;) {
    const BigInt coef = a[top];
    if (coef == 0) continue;
    q[top - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(a[top - db + j].get_mpz_t(), coef.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(a);
  require(a.empty(), ErrorCode::kPrecondition, "Bareiss division is not exact");
  trim(q);
  return q;
}

}  // namespace

IntPolynomial charpoly(const std::vector<std::vector<BigInt>>& matrix) {
  const std::size_t n = matrix.size();
  require(n >= 1, ErrorCode::kValidation, "empty matrix");
  for (const auto& row : matrix) {
    require(row.size() == n, ErrorCode::kValidation, "matrix must be square");
  }
  // a[i][j] = x * [i == j] - m[i][j]
  std::vector<std::vector<ZPoly>> a(n, std::vector<ZPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ZPoly entry{-matrix[i][j]};
      if (i == j) entry.push_back(BigInt(1));
      trim(entry);
      a[i][j] = std::move(entry);
    }
  }
  // Leading principal minors of xI - M are monic, so no pivoting is needed.
  ZPoly prev{BigInt(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_div_monic(sub(mul(a[k][k], a[i][j]), mul(a[i][k], a[k][j])), prev);
      }
    }
    prev = a[k][k];
  }
  return IntPolynomial(a[n - 1][n - 1]);
}

HeckeCharPoly t2_charpoly(unsigned k, std::size_t prec) {
  const auto basis = victor_miller_basis(k, prec);
  HeckeCharPoly out;
  out.k = k;
  out.dk = static_cast<unsigned>(basis.size());
  out.poly = charpoly(t2_matrix(basis, k));
  require(out.poly.degree() == static_cast<int>(out.dk) && out.poly.is_monic(),
          ErrorCode::kPrecondition, "characteristic polynomial has wrong shape");
  return out;
}

HeckeCharPoly t2_charpoly(unsigned k) {
  require(k >= 12 && k % 2 == 0, ErrorCode::kValidation, "weight must be even and >= 12");
  return t2_charpoly(k, default_precision(dim_cusp_level1(k)));
}

std::string_view to_string(MaedaVerdict v) {
  switch (v) {
    case MaedaVerdict::kConsistent: return "consistent";
    case MaedaVerdict::kInconsistent: return "inconsistent";
    case MaedaVerdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

MaedaEvidence maeda_evidence(unsigned k, u64 prime_budget) {
  require(k >= 12 && k % 2 == 0, ErrorCode::kValidation, "weight must be even and >= 12");
  require(dim_cusp_level1(k) >= 1, ErrorCode::kValidation,
          "S_" + std::to_string(k) + "(1) is zero");
  MaedaEvidence ev;
  ev.k = k;
  ev.charpoly = t2_charpoly(k);
  ev.symmetric_group = certify_symmetric_group(ev.charpoly.poly, prime_budget);
  if (ev.charpoly.dk == 1) {
    ev.irreducible = true;
  } else if (auto it = ev.symmetric_group.witnesses.find("transitive");
             it != ev.symmetric_group.witnesses.end()) {
    ev.irreducible = true;
    ev.irreducible_witness = it->second;
  }
  ev.verdict = ev.irreducible && ev.symmetric_group.verdict == Verdict::kCertifiedSn
                   ? MaedaVerdict::kConsistent
                   : MaedaVerdict::kInconclusive;
  return ev;
}

std::vector<MaedaEvidence> maeda_sweep(const std::vector<unsigned>& weights, u64 prime_budget,
                                       unsigned workers) {
  std::vector<MaedaEvidence> out(weights.size());
  parallel_for_segments(weights.size(), workers,
                        [&](std::size_t i) { out[i] = maeda_evidence(weights[i], prime_budget); });
  return out;
}

}  // namespace maedalab
