#include "maedalab/ffpoly.hpp"

#include <algorithm>
#include <sstream>

#include "maedalab/error.hpp"

namespace maedalab {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

std::string IntPolynomial::to_coefficient_list() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out.empty() ? "0" : out;
}

ModPolynomial::ModPolynomial(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= p_;
  trim();
}

ModPolynomial ModPolynomial::x(u64 p) { return ModPolynomial(p, {0, 1}); }

ModPolynomial ModPolynomial::constant(u64 p, u64 c) { return ModPolynomial(p, {c}); }

void ModPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPolynomial ModPolynomial::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  const u64 inv = inv_mod(c_.back(), p_);
  ModPolynomial out(p_);
  out.c_.reserve(c_.size());
  for (u64 v : c_) out.c_.push_back(maedalab::mul_mod(v, inv, p_));
  return out;
}

ModPolynomial ModPolynomial::derivative() const {
  ModPolynomial out(p_);
  if (c_.size() <= 1) return out;
  out.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out.c_[i - 1] = maedalab::mul_mod(c_[i], i % p_, p_);
  }
  out.trim();
  return out;
}

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
  ModPolynomial out(a.p_);
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) {
    const u64 x = i < a.c_.size() ? a.c_[i] : 0;
    const u64 y = i < b.c_.size() ? b.c_[i] : 0;
    out.c_[i] = add_mod(x, y, a.p_);
  }
  out.trim();
  return out;
}

ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b) {
  ModPolynomial out(a.p_);
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) {
    const u64 x = i < a.c_.size() ? a.c_[i] : 0;
    const u64 y = i < b.c_.size() ? b.c_[i] : 0;
    out.c_[i] = sub_mod(x, y, a.p_);
  }
  out.trim();
  return out;
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
  const u64 p = a.p_;
  ModPolynomial out(p);
  if (a.c_.empty() || b.c_.empty()) return out;
  const std::size_t len = a.c_.size() + b.c_.size() - 1;
  out.c_.resize(len);
  if (p < (u64{1} << 32)) {
    // products fit in 64 bits, so a 128-bit accumulator never overflows here
    for (std::size_t k = 0; k < len; ++k) {
      u128 acc = 0;
      const std::size_t lo = k >= b.c_.size() ? k - b.c_.size() + 1 : 0;
      const std::size_t hi = std::min(k, a.c_.size() - 1);
      for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<u128>(a.c_[i] * b.c_[k - i]);
      out.c_[k] = static_cast<u64>(acc % p);
    }
  } else {
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        out.c_[i + j] = add_mod(out.c_[i + j], maedalab::mul_mod(a.c_[i], b.c_[j], p), p);
      }
    }
  }
  out.trim();
  return out;
}

void ModPolynomial::divmod(const ModPolynomial& a, const ModPolynomial& b, ModPolynomial& q,
                           ModPolynomial& r) {
  require(!b.is_zero(), ErrorCode::kZeroPolynomial, "polynomial division by zero");
  const u64 p = a.p_;
  r = a;
  q = ModPolynomial(p);
  if (a.degree() < b.degree()) return;
  const u64 inv_lead = inv_mod(b.leading(), p);
  const std::size_t db = static_cast<std::size_t>(b.degree());
  q.c_.assign(r.c_.size() - db, 0);
  for (std::size_t top = r.c_.size(); top-- > db;) {
    const u64 coef = maedalab::mul_mod(r.c_[top], inv_lead, p);
    if (coef == 0) continue;
    const std::size_t shift = top - db;
    q.c_[shift] = coef;
    for (std::size_t j = 0; j <= db; ++j) {
      r.c_[shift + j] = sub_mod(r.c_[shift + j], maedalab::mul_mod(coef, b.c_[j], p), p);
    }
  }
  r.trim();
  q.trim();
}

ModPolynomial ModPolynomial::operator%(const ModPolynomial& m) const {
  ModPolynomial q(p_), r(p_);
  divmod(*this, m, q, r);
  return r;
}

ModPolynomial ModPolynomial::operator/(const ModPolynomial& m) const {
  ModPolynomial q(p_), r(p_);
  divmod(*this, m, q, r);
  return q;
}

ModPolynomial gcd(ModPolynomial a, ModPolynomial b) {
  while (!b.is_zero()) {
    ModPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPolynomial mul_mod(const ModPolynomial& a, const ModPolynomial& b, const ModPolynomial& m) {
  return (a * b) % m;
}

ModPolynomial pow_mod(const ModPolynomial& base, u64 exponent, const ModPolynomial& m) {
  ModPolynomial result = ModPolynomial::constant(m.modulus(), 1) % m;
  ModPolynomial b = base % m;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, b, m);
    exponent >>= 1;
    if (exponent > 0) b = mul_mod(b, b, m);
  }
  return result;
}

ModPolynomial reduce_mod_p(const IntPolynomial& f, u64 p) {
  require(!f.is_zero(), ErrorCode::kZeroPolynomial, "cannot reduce the zero polynomial");
  std::vector<u64> coeffs(f.coeffs().size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
  }
  require(coeffs.back() != 0, ErrorCode::kLeadingCoefficientVanishes,
          "leading coefficient vanishes mod " + std::to_string(p));
  return ModPolynomial(p, std::move(coeffs));
}

bool is_squarefree(const ModPolynomial& g) {
  if (g.degree() <= 0) return true;
  return gcd(g, g.derivative()).degree() == 0;
}

DegreeCounts distinct_degree_profile(const ModPolynomial& g) {
  require(!g.is_zero(), ErrorCode::kZeroPolynomial, "zero polynomial has no factorization");
  require(g.degree() >= 1, ErrorCode::kPrecondition, "need deg g >= 1");
  require(g.leading() == 1, ErrorCode::kPrecondition, "distinct-degree factorization needs monic g");
  require(is_squarefree(g), ErrorCode::kNotSquarefree, "polynomial is not squarefree mod p");

  const u64 p = g.modulus();
  const ModPolynomial x = ModPolynomial::x(p);
  DegreeCounts counts;
  ModPolynomial rest = g;
  ModPolynomial frob = x % rest;  // x^(p^i) mod rest
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    frob = pow_mod(frob, p, rest);
    ModPolynomial block = gcd(rest, frob - x);
    if (block.degree() > 0) {
      counts[i] = block.degree() / i;
      rest = rest / block;
      frob = frob % rest;
    }
  }
  if (rest.degree() > 0) counts[rest.degree()] += 1;
  return counts;
}

std::vector<unsigned> ResidueDegreeProfile::cycle_type() const {
  std::vector<unsigned> out;
  for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
    out.insert(out.end(), static_cast<std::size_t>(it->second), static_cast<unsigned>(it->first));
  }
  return out;
}

std::string ResidueDegreeProfile::label() const {
  std::string out;
  for (unsigned v : cycle_type()) {
    if (!out.empty()) out += '-';
    out += std::to_string(v);
  }
  return out;
}

ResidueDegreeProfile residue_degrees(const ModPolynomial& reduced) {
  ResidueDegreeProfile profile;
  profile.p = reduced.modulus();
  const ModPolynomial g = reduced.monic();
  if (g.degree() < 1 || !is_squarefree(g)) {
    profile.ramified = true;
    return profile;
  }
  profile.degrees = distinct_degree_profile(g);
  return profile;
}

ResidueDegreeProfile residue_degrees(const IntPolynomial& f, u64 p) {
  try {
    return residue_degrees(reduce_mod_p(f, p));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kLeadingCoefficientVanishes) throw;
    ResidueDegreeProfile profile;
    profile.p = p;
    profile.ramified = true;
    return profile;
  }
}

}  // namespace maedalab
