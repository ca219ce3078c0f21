#pragma once

// Level-one cusp forms via the Victor Miller basis and the characteristic
// polynomial of T_2 on S_k(1).

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "maedalab/exact.hpp"
#include "maedalab/ffpoly.hpp"
#include "maedalab/galois.hpp"

namespace maedalab {

/// Truncated q-expansion a_0 + a_1 q + ... + a_prec q^prec.
struct QExpansion {
  unsigned weight = 0;
  std::vector<BigInt> coeffs;

  std::size_t prec() const { return coeffs.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return coeffs[n]; }
};

QExpansion operator+(const QExpansion& a, const QExpansion& b);
QExpansion operator*(const QExpansion& a, const QExpansion& b);

/// E_4 or E_6 normalized with constant term 1.
QExpansion eisenstein(unsigned weight, std::size_t prec);

/// (E_4^3 - E_6^2) / 1728
QExpansion delta_form(std::size_t prec);

/// Caches E_4^a, E_6 and Delta^j at one precision so weight sweeps do not
/// recompute powers.
class ModularFormRing {
 public:
  explicit ModularFormRing(std::size_t prec);

  std::size_t prec() const { return prec_; }
  const QExpansion& e4_power(unsigned a);
  const QExpansion& delta_power(unsigned j);
  /// E_4^a E_6^b with 4a + 6b = weight, b in {0, 1}; weight != 2.
  QExpansion eisenstein_monomial(unsigned weight);

 private:
  std::size_t prec_;
  QExpansion e6_;
  std::vector<QExpansion> e4_powers_;
  std::vector<QExpansion> delta_powers_;
};

inline std::size_t default_precision(unsigned dk) { return 4 * dk + 4; }
inline std::size_t minimal_precision(unsigned dk) { return 2 * dk + 2; }

/// f_1..f_dk with f_i = q^i + O(q^(dk+1)); prec must be >= 2 dk + 2.
std::vector<QExpansion> victor_miller_basis(unsigned k, std::size_t prec);
std::vector<QExpansion> victor_miller_basis(ModularFormRing& ring, unsigned k);

struct HeckeCharPoly {
  unsigned k = 0;
  unsigned dk = 0;
  IntPolynomial poly;
};

/// Matrix of T_2 on the Victor Miller basis: column i holds T_2 f_i.
std::vector<std::vector<BigInt>> t2_matrix(const std::vector<QExpansion>& basis, unsigned k);

/// det(x I - M) by fraction-free elimination over Z[x].
IntPolynomial charpoly(const std::vector<std::vector<BigInt>>& matrix);

HeckeCharPoly t2_charpoly(unsigned k, std::size_t prec);
/// Uses default_precision(d_k).
HeckeCharPoly t2_charpoly(unsigned k);

enum class MaedaVerdict { kConsistent, kInconsistent, kInconclusive };
std::string_view to_string(MaedaVerdict v);

struct MaedaEvidence {
  unsigned k = 0;
  HeckeCharPoly charpoly;
  bool irreducible = false;
  std::optional<u64> irreducible_witness;
  GaloisCertificate symmetric_group;
  MaedaVerdict verdict = MaedaVerdict::kInconclusive;
};

MaedaEvidence maeda_evidence(unsigned k, u64 prime_budget);

/// Evaluates every weight independently; results follow the input order.
std::vector<MaedaEvidence> maeda_sweep(const std::vector<unsigned>& weights, u64 prime_budget,
                                       unsigned workers = 1);

}  // namespace maedalab
