#include "doctest.h"
#include "maedalab/density_model.hpp"
#include "maedalab/error.hpp"
#include "maedalab/hecke.hpp"
#include "oracles.hpp"

using namespace maedalab;

TEST_CASE("Eisenstein series") {
  auto e4 = eisenstein(4, 10);
  CHECK(e4[0] == 1);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 2160);
  auto e6 = eisenstein(6, 10);
  CHECK(e6[0] == 1);
  CHECK(e6[1] == -504);
  CHECK(e6[2] == -16632);
  CHECK_THROWS_AS(eisenstein(8, 10), Error);
  // E_4^2 = E_8 = 1 + 480 sum sigma_7(n) q^n
  auto e8 = e4 * e4;
  CHECK(e8[1] == 480);
  CHECK(e8[2] == 480 * 129);
}

TEST_CASE("Delta matches the product expansion") {
  const std::size_t prec = 60;
  auto delta = delta_form(prec);
  const auto product = oracle::delta_product(prec);
  CHECK(delta[0] == 0);
  CHECK(delta[1] == 1);
  CHECK(delta[2] == -24);
  CHECK(delta[3] == 252);
  for (std::size_t n = 0; n <= prec; ++n) CHECK(delta[n] == product[n]);
}

TEST_CASE("Victor Miller basis shape") {
  auto b12 = victor_miller_basis(12, 10);
  REQUIRE(b12.size() == 1);
  const auto delta = delta_form(10);
  CHECK(b12[0].coeffs == delta.coeffs);

  for (unsigned k : {24u, 36u, 50u, 98u, 144u}) {
    const unsigned dk = dim_cusp_level1(k);
    auto basis = victor_miller_basis(k, minimal_precision(dk));
    REQUIRE(basis.size() == dk);
    for (unsigned i = 1; i <= dk; ++i) {
      CHECK(basis[i - 1][0] == 0);
      for (unsigned j = 1; j <= dk; ++j) CHECK(basis[i - 1][j] == (i == j ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(victor_miller_basis(13, 10), Error);
  CHECK_THROWS_AS(victor_miller_basis(10, 10), Error);
  try {
    victor_miller_basis(48, 6);
    FAIL("expected precision error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecisionTooSmall);
  }
}

TEST_CASE("basis size equals d_k for even 12 <= k <= 200") {
  ModularFormRing ring(minimal_precision(dim_cusp_level1(200)));
  for (unsigned k = 12; k <= 200; k += 2) {
    CHECK(victor_miller_basis(ring, k).size() == dim_cusp_level1(k));
  }
}

TEST_CASE("charpoly by Bareiss agrees with Faddeev-LeVerrier") {
  const std::vector<std::vector<BigInt>> m{
      {BigInt(2), BigInt(-1), BigInt(0), BigInt(5)},
      {BigInt(3), BigInt(7), BigInt(1), BigInt(0)},
      {BigInt(0), BigInt(4), BigInt(-6), BigInt(2)},
      {BigInt(1), BigInt(1), BigInt(1), BigInt(1)}};
  const auto cp = charpoly(m);
  const auto ref = oracle::faddeev_leverrier(m);
  REQUIRE(cp.degree() == 4);
  for (int i = 0; i <= 4; ++i) CHECK(Rational(cp.coeff(i)) == ref[static_cast<std::size_t>(i)]);

  // a matrix whose leading 1x1 minor vanishes at x = 0 still works
  const std::vector<std::vector<BigInt>> z{{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}};
  CHECK(charpoly(z).to_coefficient_list() == "-1,0,1");
}

TEST_CASE("T_2 characteristic polynomials") {
  auto cp12 = t2_charpoly(12);
  CHECK(cp12.dk == 1);
  CHECK(cp12.poly.to_coefficient_list() == "24,1");
  CHECK(cp12.poly.coeff(0) == -oracle::delta_product(2)[2]);

  auto cp16 = t2_charpoly(16);
  CHECK(cp16.poly.to_coefficient_list() == "-216,1");  // a_2(E_4 Delta) = 240 - 24

  auto cp24 = t2_charpoly(24);
  CHECK(cp24.poly.to_coefficient_list() == "-20468736,-1080,1");
  const BigInt disc = cp24.poly.coeff(1) * cp24.poly.coeff(1) - 4 * cp24.poly.coeff(0);
  CHECK(disc > 0);
  CHECK_FALSE(mpz_perfect_square_p(disc.get_mpz_t()));
}

TEST_CASE("T_2 charpoly matches the oracle on the Hecke matrix") {
  for (unsigned k : {36u, 60u, 96u}) {
    const unsigned dk = dim_cusp_level1(k);
    const auto basis = victor_miller_basis(k, default_precision(dk));
    const auto m = t2_matrix(basis, k);
    const auto ref = oracle::faddeev_leverrier(m);
    const auto cp = t2_charpoly(k);
    for (unsigned i = 0; i <= dk; ++i) CHECK(Rational(cp.poly.coeff(static_cast<int>(i))) == ref[i]);
  }
}

TEST_CASE("charpoly is independent of precision") {
  for (unsigned k = 12; k <= 120; k += 2) {
    const unsigned dk = dim_cusp_level1(k);
    if (dk == 0) continue;
    CAPTURE(k);
    CHECK(t2_charpoly(k, minimal_precision(dk)).poly == t2_charpoly(k, default_precision(dk)).poly);
  }
}

TEST_CASE("maeda_evidence") {
  auto e12 = maeda_evidence(12, 10000);
  CHECK(e12.verdict == MaedaVerdict::kConsistent);
  CHECK(e12.irreducible);

  auto e24 = maeda_evidence(24, 10000);
  CHECK(e24.verdict == MaedaVerdict::kConsistent);
  REQUIRE(e24.irreducible_witness.has_value());
  CHECK(*e24.irreducible_witness < 100);

  CHECK_THROWS_AS(maeda_evidence(14, 100), Error);
  CHECK_THROWS_AS(maeda_evidence(25, 100), Error);

  auto sweep = maeda_sweep({12, 16, 24, 36}, 10000, 3);
  REQUIRE(sweep.size() == 4);
  CHECK(sweep[2].k == 24);
  for (const auto& ev : sweep) CHECK(ev.verdict == MaedaVerdict::kConsistent);
}
