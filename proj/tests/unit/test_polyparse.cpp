#include "doctest.h"
#include "maedalab/error.hpp"
#include "maedalab/polyparse.hpp"

using namespace maedalab;

TEST_CASE("parse coefficient lists and human forms") {
  const auto f = parse_polynomial("x^5-x-1");
  CHECK(f.to_coefficient_list() == "-1,-1,0,0,0,1");
  CHECK(parse_polynomial("-1,-1,0,0,0,1") == f);
  CHECK(parse_polynomial(" -1, -1, 0, 0, 0, 1 ") == f);
  CHECK(parse_polynomial("x^2+1").to_coefficient_list() == "1,0,1");
  CHECK(parse_polynomial("3*x^2 + 2x - 7").to_coefficient_list() == "-7,2,3");
  CHECK(parse_polynomial("-x^3+x^3+x").to_coefficient_list() == "0,1");
  CHECK(parse_polynomial("x^3 - 2").to_coefficient_list() == "-2,0,0,1");
  CHECK(parse_polynomial("123456789012345678901234567890x + 1").coeff(1) ==
        BigInt("123456789012345678901234567890"));
}

TEST_CASE("parser rejects non-integer or multi-variable input") {
  for (const char* bad : {"", "x^", "y^2+1", "x^2+1.5", "x^2 ++ 1", "1/2x", "x^-1", "2*y",
                          "1,,2", "1,a", "0", "x-x", "x2"}) {
    CAPTURE(bad);
    try {
      parse_polynomial(bad);
      FAIL("accepted bad input");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
    }
  }
}

TEST_CASE("printing then parsing is the identity") {
  for (const char* text : {"x^5-x-1", "x^7 - 3x^4 + 12x - 9", "-4,0,0,17,-2,1", "x"}) {
    const auto f = parse_polynomial(text);
    CHECK(parse_polynomial(f.to_string()) == f);
    CHECK(parse_polynomial(f.to_coefficient_list()) == f);
  }
}
