#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schur/laurent.hpp"

using namespace schur;

TEST_CASE("arithmetic and normalization") {
  Laurent a = Laurent(2) + Laurent::v(1) - Laurent::v(-1);
  Laurent b = Laurent::v(-1) - Laurent::v(1);
  CHECK((a + b) == Laurent(2));
  CHECK((a - a).is_zero());
  CHECK((Laurent(1) - Laurent(1)).is_zero());
  Laurent prod = (Laurent::v(1) + Laurent::v(-1)) * (Laurent::v(1) + Laurent::v(-1));
  CHECK(prod == Laurent::v(2) + Laurent(2) + Laurent::v(-2));
  CHECK(Laurent(0).is_zero());
  CHECK(Laurent(1).is_one());
}

TEST_CASE("bar is the exponent flip and an involution") {
  Laurent f = Laurent(3, 2) + Laurent(1, 0) + Laurent(-2, -5);
  CHECK(f.bar().coeff(5) == -2);
  CHECK(f.bar().coeff(-2) == 3);
  CHECK(f.bar().bar() == f);
  Laurent pi = Laurent::v(1) + Laurent::v(-1);
  CHECK(pi.self_dual());
  CHECK(!Laurent::v(1).self_dual());
}

TEST_CASE("exact division") {
  Laurent pi = Laurent::v(1) + Laurent::v(-1);
  Laurent f = pi * (Laurent::v(3) + Laurent(5) + Laurent::v(-2));
  CHECK(f.exact_div(pi) == Laurent::v(3) + Laurent(5) + Laurent::v(-2));
  CHECK_THROWS_AS((pi + Laurent(1)).exact_div(pi + Laurent::v(2)), std::domain_error);
  Laurent q;
  CHECK(!Laurent::try_div(Laurent(3), Laurent(2), q));
  CHECK(Laurent::try_div(Laurent(), pi, q));
  CHECK(q.is_zero());
}

TEST_CASE("text format and parsing") {
  Laurent f = Laurent(1, -1) + Laurent(2, 0) + Laurent(3, 2);
  CHECK(f.str() == "v^-1 + 2 + 3*v^2");
  CHECK(Laurent::parse("v^-1 + 2 + 3*v^2") == f);
  CHECK(Laurent().str() == "0");
  CHECK(Laurent::parse("0").is_zero());
  Laurent g = Laurent(-1, 1) + Laurent(1, 3);
  CHECK(g.str() == "-v + v^3");
  CHECK(Laurent::parse(g.str()) == g);
  CHECK(Laurent::parse("- v + v^3") == g);
  CHECK(Laurent::parse("7").coeff(0) == 7);
  // coefficients that do not fit machine words survive the round trip
  Laurent big(mpz_class("123456789012345678901234567890"), 4);
  CHECK(Laurent::parse(big.str()) == big);
}

TEST_CASE("coefficient sign queries") {
  CHECK((Laurent::v(2) + Laurent::v(1)).nonneg());
  CHECK(!(Laurent::v(2) - Laurent::v(1)).nonneg());
  CHECK((Laurent::v(1) + Laurent::v(3)).positive_exponents_only());
  CHECK(!(Laurent(1) + Laurent::v(3)).positive_exponents_only());
  CHECK(Laurent().nonneg());
}

TEST_CASE("shifts") {
  Laurent f = Laurent(1) + Laurent::v(2);
  CHECK(f.shifted(3) == Laurent::v(3) + Laurent::v(5));
  CHECK(f.shifted(0) == f);
  CHECK(f.shifted(-2) == Laurent::v(-2) + Laurent(1));
}
