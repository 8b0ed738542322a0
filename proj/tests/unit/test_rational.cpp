#include <doctest.h>

#include "lcy/rational.hpp"
#include "lcy/std_coeff.hpp"

using namespace lcy;

TEST_CASE("rational parsing and printing") {
  CHECK(rat_to_string(Rat(1, 2)) == "1/2");
  CHECK(rat_to_string(Rat(4, 2)) == "2");
  CHECK(rat_to_string(Rat(-3, 9)) == "-1/3");
  CHECK(parse_rat("2/3") == Rat(2, 3));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("1/2/3"), ParseError);
}

TEST_CASE("floor and ceil") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_floor(Rat(4)) == 4);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
}

TEST_CASE("integer square root bound") {
  CHECK(ceil_sqrt_quotient(9, 1) == 3);
  CHECK(ceil_sqrt_quotient(10, 1) == 4);
  CHECK(ceil_sqrt_quotient(9, 2) == 3);  // 9/2 = 4.5, ceil sqrt = 3
  CHECK(ceil_sqrt_quotient(0, 1) == 0);
  CHECK(ceil_sqrt_quotient(1, 1) == 1);
}

TEST_CASE("standard approximation examples") {
  using curves::standard_approximation;
  CHECK(standard_approximation(Rat(3, 5)).value() == Rat(1, 2));
  CHECK(standard_approximation(Rat(3, 5)).index == 2);
  CHECK(standard_approximation(Rat(1)).infinite);
  CHECK(standard_approximation(Rat(49, 100)).value() == Rat(0));
  CHECK(standard_approximation(Rat(49, 100)).index == 1);
  CHECK(standard_approximation(Rat(2, 3)).index == 3);
  CHECK_THROWS_AS(standard_approximation(Rat(3, 2)), PreconditionError);
  CHECK_THROWS_AS(standard_approximation(Rat(-1, 2)), PreconditionError);
}

TEST_CASE("standard approximation is idempotent and below the input") {
  for (long long q = 0; q <= 60; ++q)
    for (long long p = 0; p <= q; ++p) {
      if (q == 0) continue;
      Rat x(p, q);
      curves::StdCoeff c = curves::standard_approximation(x);
      CHECK(c.value() <= x);
      CHECK(curves::standard_approximation(c.value()).value() == c.value());
    }
}

TEST_CASE("orbifold index round-trip") {
  for (long long m = 1; m <= 40; ++m) {
    curves::StdCoeff c = curves::StdCoeff::finite(m);
    CHECK(curves::orbifold_index(c.value()).index == m);
  }
  CHECK(curves::orbifold_index(Rat(1)).infinite);
  CHECK_THROWS_AS(curves::orbifold_index(Rat(2, 5)), PreconditionError);
}
