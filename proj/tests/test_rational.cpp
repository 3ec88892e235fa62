#include <doctest.h>

#include <limits>

#include "rootfan/linalg.hpp"
#include "rootfan/rational.hpp"

using namespace rootfan;

TEST_CASE("Rational normalizes and compares") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-1, 2).den() == 2);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3) > Rational(-1, 2));
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(7, 3).str() == "7/3");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 2).to_integer(), std::domain_error);
}

TEST_CASE("Rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(2, 3) == Rational(-2, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("checked arithmetic reports overflow") {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_neg(std::numeric_limits<std::int64_t>::min()), std::overflow_error);
  CHECK_THROWS_AS(Rational(big, 1) + Rational(1), std::overflow_error);
  CHECK(checked_sub(5, 7) == -2);
}

TEST_CASE("rank and independent rows") {
  CHECK(rank({{1, 0}, {0, 1}, {1, 1}}) == 2);
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rank({}) == 0);
  CHECK(independent_rows({{0, 0}, {1, 1}, {2, 2}, {1, 0}}) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("inverse over the rationals") {
  const RationalMatrix m = {{2, 1}, {1, 1}};
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv == RationalMatrix{{1, -1}, {-1, 2}});

  const RationalMatrix half = {{2, 0}, {0, 4}};
  CHECK(*inverse(half) == RationalMatrix{{Rational(1, 2), 0}, {0, Rational(1, 4)}});
  CHECK_FALSE(inverse(RationalMatrix{{1, 2}, {2, 4}}));

  // Needs a row swap.
  const auto swapped = inverse(RationalMatrix{{0, 1}, {1, 0}});
  REQUIRE(swapped);
  CHECK(*swapped == RationalMatrix{{0, 1}, {1, 0}});
}
