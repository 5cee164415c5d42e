#include <doctest.h>

#include "cancov/rational.hpp"

using namespace cancov;

TEST_CASE("rationals are stored reduced with positive denominator") {
  const Rational half(2, 4);
  CHECK(half.num() == 1);
  CHECK(half.den() == 2);

  const Rational neg(3, -6);
  CHECK(neg.num() == -1);
  CHECK(neg.den() == 2);
  CHECK(neg.sign() == -1);

  CHECK(Rational(-4, -2) == Rational(2));
}

TEST_CASE("zero denominator is rejected at construction") {
  CHECK_THROWS_AS(Rational(1, 0), ZeroDenominatorError);
}

TEST_CASE("exact field arithmetic") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), DivisionByZeroError);

  Rational acc(0);
  for (int i = 0; i < 7; ++i) acc += Rational(1, 7);
  CHECK(acc == Rational(1));  // no drift, ever
}

TEST_CASE("ordering and integrality") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(-4));
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
  CHECK(Rational(0).is_zero());
}

TEST_CASE("string form is p/q, or p for integers") {
  CHECK(Rational(40).str() == "40");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(0).str() == "0");
}

TEST_CASE("divide_exact reports integrality of the quotient") {
  auto [q1, ok1] = divide_exact(Rational(36), 3);
  CHECK(ok1);
  CHECK(q1 == Rational(12));

  auto [q2, ok2] = divide_exact(Rational(40), 3);
  CHECK_FALSE(ok2);
  CHECK(q2 == Rational(40, 3));

  CHECK_THROWS_AS(divide_exact(Rational(1), 0), Error);
}

TEST_CASE("to_long accepts exactly the machine integers") {
  CHECK(to_long(Rational(-12)) == -12);
  CHECK_THROWS_AS(to_long(Rational(1, 2)), Error);
}

TEST_CASE("half-line helpers degenerate to pointwise comparisons") {
  CHECK(nonnegative_from(Rational(0), 5));
  CHECK_FALSE(nonnegative_from(Rational(-1), 5));
  CHECK(ge_on_halfline(Rational(3), Rational(2), 1));
  CHECK_FALSE(ge_on_halfline(Rational(2), Rational(3), 1));
}
