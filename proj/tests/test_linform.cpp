#include <doctest.h>

#include "cancov/linform.hpp"

using namespace cancov;

namespace {
LinForm lf(long slope, long offset, const char* param) {
  return LinForm(Rational(slope), Rational(offset), param);
}
}  // namespace

TEST_CASE("evaluation of table formulas") {
  const LinForm k2_x = lf(24, -32, "n");  // pair I, K2 of X
  CHECK(k2_x.eval(3) == Rational(40));
  CHECK(k2_x.eval(4) == Rational(64));
  CHECK(lf(4, -3, "n").eval(3) == Rational(9));
}

TEST_CASE("equality needs slope, offset and parameter to agree") {
  CHECK(lf(24, -12, "k") == lf(24, -12, "k"));
  CHECK_FALSE(lf(24, -12, "k") == lf(24, -12, "n"));
  CHECK_FALSE(lf(24, -12, "k") == lf(24, -11, "k"));
  CHECK_FALSE(lf(24, -12, "k") == lf(23, -12, "k"));
}

TEST_CASE("forms in different parameters refuse to combine") {
  CHECK_THROWS_AS(lf(1, 0, "k") + lf(1, 0, "n"), ParameterMismatchError);
  CHECK_THROWS_AS(lf(1, 0, "k") - lf(1, 0, "n"), ParameterMismatchError);
}

TEST_CASE("linear operations") {
  const LinForm a = lf(3, 1, "k"), b = lf(2, -5, "k");
  CHECK(a + b == lf(5, -4, "k"));
  CHECK(a - b == lf(1, 6, "k"));
  CHECK(Rational(4) * a == lf(12, 4, "k"));
  CHECK(-a == lf(-3, -1, "k"));
  CHECK(combine(Rational(2), a, Rational(-3), b) == lf(0, 17, "k"));
}

TEST_CASE("reparam substitutes t = factor * s") {
  // pair table row in n, series parameterized by n = 3k
  CHECK(lf(4, -3, "n").reparam(3, "k") == lf(12, -3, "k"));
  CHECK(lf(0, 2, "n").reparam(3, "k") == lf(0, 2, "k"));
  CHECK_THROWS_AS(lf(1, 0, "n").reparam(0, "k"), Error);
}

TEST_CASE("divide_exact checks both coefficients") {
  auto [q1, ok1] = divide_exact(lf(72, -36, "k"), 3);
  CHECK(ok1);
  CHECK(q1 == lf(24, -12, "k"));

  auto [q2, ok2] = divide_exact(lf(72, -32, "k"), 3);
  CHECK_FALSE(ok2);  // offset -32/3 is fractional even though values can be integral
}

TEST_CASE("integer_valued means integer slope and offset") {
  CHECK(lf(24, -12, "k").integer_valued());
  CHECK_FALSE(
      LinForm(Rational(1, 3), Rational(0), "k").integer_valued());
}

TEST_CASE("half-line sign decisions use slope and the floor value") {
  CHECK(nonnegative_from(lf(2, -2, "k"), 1));        // 2k-2 >= 0 for k >= 1
  CHECK_FALSE(nonnegative_from(lf(2, -3, "k"), 1));  // negative at k = 1
  CHECK_FALSE(nonnegative_from(lf(-1, 100, "k"), 1));  // eventually negative
  CHECK(ge_on_halfline(lf(9, 0, "k"), lf(4, 5, "k"), 1));
  CHECK_FALSE(ge_on_halfline(lf(9, 0, "k"), lf(4, 6, "k"), 1));
  CHECK_FALSE(ge_on_halfline(lf(4, 100, "k"), lf(9, 0, "k"), 1));
}

TEST_CASE("display forms") {
  CHECK(lf(24, -12, "k").str() == "24k-12");
  CHECK(lf(4, -3, "n").str() == "4n-3");
  CHECK(lf(1, 0, "k").str() == "k");
  CHECK(lf(-1, 0, "k").str() == "-k");
  CHECK(lf(0, -2, "k").str() == "-2");
  CHECK(lf(0, 0, "k").str() == "0");
  CHECK(LinForm(Rational(1, 3), Rational(2), "k").str() == "(1/3)k+2");
}

TEST_CASE("explicit display always shows both coefficients") {
  CHECK(lf(24, -12, "k").str_explicit() == "24*k-12");
  CHECK(lf(0, 5, "k").str_explicit() == "0*k+5");
  CHECK(lf(1, 0, "n").str_explicit() == "1*n+0");
}

TEST_CASE("default-constructed placeholder cannot join named arithmetic") {
  const LinForm placeholder;
  CHECK_THROWS_AS(placeholder + lf(1, 0, "k"), ParameterMismatchError);
}
