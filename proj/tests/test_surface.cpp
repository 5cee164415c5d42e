#include <doctest.h>

#include "cancov/surface.hpp"

using namespace cancov;

namespace {
LinForm lf(long slope, long offset, const char* param) {
  return LinForm(Rational(slope), Rational(offset), param);
}
}  // namespace

TEST_CASE("make_surface derives chi and e, numerically") {
  // pair I cover at n = 3
  const auto x = make_surface<Rational>(2, 9, 40, "X");
  CHECK(x.chi == Rational(8));
  CHECK(x.e == Rational(56));
  CHECK(check_identities(x).empty());
}

TEST_CASE("make_surface derives chi and e, symbolically") {
  const auto x = make_surface<LinForm>(lf(0, 2, "n"), lf(4, -3, "n"),
                                       lf(24, -32, "n"), "pair I X");
  CHECK(x.chi == lf(4, -4, "n"));
  CHECK(x.e == lf(24, -16, "n"));
  CHECK(check_identities(x).empty());
}

TEST_CASE("each identity violation is reported by name") {
  auto x = make_surface<Rational>(2, 9, 40, "X");

  SUBCASE("tampering with chi breaks both identities") {
    x.chi = Rational(9);
    const auto violated = check_identities(x);
    REQUIRE(violated.size() == 2);
    CHECK(violated[0] == "chi = 1 - q + pg");
    CHECK(violated[1] == "e = 12*chi - K2");
  }

  SUBCASE("recomputing e from the tampered chi isolates the chi identity") {
    x.chi = Rational(9);
    x.e = Rational(12) * x.chi - x.k2;
    const auto violated = check_identities(x);
    REQUIRE(violated.size() == 1);
    CHECK(violated[0] == "chi = 1 - q + pg");
  }

  SUBCASE("tampering with e alone breaks only the Noether identity") {
    x.e = x.e + Rational(1);
    const auto violated = check_identities(x);
    REQUIRE(violated.size() == 1);
    CHECK(violated[0] == "e = 12*chi - K2");
  }
}

TEST_CASE("locus-aware identity check") {
  auto x = make_surface<Rational>(2, 9, 40, "X");
  x.e = x.e + Rational(4);

  const SingularLocus<Rational> nodes{Rational(4), 0, 0};
  const SingularLocus<Rational> none{Rational(0), 0, 0};
  CHECK(empty_locus(none));
  CHECK_FALSE(empty_locus(nodes));

  // unresolved with singular points: e identity not applicable
  CHECK(check_identities(x, nodes, false).empty());
  // resolved, or no singular points: back to the strict check
  CHECK(check_identities(x, nodes, true).size() == 1);
  CHECK(check_identities(x, none, false).size() == 1);
}

TEST_CASE("symbolic locus emptiness looks at both coefficients") {
  const SingularLocus<LinForm> moving{lf(48, 0, "k"), 0, 0};
  const SingularLocus<LinForm> zero{lf(0, 0, "k"), 0, 0};
  CHECK_FALSE(empty_locus(moving));
  CHECK(empty_locus(zero));
}
