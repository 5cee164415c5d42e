#include <doctest.h>

#include "cancov/kunneth.hpp"

using namespace cancov;

namespace {

// Shadows of the pair-I bundles: h^*(M^2) = (4,0,0), h^*(O_V) = (1,2,1).
const LineBundleShadow kSquare{{4, 0, 0}, "M^2"};
const LineBundleShadow kStructure{{1, 2, 1}, "O_V"};

}  // namespace

TEST_CASE("cohomology of O(m) on the line") {
  CHECK(p1_cohomology(0) == std::pair<long, long>{1, 0});
  CHECK(p1_cohomology(3) == std::pair<long, long>{4, 0});
  CHECK(p1_cohomology(-1) == std::pair<long, long>{0, 0});
  CHECK(p1_cohomology(-2) == std::pair<long, long>{0, 1});
  CHECK(p1_cohomology(-5) == std::pair<long, long>{0, 4});
}

TEST_CASE("Kunneth dimensions of a box product") {
  const LineBundleShadow a{{2, 3, 4}, "A"};

  SUBCASE("nonnegative twist") {
    const CohTriple c = product_cohomology(a, 1);
    CHECK(c.h0 == 4);
    CHECK(c.h1 == 6);
    CHECK(c.h2 == 8);
  }
  SUBCASE("twist -1 kills everything") {
    const CohTriple c = product_cohomology(a, -1);
    CHECK(c.h0 == 0);
    CHECK(c.h1 == 0);
    CHECK(c.h2 == 0);
  }
  SUBCASE("negative twist shifts degrees up") {
    const CohTriple c = product_cohomology(a, -3);
    CHECK(c.h0 == 0);
    CHECK(c.h1 == 4);
    CHECK(c.h2 == 6);
  }
  SUBCASE("canonical bundle of the product") {
    const CohTriple c = product_cohomology(kStructure, -2);
    CHECK(c.h0 == 0);
    CHECK(c.h1 == 1);
    CHECK(c.h2 == 2);
  }
}

TEST_CASE("negative shadow dimensions are rejected") {
  CHECK_THROWS_AS(product_cohomology({{1, -1, 0}, "bad"}, 0), Error);
}

TEST_CASE("pg of a member of |M^2 box O(n)|") {
  CHECK(member_pg(kSquare, kStructure, 2) == 5);
  for (long n = 3; n <= 50; ++n) {
    CAPTURE(n);
    CHECK(member_pg(kSquare, kStructure, n) == 4 * n - 3);
  }
}

TEST_CASE("member_pg insists on the vanishing hypothesis") {
  const LineBundleShadow obstructed{{4, 1, 0}, "M^2 (obstructed)"};
  CHECK_THROWS_WITH_AS(member_pg(obstructed, kStructure, 3),
                       doctest::Contains("M^2 (obstructed)"),
                       VanishingHypothesisError);
}

TEST_CASE("equivariant pg for the first series") {
  const auto adjoint = [](long k) {
    return WeightConfig{{0, 0, 2, 1}, 1, 2, 3 * k - 2};
  };
  CHECK(equivariant_member_pg(adjoint(1), 1) == 3);
  CHECK(equivariant_member_pg(adjoint(3), 1) == 11);
  for (long k = 1; k <= 50; ++k) {
    CAPTURE(k);
    CHECK(equivariant_member_pg(adjoint(k), 1) == 4 * k - 1);
  }
}

TEST_CASE("with a trivial action the equivariant count is the full count") {
  // all four adjoint sections invariant, coordinates untouched: the invariant
  // subspace is everything and both routes must agree
  for (long k = 1; k <= 20; ++k) {
    const WeightConfig trivial{{0, 0, 0, 0}, 0, 0, 3 * k - 2};
    CHECK(equivariant_member_pg(trivial, 1) ==
          member_pg(kSquare, kStructure, 3 * k));
  }
}
