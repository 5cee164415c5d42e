#include <doctest.h>

#include "cancov/catalog.hpp"

using namespace cancov;

namespace {

LinForm lf(long slope, long offset, const char* param = "k") {
  return LinForm(Rational(slope), Rational(offset), param);
}

}  // namespace

TEST_CASE("pair ids parse and print") {
  CHECK(parse_pair_id("I") == PairId::I);
  CHECK(parse_pair_id("II") == PairId::II);
  CHECK(parse_pair_id("III") == PairId::III);
  CHECK_THROWS_AS(parse_pair_id("IV"), CatalogError);
  CHECK_THROWS_AS(parse_pair_id(""), CatalogError);
  CHECK(std::string(to_string(PairId::II)) == "II");
}

TEST_CASE("builtin catalog shape") {
  const Catalog& cat = builtin_catalog();
  CHECK(cat.pairs.size() == 3);
  CHECK(cat.examples.size() == 3);
  CHECK_THROWS_AS(cat.example(0), CatalogError);
  CHECK_THROWS_AS(cat.example(4), CatalogError);
  for (int id = 1; id <= 3; ++id) CHECK(cat.example(id).id == id);
}

TEST_CASE("pair metadata") {
  const Catalog& cat = builtin_catalog();
  CHECK(cat.pair(PairId::I).genus == 3);
  CHECK(cat.pair(PairId::I).iota_fixed_points == 16);
  CHECK(cat.pair(PairId::II).genus == 3);
  CHECK(cat.pair(PairId::II).iota_fixed_points == 20);
  CHECK(cat.pair(PairId::III).genus == 4);
  CHECK(cat.pair(PairId::III).iota_fixed_points == 28);
  for (const auto& p : cat.pairs) CHECK(p.min_n == 3);
  CHECK(cat.pair(PairId::I).l_shadow.has_value());
  CHECK_FALSE(cat.pair(PairId::II).l_shadow.has_value());
}

TEST_CASE("pair tables at concrete n") {
  const Catalog& cat = builtin_catalog();

  const auto [x1, s1] = pair_invariants(cat, PairId::I, 3);
  CHECK(x1.q == Rational(2));
  CHECK(x1.pg == Rational(9));
  CHECK(x1.k2 == Rational(40));
  CHECK(x1.chi == Rational(8));
  CHECK(s1.q == Rational(0));
  CHECK(s1.pg == Rational(9));
  CHECK(s1.k2 == Rational(20));
  CHECK(s1.chi == Rational(10));

  const auto [x2, s2] = pair_invariants(cat, PairId::II, 4);
  CHECK(x2.q == Rational(2));
  CHECK(x2.pg == Rational(17));
  CHECK(x2.k2 == Rational(96));
  CHECK(s2.k2 == Rational(48));

  const auto [x3, s3] = pair_invariants(cat, PairId::III, 3);
  CHECK(x3.q == Rational(3));
  CHECK(x3.pg == Rational(17));
  CHECK(x3.k2 == Rational(96));
  CHECK(s3.q == Rational(0));
  CHECK(s3.pg == Rational(17));
  CHECK(s3.k2 == Rational(48));
}

TEST_CASE("pair tables reject n below the series start") {
  const Catalog& cat = builtin_catalog();
  CHECK_THROWS_AS(pair_invariants(cat, PairId::I, 2), OutOfRangeError);
  CHECK_NOTHROW(pair_invariants(cat, PairId::I, 3));
}

TEST_CASE("symbolic pair rows") {
  const Catalog& cat = builtin_catalog();

  const auto [x, s] = pair_invariants_symbolic(cat, PairId::I);
  CHECK(x.q == lf(0, 2, "n"));
  CHECK(x.pg == lf(4, -3, "n"));
  CHECK(x.k2 == lf(24, -32, "n"));
  CHECK(x.chi == lf(4, -4, "n"));
  CHECK(x.e == lf(24, -16, "n"));
  CHECK(s.q == lf(0, 0, "n"));
  CHECK(s.pg == lf(4, -3, "n"));
  CHECK(s.k2 == lf(12, -16, "n"));
  CHECK(s.chi == lf(4, -2, "n"));
  CHECK(s.e == lf(36, -8, "n"));

  const auto [x3, s3] = pair_invariants_symbolic(cat, PairId::III);
  CHECK(x3.k2 == lf(48, -48, "n"));
  CHECK(x3.chi == lf(7, -6, "n"));
  CHECK(s3.k2 == lf(24, -24, "n"));
  CHECK(s3.chi == lf(7, -3, "n"));

  // every symbolic row satisfies the defining identities as forms
  for (const auto& p : cat.pairs) {
    CHECK(check_identities(p.x).empty());
    CHECK(check_identities(p.s).empty());
  }
}

TEST_CASE("weight config patterns instantiate") {
  const Catalog& cat = builtin_catalog();
  const WeightConfigPattern& pat = cat.example(1).x_config;
  CHECK(pat.weights == std::vector<int>{0, 0, 2, 1});
  CHECK(pat.u0 == 1);
  CHECK(pat.u1 == 2);
  CHECK(pat.degree == lf(3, 0));

  const WeightConfig cfg = pat.at(2);
  CHECK(cfg.degree == 6);
  CHECK(cfg.section_weights == pat.weights);

  CHECK(pat.symbolic_dimension() == lf(4, 2));
  CHECK(cat.example(1).x_dim == lf(4, 2));
  CHECK(cat.example(2).x_dim == lf(2, 2));
  CHECK(cat.example(3).x_dim == lf(3, 2));
}

TEST_CASE("a fractional degree cannot be instantiated") {
  WeightConfigPattern pat;
  pat.weights = {0};
  pat.degree = LinForm(Rational(1, 2), Rational(0), "k");
  CHECK_THROWS_AS(pat.at(1), Error);
}

TEST_CASE("family expansion matches the explicit smallest basis") {
  const Catalog& cat = builtin_catalog();
  const auto& ex1 = cat.example(1);
  const MonomialBasis basis = expand_families(ex1.x_families, 1);
  CHECK(basis ==
        MonomialBasis{{0, 0}, {0, 3}, {1, 0}, {1, 3}, {2, 2}, {3, 1}});

  // the adjoint families at k = 1 have two empty members
  const MonomialBasis adjoint = expand_families(ex1.adjoint_families, 1);
  CHECK(adjoint == MonomialBasis{{2, 1}, {3, 0}});
}

TEST_CASE("recorded profiles and counts") {
  const Catalog& cat = builtin_catalog();

  const auto& e1 = cat.example(1);
  CHECK(e1.pair == PairId::I);
  CHECK(e1.x_profile == FixedPointProfile{4, 4});
  CHECK(e1.sigma_profile == FixedPointProfile{2, 2});
  CHECK(e1.sigma_a1_count == lf(48, 0));
  CHECK_FALSE(e1.sigma_a1_inferred);
  CHECK(e1.adjoint_config.has_value());
  CHECK(e1.adjoint_config->degree == lf(3, -2));
  CHECK(e1.h1_correction == 1);

  const auto& e2 = cat.example(2);
  CHECK(e2.pair == PairId::II);
  CHECK(e2.sigma_a1_count == lf(60, 0));
  CHECK(e2.sigma_a1_inferred);
  CHECK_FALSE(e2.adjoint_config.has_value());

  const auto& e3 = cat.example(3);
  CHECK(e3.pair == PairId::III);
  CHECK(e3.x_profile == FixedPointProfile{6, 6});
  CHECK(e3.sigma_profile == FixedPointProfile{3, 3});
  CHECK(e3.sigma_a1_count == lf(84, 0));
}
