#include "cancov/catalog.hpp"

#include <algorithm>

namespace cancov {

namespace {

LinForm lf(long slope, long offset, const char* param) {
  return LinForm(Rational(slope), Rational(offset), param);
}

SurfaceInvariants<LinForm> table_row(long q, long pg_slope, long pg_offset,
                                     long k2_slope, long k2_offset,
                                     std::string label) {
  const char* n = "n";
  return make_surface(LinForm::constant(Rational(q), n),
                      lf(pg_slope, pg_offset, n), lf(k2_slope, k2_offset, n),
                      std::move(label));
}

GeneratingPair make_pair_I() {
  GeneratingPair p;
  p.id = PairId::I;
  p.genus = 3;
  p.iota_fixed_points = 16;
  p.x = table_row(2, 4, -3, 24, -32, "pair I X");
  p.s = table_row(0, 4, -3, 12, -16, "pair I S");
  // Abelian surface factor: the bisecting bundle has h^0 = 4, the structure
  // sheaf (= canonical) has (1,2,1).
  p.l_shadow = LineBundleShadow{{4, 0, 0}, "M^2"};
  p.canonical_shadow = LineBundleShadow{{1, 2, 1}, "O_V"};
  return p;
}

GeneratingPair make_pair_II() {
  GeneratingPair p;
  p.id = PairId::II;
  p.genus = 3;
  p.iota_fixed_points = 20;
  p.x = table_row(2, 5, -3, 32, -32, "pair II X");
  p.s = table_row(0, 5, -3, 16, -16, "pair II S");
  return p;
}

GeneratingPair make_pair_III() {
  GeneratingPair p;
  p.id = PairId::III;
  p.genus = 4;
  p.iota_fixed_points = 28;
  p.x = table_row(3, 7, -4, 48, -48, "pair III X");
  p.s = table_row(0, 7, -4, 24, -24, "pair III S");
  return p;
}

ExampleRecipe make_example_1() {
  ExampleRecipe e;
  e.id = 1;
  e.pair = PairId::I;
  e.x_profile = {4, 4};
  e.sigma_profile = {2, 2};
  e.sigma_a1_count = lf(48, 0, "k");
  e.x_config = {{0, 0, 2, 1}, 1, 2, lf(3, 0, "k")};
  e.x_dim = lf(4, 2, "k");
  e.x_families = {{0, 0, lf(1, 1, "k")},
                  {1, 0, lf(1, 1, "k")},
                  {2, 2, lf(1, 0, "k")},
                  {3, 1, lf(1, 0, "k")}};
  e.adjoint_config = WeightConfigPattern{{0, 0, 2, 1}, 1, 2, lf(3, -2, "k")};
  e.adjoint_dim = lf(4, -2, "k");
  e.adjoint_families = {{0, 2, lf(1, -1, "k")},
                        {1, 2, lf(1, -1, "k")},
                        {2, 1, lf(1, 0, "k")},
                        {3, 0, lf(1, 0, "k")}};
  e.expected = {{"K2_Y", lf(24, -12, "k")}, {"q_Y", lf(0, 0, "k")},
                {"pg_Y", lf(4, -1, "k")},   {"K2_T", lf(12, -6, "k")},
                {"q_T", lf(0, 0, "k")},     {"pg_T", lf(4, -1, "k")},
                {"sigma_A1", lf(48, 0, "k")}};
  return e;
}

ExampleRecipe make_example_2() {
  ExampleRecipe e;
  e.id = 2;
  e.pair = PairId::II;
  e.x_profile = {4, 4};
  e.sigma_profile = {2, 2};
  e.sigma_a1_count = lf(60, 0, "k");
  e.sigma_a1_inferred = true;  // 20 involution fixed points × n, never stated as 60k
  e.x_config = {{0, 0}, 1, 2, lf(3, 0, "k")};
  e.x_dim = lf(2, 2, "k");
  e.x_families = {{0, 0, lf(1, 1, "k")}, {1, 0, lf(1, 1, "k")}};
  // The weights of the five adjoint sections are not pinned down by the
  // construction; the adjoint system is only checked through the coverage
  // property, which holds for every assignment.
  e.expected = {{"chi_Y", lf(5, 0, "k")},  {"K2_Y", lf(32, -12, "k")},
                {"q_Y", lf(0, 0, "k")},    {"pg_Y", lf(5, -1, "k")},
                {"K2_T", lf(16, -6, "k")}, {"q_T", lf(0, 0, "k")},
                {"pg_T", lf(5, -1, "k")},  {"sigma_A1", lf(60, 0, "k")}};
  return e;
}

ExampleRecipe make_example_3() {
  ExampleRecipe e;
  e.id = 3;
  e.pair = PairId::III;
  e.x_profile = {6, 6};
  e.sigma_profile = {3, 3};
  e.sigma_a1_count = lf(84, 0, "k");
  e.x_config = {{0, 0, 2}, 2, 1, lf(3, 0, "k")};
  e.x_dim = lf(3, 2, "k");
  e.x_families = {{0, 0, lf(1, 1, "k")},
                  {1, 0, lf(1, 1, "k")},
                  {2, 1, lf(1, 0, "k")}};
  e.expected = {{"K2_Y", lf(48, -18, "k")}, {"chi_Y", lf(7, 0, "k")},
                {"q_Y", lf(0, 0, "k")},     {"pg_Y", lf(7, -1, "k")},
                {"K2_T", lf(24, -9, "k")},  {"q_T", lf(0, 0, "k")},
                {"pg_T", lf(7, -1, "k")},   {"sigma_A1", lf(84, 0, "k")}};
  return e;
}

}  // namespace

PairId parse_pair_id(const std::string& s) {
  if (s == "I") return PairId::I;
  if (s == "II") return PairId::II;
  if (s == "III") return PairId::III;
  throw CatalogError("unknown pair id '" + s + "' (expected I, II or III)");
}

const char* to_string(PairId id) {
  switch (id) {
    case PairId::I: return "I";
    case PairId::II: return "II";
    case PairId::III: return "III";
  }
  return "?";
}

WeightConfig WeightConfigPattern::at(long k) const {
  const Rational d = degree.eval(k);
  if (!d.is_integer() || d.sign() < 0)
    throw CatalogError("weight config degree " + degree.str() +
                       " is not a nonnegative integer at k=" + std::to_string(k));
  return WeightConfig{weights, u0, u1, d.num().get_si()};
}

LinForm WeightConfigPattern::symbolic_dimension() const {
  return invariant_dimension_symbolic(weights, u0, u1, degree);
}

MonomialBasis expand_families(const std::vector<BasisFamily>& families, long k) {
  MonomialBasis basis;
  for (const auto& f : families) {
    const Rational c = f.count.eval(k);
    if (!c.is_integer() || c.sign() < 0)
      throw CatalogError("family count " + f.count.str() +
                         " is not a nonnegative integer at k=" + std::to_string(k));
    const long count = c.num().get_si();
    for (long j = 0; j < count; ++j) basis.push_back({f.section, f.residue + 3 * j});
  }
  std::ranges::sort(basis);
  return basis;
}

const GeneratingPair& Catalog::pair(PairId id) const {
  for (const auto& p : pairs)
    if (p.id == id) return p;
  throw CatalogError(std::string("catalog has no pair ") + to_string(id));
}

const ExampleRecipe& Catalog::example(int id) const {
  for (const auto& e : examples)
    if (e.id == id) return e;
  throw CatalogError("catalog has no example " + std::to_string(id));
}

const Catalog& builtin_catalog() {
  static const Catalog cat{
      {make_pair_I(), make_pair_II(), make_pair_III()},
      {make_example_1(), make_example_2(), make_example_3()}};
  return cat;
}

std::pair<SurfaceInvariants<Rational>, SurfaceInvariants<Rational>>
pair_invariants(const Catalog& cat, PairId id, long n) {
  const GeneratingPair& p = cat.pair(id);
  if (n < p.min_n)
    throw OutOfRangeError("pair " + std::string(to_string(id)) + " needs n >= " +
                          std::to_string(p.min_n) + ", got " + std::to_string(n));
  auto eval_row = [n](const SurfaceInvariants<LinForm>& row) {
    return SurfaceInvariants<Rational>{row.label,       row.q.eval(n),
                                       row.pg.eval(n),  row.k2.eval(n),
                                       row.chi.eval(n), row.e.eval(n)};
  };
  return {eval_row(p.x), eval_row(p.s)};
}

std::pair<SurfaceInvariants<LinForm>, SurfaceInvariants<LinForm>>
pair_invariants_symbolic(const Catalog& cat, PairId id) {
  const GeneratingPair& p = cat.pair(id);
  return {p.x, p.s};
}

}  // namespace cancov
