#include "cancov/pipeline.hpp"

#include <utility>

#include "cancov/errors.hpp"
#include "cancov/quotient.hpp"

namespace cancov {
namespace {

std::string render(const Rational& v) { return v.str(); }
std::string render(const LinForm& v) { return v.str(); }

bool matches(const Rational& actual, const LinForm& formula,
             const std::optional<long>& k) {
  return actual == formula.eval(*k);
}
bool matches(const LinForm& actual, const LinForm& formula,
             const std::optional<long>&) {
  return actual == formula;
}

std::string render_at(const LinForm& f, const std::optional<long>& k) {
  return k ? f.eval(*k).str() : f.str();
}

GeographyReport geography_of(const SurfaceInvariants<Rational>& s) {
  return check_geography(s, true);
}
GeographyReport geography_of(const SurfaceInvariants<LinForm>& s) {
  return check_geography(s, true, 1);
}

/// The computed quantity a frozen formula refers to, by catalog name.
template <typename Num>
const Num* field_for(const std::string& name, const PipelineReport<Num>& r) {
  if (name == "K2_Y") return &r.y.k2;
  if (name == "chi_Y") return &r.y.chi;
  if (name == "pg_Y") return &r.y.pg;
  if (name == "q_Y") return &r.y.q;
  if (name == "K2_T") return &r.t.k2;
  if (name == "chi_T") return &r.t.chi;
  if (name == "pg_T") return &r.t.pg;
  if (name == "q_T") return &r.t.q;
  if (name == "sigma_A1") return &r.sigma_locus.a1_count;
  return nullptr;
}

template <typename Num>
void add_check(PipelineReport<Num>& r, std::string name, const Num& expected,
               const Num& actual) {
  r.checks.push_back(
      FormulaCheck{std::move(name), render(expected), render(actual),
                   expected == actual});
}

/// Proposition-style quotient formulas read backwards: the resolution plus
/// the singular locus it absorbed must reproduce the cover exactly.
template <typename Num>
void add_cyclic_roundtrip(PipelineReport<Num>& r,
                          const SurfaceInvariants<Num>& cover,
                          const SurfaceInvariants<Num>& quot,
                          const FixedPointProfile& p, const std::string& up,
                          const std::string& down) {
  const Num alpha = constant_like(p.alpha, cover.k2);
  const Num weight = constant_like(p.alpha + 2 * p.beta, cover.k2);
  add_check(r, "3*K2_" + down + " + alpha = K2_" + up, cover.k2,
            Rational(3) * quot.k2 + alpha);
  add_check(r, "9*chi_" + down + " - alpha - 2*beta = 3*chi_" + up,
            Rational(3) * cover.chi, Rational(9) * quot.chi - weight);
}

template <typename Num>
void add_identity_checks(PipelineReport<Num>& r) {
  const std::pair<const SurfaceInvariants<Num>*, const char*> models[] = {
      {&r.x, "X"}, {&r.s, "S"}, {&r.y, "Y"}, {&r.t, "T"}};
  for (const auto& [s, tag] : models) {
    auto violated = check_identities(*s);
    std::string detail = "ok";
    if (!violated.empty()) {
      detail.clear();
      for (const auto& v : violated) {
        if (!detail.empty()) detail += "; ";
        detail += v;
      }
    }
    r.checks.push_back(
        FormulaCheck{std::string("identities_") + tag, "ok", detail,
                     violated.empty()});
  }
}

template <typename Num>
PipelineReport<Num> assemble(const ExampleRecipe& rec,
                             const SurfaceInvariants<Num>& table_s,
                             SurfaceInvariants<Num> x, const Num& t_fixed,
                             std::optional<long> k) {
  const std::string tag = "example " + std::to_string(rec.id);
  PipelineReport<Num> r;
  r.example_id = rec.id;
  r.k = k;
  r.x = std::move(x);

  try {
    r.y = cyclic3_quotient(r.x, rec.x_profile, rec.q_y, tag + " Y");
    auto inv = involution_quotient(r.x, t_fixed, 0, tag + " S");
    r.s = std::move(inv.s);
    r.sigma_locus = std::move(inv.quotient_singularities);
    r.t = cyclic3_quotient(r.s, rec.sigma_profile, rec.q_t, tag + " T");
  } catch (const DivisibilityError& e) {
    const std::string where =
        k ? tag + " at k = " + std::to_string(*k) : tag + " (symbolic)";
    throw DivisibilityError(where + ": " + e.what());
  }
  r.y_locus = SingularLocus<Num>{constant_like(0, r.x.k2), rec.x_profile.beta,
                                 rec.x_profile.alpha};
  r.t_locus = SingularLocus<Num>{constant_like(0, r.x.k2),
                                 rec.sigma_profile.beta,
                                 rec.sigma_profile.alpha};

  for (const auto& [name, formula] : rec.expected) {
    const Num* field = field_for(name, r);
    if (field == nullptr)
      throw CatalogError(tag + ": no pipeline quantity named '" + name + "'");
    r.checks.push_back(FormulaCheck{name, render_at(formula, k), render(*field),
                                    matches(*field, formula, k)});
  }

  r.checks.push_back(FormulaCheck{"pg_Y = pg_T", render(r.t.pg), render(r.y.pg),
                                  check_canonical_cover_pair(r.y, r.t)});

  // The involution quotient must land on the published S row of the pair.
  add_check(r, "K2_S (pair table)", table_s.k2, r.s.k2);
  add_check(r, "chi_S (pair table)", table_s.chi, r.s.chi);
  add_check(r, "q_S (pair table)", table_s.q, r.s.q);

  add_identity_checks(r);
  add_cyclic_roundtrip(r, r.x, r.y, rec.x_profile, "X", "Y");
  add_check(r, "2*K2_S = K2_X", r.x.k2, Rational(2) * r.s.k2);
  add_check(r, "8*chi_S - t = 4*chi_X", Rational(4) * r.x.chi,
            Rational(8) * r.s.chi - t_fixed);
  add_cyclic_roundtrip(r, r.s, r.t, rec.sigma_profile, "S", "T");

  const std::pair<const SurfaceInvariants<Num>*, const char*> models[] = {
      {&r.x, "X"}, {&r.s, "S"}, {&r.y, "Y"}, {&r.t, "T"}};
  for (const auto& [s, name] : models) r.geography.emplace_back(name, geography_of(*s));
  return r;
}

}  // namespace

PipelineReport<Rational> run_pipeline(const Catalog& cat, int example_id,
                                      long k) {
  if (k < 1)
    throw OutOfRangeError("series parameter k must be >= 1, got " +
                          std::to_string(k));
  const ExampleRecipe& rec = cat.example(example_id);
  const GeneratingPair& pair = cat.pair(rec.pair);
  auto [x, s] = pair_invariants(cat, rec.pair, 3 * k);
  x.label = "example " + std::to_string(example_id) + " X";
  const Rational t = Rational(pair.iota_fixed_points) * Rational(3 * k);
  return assemble(rec, s, std::move(x), t, k);
}

PipelineReport<LinForm> symbolic_pipeline(const Catalog& cat, int example_id) {
  const ExampleRecipe& rec = cat.example(example_id);
  const GeneratingPair& pair = cat.pair(rec.pair);
  auto [row_x, row_s] = pair_invariants_symbolic(cat, rec.pair);
  // The table rows live in n; the series runs at n = 3k. The substitution
  // is explicit so every downstream form is in k.
  auto in_k = [](const SurfaceInvariants<LinForm>& row, std::string label) {
    return SurfaceInvariants<LinForm>{
        std::move(label),        row.q.reparam(3, "k"),
        row.pg.reparam(3, "k"),  row.k2.reparam(3, "k"),
        row.chi.reparam(3, "k"), row.e.reparam(3, "k")};
  };
  SurfaceInvariants<LinForm> x =
      in_k(row_x, "example " + std::to_string(example_id) + " X");
  SurfaceInvariants<LinForm> table_s = in_k(row_s, row_s.label);
  const LinForm t(Rational(3 * pair.iota_fixed_points), Rational(0), "k");
  return assemble(rec, table_s, std::move(x), t, std::nullopt);
}

}  // namespace cancov
