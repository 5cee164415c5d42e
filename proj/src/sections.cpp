#include "cancov/sections.hpp"

#include <algorithm>

namespace cancov {

namespace {

int mod3(long v) { return static_cast<int>(((v % 3) + 3) % 3); }

// Residue class of a solving w + a·u0 + (d-a)·u1 ≡ 0 (mod 3), or -1 when the
// coefficient of a vanishes mod 3 (then the condition does not involve a).
int solve_residue(int w, int u0, int u1, long d) {
  const int coeff = mod3(u0 - u1);
  if (coeff == 0) return -1;
  // coeff is its own inverse mod 3 (1 or 2)
  return mod3(-(w + d * u1) * coeff);
}

// Count of a in [0, d] with a ≡ r (mod 3).
long count_in_class(long d, int r) {
  if (r > d) return 0;
  return (d - r) / 3 + 1;
}

}  // namespace

void validate(const WeightConfig& cfg) {
  if (cfg.section_weights.empty())
    throw InvalidConfigError("weight config needs at least one section");
  for (int w : cfg.section_weights)
    if (w < 0 || w > 2)
      throw InvalidConfigError("section weight outside {0,1,2}");
  if (cfg.u0 < 0 || cfg.u0 > 2 || cfg.u1 < 0 || cfg.u1 > 2)
    throw InvalidConfigError("coordinate weight outside {0,1,2}");
  if (cfg.degree < 0) throw InvalidConfigError("negative degree");
}

MonomialBasis invariant_monomial_basis(const WeightConfig& cfg) {
  validate(cfg);
  MonomialBasis basis;
  for (int i = 0; i < static_cast<int>(cfg.section_weights.size()); ++i) {
    const int r = solve_residue(cfg.section_weights[i], cfg.u0, cfg.u1, cfg.degree);
    if (r < 0) {
      // degree-global condition: either every a qualifies or none does
      if (mod3(cfg.section_weights[i] + cfg.degree * cfg.u1) != 0) continue;
      for (long a = 0; a <= cfg.degree; ++a) basis.push_back({i, a});
    } else {
      for (long a = r; a <= cfg.degree; a += 3) basis.push_back({i, a});
    }
  }
  return basis;  // construction order is already (section, exponent)-sorted
}

long invariant_dimension(const WeightConfig& cfg) {
  validate(cfg);
  long dim = 0;
  for (int w : cfg.section_weights) {
    const int r = solve_residue(w, cfg.u0, cfg.u1, cfg.degree);
    if (r < 0)
      dim += mod3(w + cfg.degree * cfg.u1) == 0 ? cfg.degree + 1 : 0;
    else
      dim += count_in_class(cfg.degree, r);
  }
  return dim;
}

std::array<long, 3> eigenspace_dimensions(const WeightConfig& cfg) {
  validate(cfg);
  std::array<long, 3> dims{0, 0, 0};
  for (int w : cfg.section_weights)
    for (long a = 0; a <= cfg.degree; ++a) {
      const int s = mod3(w + a * cfg.u0 + (cfg.degree - a) * cfg.u1);
      dims[mod3(-s)] += 1;
    }
  return dims;
}

bool coverage_check(const WeightConfig& cfg) {
  const MonomialBasis basis = invariant_monomial_basis(cfg);
  std::vector<bool> seen(cfg.section_weights.size(), false);
  for (const auto& m : basis) seen[m.section] = true;
  return std::ranges::all_of(seen, [](bool b) { return b; });
}

LinForm invariant_dimension_symbolic(const std::vector<int>& section_weights,
                                     int u0, int u1, const LinForm& degree) {
  validate(WeightConfig{section_weights, u0, u1, 0});
  if (!(degree.slope() == Rational(3)))
    throw InvalidConfigError("symbolic dimension needs degree slope 3");
  if (!degree.offset().is_integer())
    throw InvalidConfigError("symbolic dimension needs an integer degree offset");
  const long e = degree.offset().num().get_si();
  if (e != 0 && e != -2)
    throw InvalidConfigError("symbolic dimension supports degree offsets 0 and -2 only");

  // For d = 3k+e the count of a in [0,d] with a ≡ r (mod 3) is
  // k + 1 + floor((e-r)/3), a single linear form valid for all k >= 1.
  LinForm dim = LinForm::constant(Rational(0), degree.param());
  const LinForm k(Rational(1), Rational(0), degree.param());
  for (int w : section_weights) {
    const int r = solve_residue(w, u0, u1, e);
    if (r < 0) {
      if (mod3(w + e * u1) == 0)
        dim = dim + degree + constant_like(1, degree);
      continue;
    }
    long shift = e - r;
    long fl = shift >= 0 ? shift / 3 : -((-shift + 2) / 3);
    dim = dim + k + constant_like(1 + fl, degree);
  }
  return dim;
}

}  // namespace cancov
