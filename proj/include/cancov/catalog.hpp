#ifndef CANCOV_CATALOG_HPP
#define CANCOV_CATALOG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cancov/kunneth.hpp"
#include "cancov/quotient.hpp"
#include "cancov/sections.hpp"
#include "cancov/surface.hpp"

namespace cancov {

enum class PairId { I, II, III };

PairId parse_pair_id(const std::string& s);  // throws CatalogError
const char* to_string(PairId id);

/// A degree-2 generating pair and the invariant tables of the series of
/// double covers X -> S it produces, parameterized by n >= min_n.
struct GeneratingPair {
  PairId id = PairId::I;
  int genus = 0;
  int iota_fixed_points = 0;
  int min_n = 3;
  SurfaceInvariants<LinForm> x;  // in parameter n
  SurfaceInvariants<LinForm> s;  // in parameter n
  // Künneth shadows for deriving p_g(X) from first principles; only the
  // first pair reduces to pure dimension counts.
  std::optional<LineBundleShadow> l_shadow;
  std::optional<LineBundleShadow> canonical_shadow;
};

/// A family of weight configurations: fixed weights, degree a linear form in
/// the series parameter k.
struct WeightConfigPattern {
  std::vector<int> weights;
  int u0 = 0;
  int u1 = 0;
  LinForm degree = LinForm::constant(Rational(0), "k");

  WeightConfig at(long k) const;      // throws if the degree is not integral
  LinForm symbolic_dimension() const; // closed-form invariant dimension
};

/// Expected shape of one family of invariant basis monomials: section index,
/// residue class of the x0-exponent mod 3, and how many members at parameter
/// k. The bases in the catalog are recorded family-by-family in this form.
struct BasisFamily {
  int section = 0;
  int residue = 0;
  LinForm count = LinForm::constant(Rational(0), "k");
};

/// Expand families at a concrete k into the sorted monomial list they cover.
MonomialBasis expand_families(const std::vector<BasisFamily>& families, long k);

/// The full recipe for one series of regular canonical covers
/// X -> Sigma -> (Y, T): which generating pair seeds it, the order-3
/// fixed-point data on X and on Sigma, the weight configurations of the
/// defining and adjoint systems, and the frozen invariant formulas the
/// pipeline is checked against. Everything is in the parameter k, with the
/// substitution n = 3k applied explicitly when reading the pair tables.
struct ExampleRecipe {
  int id = 0;
  PairId pair = PairId::I;
  FixedPointProfile x_profile;      // on X, under the order-3 action
  FixedPointProfile sigma_profile;  // on Sigma
  long q_y = 0;
  long q_t = 0;
  LinForm sigma_a1_count = LinForm::constant(Rational(0), "k");
  bool sigma_a1_inferred = false;  // count not stated directly, only via the pair
  WeightConfigPattern x_config;
  LinForm x_dim = LinForm::constant(Rational(0), "k");
  std::vector<BasisFamily> x_families;
  std::optional<WeightConfigPattern> adjoint_config;
  std::optional<LinForm> adjoint_dim;
  std::vector<BasisFamily> adjoint_families;
  long h1_correction = 1;  // weight-0 share of the 1-dim h^1 term, frozen
  // Frozen published formulas, checked against the computed pipeline.
  std::vector<std::pair<std::string, LinForm>> expected;
};

struct Catalog {
  std::vector<GeneratingPair> pairs;
  std::vector<ExampleRecipe> examples;

  const GeneratingPair& pair(PairId id) const;      // throws CatalogError
  const ExampleRecipe& example(int id) const;       // throws CatalogError
};

/// The built-in catalog: pairs I/II/III and series 1/2/3.
const Catalog& builtin_catalog();

/// Table rows of a pair evaluated at n (throws OutOfRangeError for n < min_n).
std::pair<SurfaceInvariants<Rational>, SurfaceInvariants<Rational>>
pair_invariants(const Catalog& cat, PairId id, long n);

/// The symbolic rows themselves, in the formal parameter n.
std::pair<SurfaceInvariants<LinForm>, SurfaceInvariants<LinForm>>
pair_invariants_symbolic(const Catalog& cat, PairId id);

}  // namespace cancov

#endif
