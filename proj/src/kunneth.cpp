#include "cancov/kunneth.hpp"

namespace cancov {

namespace {

void require_shadow(const LineBundleShadow& a) {
  if (a.coh.h0 < 0 || a.coh.h1 < 0 || a.coh.h2 < 0)
    throw Error("line bundle shadow with negative dimension: " + a.name);
}

}  // namespace

std::pair<long, long> p1_cohomology(long m) {
  if (m >= 0) return {m + 1, 0};
  if (m == -1) return {0, 0};
  return {0, -m - 1};
}

CohTriple product_cohomology(const LineBundleShadow& a, long m) {
  require_shadow(a);
  const auto [b0, b1] = p1_cohomology(m);
  // h^3 (= h2·b1) is never needed on a product with a curve
  return CohTriple{a.coh.h0 * b0,
                   a.coh.h1 * b0 + a.coh.h0 * b1,
                   a.coh.h2 * b0 + a.coh.h1 * b1};
}

long member_pg(const LineBundleShadow& l_shadow,
               const LineBundleShadow& canonical_shadow, long n) {
  const CohTriple adjoint = product_cohomology(l_shadow, n - 2);
  if (adjoint.h1 != 0)
    throw VanishingHypothesisError(
        "h^1 of " + l_shadow.name + " ⊠ O(" + std::to_string(n - 2) +
        ") on the product is " + std::to_string(adjoint.h1) + ", not 0");
  const CohTriple k_prod = product_cohomology(canonical_shadow, -2);
  return adjoint.h0 - k_prod.h0 + k_prod.h1;
}

long equivariant_member_pg(const WeightConfig& adjoint_cfg,
                           long invariant_h1_correction) {
  return invariant_dimension(adjoint_cfg) + invariant_h1_correction;
}

}  // namespace cancov
