#ifndef CANCOV_KUNNETH_HPP
#define CANCOV_KUNNETH_HPP

#include <string>
#include <utility>

#include "cancov/sections.hpp"
#include "cancov/surface.hpp"

namespace cancov {

/// Cohomology dimensions of a line bundle on the surface factor of a product
/// surface × P^1. Only the dimensions enter any computation here.
struct LineBundleShadow {
  CohTriple coh;
  std::string name;
};

/// (h^0, h^1) of O(m) on the projective line.
std::pair<long, long> p1_cohomology(long m);

/// Künneth dimensions of A ⊠ O(m): h^p = sum over i+j=p of h^i(A)·h^j(O(m)).
CohTriple product_cohomology(const LineBundleShadow& a, long m);

/// p_g of a member of |L ⊠ O(n)| via the residue sequence of the product:
///
///   p_g = h^0(L ⊠ O(n-2)) - h^0(K_prod) + h^1(K_prod)
///
/// with K_prod = K_surface ⊠ O(-2). Requires h^1 of the adjoint bundle on
/// the product to vanish (checked from the shadows; raises
/// VanishingHypothesisError otherwise).
long member_pg(const LineBundleShadow& l_shadow,
               const LineBundleShadow& canonical_shadow, long n);

/// Invariant-subspace analogue of member_pg: dimension of the invariant part
/// of the adjoint system plus the contribution of the (fixed-weight)
/// one-dimensional h^1 term, supplied as a frozen per-series correction.
long equivariant_member_pg(const WeightConfig& adjoint_cfg,
                           long invariant_h1_correction);

}  // namespace cancov

#endif
