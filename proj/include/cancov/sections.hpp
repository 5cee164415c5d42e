#ifndef CANCOV_SECTIONS_HPP
#define CANCOV_SECTIONS_HPP

#include <array>
#include <vector>

#include "cancov/linform.hpp"

namespace cancov {

/// Order-3 linearization data for sections f_i and homogeneous coordinates
/// x0, x1 on a product with a projective line. w_i is the pullback weight of
/// f_i (the generator pulls f_i back to omega^{w_i}·f_i), u0/u1 the pullback
/// weights of x0/x1, and degree the degree d of the P^1 factor.
struct WeightConfig {
  std::vector<int> section_weights;
  int u0 = 0;
  int u1 = 0;
  long degree = 0;
};

/// Throws InvalidConfigError unless weights are nonempty, all residues lie in
/// {0,1,2} and the degree is nonnegative.
void validate(const WeightConfig& cfg);

/// One basis monomial x0^a x1^(d-a) f_i, identified by (section index, a).
struct Monomial {
  int section = 0;
  long exponent = 0;  // exponent a of x0

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sorted by (section, exponent), no duplicates.
using MonomialBasis = std::vector<Monomial>;

/// The monomials x0^a x1^(d-a) f_i with total pullback weight
/// w_i + a·u0 + (d-a)·u1 ≡ 0 (mod 3): a basis of the invariant subspace.
MonomialBasis invariant_monomial_basis(const WeightConfig& cfg);

/// |invariant_monomial_basis(cfg)|, computed by residue-class counting
/// instead of enumeration.
long invariant_dimension(const WeightConfig& cfg);

/// Dimensions (d0, d1, d2) of the three eigenspaces of the generator acting
/// on sections; a monomial of pullback weight s lies in the omega^{-s}
/// eigenspace, so d_j counts the monomials with s ≡ -j (mod 3).
/// d0 equals invariant_dimension and d0+d1+d2 = #sections·(d+1).
std::array<long, 3> eigenspace_dimensions(const WeightConfig& cfg);

/// True iff every section index contributes at least one invariant monomial.
bool coverage_check(const WeightConfig& cfg);

/// Closed-form invariant dimension for a family of configurations whose
/// degree is the linear form 3k+e with e in {0, -2} (the two patterns the
/// catalog uses). Valid for every integer k >= 1.
LinForm invariant_dimension_symbolic(const std::vector<int>& section_weights,
                                     int u0, int u1, const LinForm& degree);

}  // namespace cancov

#endif
