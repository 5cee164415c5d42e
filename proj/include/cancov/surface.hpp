#ifndef CANCOV_SURFACE_HPP
#define CANCOV_SURFACE_HPP

#include <string>
#include <vector>

#include "cancov/linform.hpp"
#include "cancov/rational.hpp"

namespace cancov {

/// The numerical shadow of a projective surface: irregularity q, geometric
/// genus p_g, canonical self-intersection K^2, holomorphic Euler
/// characteristic chi = 1 - q + p_g, and topological Euler number
/// e = 12·chi - K^2 (Noether).
///
/// Num is Rational for concrete surfaces and LinForm for whole series.
template <typename Num>
struct SurfaceInvariants {
  std::string label;
  Num q, pg, k2, chi, e;
};

/// Ledger of the singular points carried by a (not yet resolved) model:
/// ordinary nodes (A1), their order-3 analogues (A2), and 1/3(1,1) points.
/// A1/A2 are canonical and leave the invariants untouched; the 1/3(1,1)
/// points are not, and only resolved models carry them here.
template <typename Num>
struct SingularLocus {
  Num a1_count;
  long a2_count = 0;
  long one_third_count = 0;
};

inline bool empty_locus(const SingularLocus<Rational>& l) {
  return l.a1_count.is_zero() && l.a2_count == 0 && l.one_third_count == 0;
}
inline bool empty_locus(const SingularLocus<LinForm>& l) {
  return l.a1_count.slope().is_zero() && l.a1_count.offset().is_zero() &&
         l.a2_count == 0 && l.one_third_count == 0;
}

/// Sheaf cohomology dimensions (h^0, h^1, h^2) of a line bundle on a surface.
struct CohTriple {
  long h0 = 0, h1 = 0, h2 = 0;

  friend bool operator==(const CohTriple&, const CohTriple&) = default;
};

/// Build a surface shadow from the supplied q, p_g, K^2; chi and e are
/// derived, so the defining identities hold by construction. q is never
/// derived from anything: the constructions determine it by geometric
/// arguments that stay outside this calculator.
template <typename Num>
SurfaceInvariants<Num> make_surface(const Num& q, const Num& pg, const Num& k2,
                                    std::string label) {
  const Num one = constant_like(1, q);
  const Num chi = one - q + pg;
  const Num e = Rational(12) * chi - k2;
  return SurfaceInvariants<Num>{std::move(label), q, pg, k2, chi, e};
}

/// Names of the defining identities that fail on S; empty means pass.
/// The Noether identity is only meaningful for smooth or minimal-resolution
/// models; pass check_noether = false to skip it (an unresolved model with a
/// nonempty singular locus).
template <typename Num>
std::vector<std::string> check_identities(const SurfaceInvariants<Num>& s,
                                          bool check_noether = true) {
  std::vector<std::string> violated;
  const Num one = constant_like(1, s.q);
  if (!(s.chi == one - s.q + s.pg)) violated.push_back("chi = 1 - q + pg");
  if (check_noether && !(s.e == Rational(12) * s.chi - s.k2))
    violated.push_back("e = 12*chi - K2");
  return violated;
}

template <typename Num>
std::vector<std::string> check_identities(const SurfaceInvariants<Num>& s,
                                          const SingularLocus<Num>& locus,
                                          bool resolved) {
  return check_identities(s, resolved || empty_locus(locus));
}

}  // namespace cancov

#endif
