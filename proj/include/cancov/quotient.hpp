#ifndef CANCOV_QUOTIENT_HPP
#define CANCOV_QUOTIENT_HPP

#include <span>
#include <string>
#include <vector>

#include "cancov/surface.hpp"

namespace cancov {

/// Counts of isolated order-3 fixed points split by the tangent
/// representation: alpha with equal characters (each resolves to a single
/// rational curve of self-intersection -3), beta with distinct characters
/// (each gives an A2 point of the quotient).
struct FixedPointProfile {
  long alpha = 0;
  long beta = 0;

  long total() const { return alpha + beta; }
  friend bool operator==(const FixedPointProfile&, const FixedPointProfile&) = default;
};

/// The two nontrivial characters of the tangent representation at an
/// isolated fixed point, as residues mod 3.
struct CharacterPair {
  int c1 = 1;
  int c2 = 1;
};

enum class QuotientSingularity { A2, OneThird };

/// A2 when the characters differ, 1/3(1,1) when they agree. A character
/// that is trivial mod 3 means the fixed locus contains a curve, which is
/// outside this calculus.
QuotientSingularity classify_fixed_point(const CharacterPair& c);

/// Tally a multiset of tangent characters into a profile.
FixedPointProfile profile_from_characters(std::span<const CharacterPair> cs);

/// Invariants of the minimal resolution Y of X/Z3, where the action has the
/// given isolated fixed-point profile:
///
///   K2_Y  = (K2_X - alpha) / 3
///   chi_Y = (3·chi_X + alpha + 2·beta) / 9
///   p_g(Y) = chi_Y - 1 + q_Y
///
/// Either division failing to be integral means the supplied profile is
/// geometrically impossible; that raises DivisibilityError naming the
/// formula. q_Y is an input, never inferred. Symbolic inputs give symbolic
/// outputs.
template <typename Num>
SurfaceInvariants<Num> cyclic3_quotient(const SurfaceInvariants<Num>& x,
                                        const FixedPointProfile& p, long q_y,
                                        std::string label = {}) {
  if (p.alpha < 0 || p.beta < 0)
    throw Error("fixed-point profile counts must be nonnegative");
  auto [k2_y, k2_ok] = divide_exact(x.k2 - constant_like(p.alpha, x.k2), 3);
  if (!k2_ok)
    throw DivisibilityError("K2_X - alpha = 3*K2_Y failed: K2_X - " +
                            std::to_string(p.alpha) + " is not divisible by 3 (" +
                            x.label + ")");
  auto [chi_y, chi_ok] =
      divide_exact(Rational(3) * x.chi + constant_like(p.alpha + 2 * p.beta, x.chi), 9);
  if (!chi_ok)
    throw DivisibilityError(
        "chi_X = 3*chi_Y - alpha/3 - 2*beta/3 failed: 3*chi_X + alpha + 2*beta "
        "is not divisible by 9 (" +
        x.label + ")");
  const Num q = constant_like(q_y, x.chi);
  const Num pg = chi_y - constant_like(1, x.chi) + q;
  if (label.empty()) label = x.label + " / Z3";
  return make_surface(q, pg, k2_y, std::move(label));
}

/// Invariants of the minimal resolution S of X/sigma for an involution sigma
/// with t isolated fixed points (the quotient acquires t nodes):
///
///   K2_S  = K2_X / 2
///   chi_S = (4·chi_X + t) / 8
///
/// together with the A1 ledger of the intermediate quotient. A non-integral
/// result raises DivisibilityError.
template <typename Num>
struct InvolutionQuotient {
  SurfaceInvariants<Num> s;
  SingularLocus<Num> quotient_singularities;  // t nodes on X/sigma
};

template <typename Num>
InvolutionQuotient<Num> involution_quotient(const SurfaceInvariants<Num>& x,
                                            const Num& t, long q_s,
                                            std::string label = {}) {
  auto [k2_s, k2_ok] = divide_exact(x.k2, 2);
  if (!k2_ok)
    throw DivisibilityError("K2_S = K2_X/2 failed: K2_X is not divisible by 2 (" +
                            x.label + ")");
  auto [chi_s, chi_ok] = divide_exact(Rational(4) * x.chi + t, 8);
  if (!chi_ok)
    throw DivisibilityError(
        "chi_S = (chi_X + t/4)/2 failed: 4*chi_X + t is not divisible by 8 (" +
        x.label + ")");
  const Num q = constant_like(q_s, x.chi);
  const Num pg = chi_s - constant_like(1, x.chi) + q;
  if (label.empty()) label = x.label + " / sigma";
  return InvolutionQuotient<Num>{make_surface(q, pg, k2_s, std::move(label)),
                                 SingularLocus<Num>{t, 0, 0}};
}

/// Constraints for the profile solver beyond alpha + beta = total and the
/// two divisibility conditions.
struct ProfileConstraints {
  long beta_min = 0;
  bool require_k2_y_nonneg = false;
};

/// All (alpha, beta) with alpha + beta = total that make both quotient
/// formulas integral and satisfy the constraints, in increasing alpha order.
/// An empty list is a valid result.
std::vector<FixedPointProfile> solve_fixed_point_profile(long k2_x, long chi_x,
                                                         long total,
                                                         const ProfileConstraints& c = {});

}  // namespace cancov

#endif
