#include "cancov/quotient.hpp"

namespace cancov {

QuotientSingularity classify_fixed_point(const CharacterPair& c) {
  const int r1 = ((c.c1 % 3) + 3) % 3;
  const int r2 = ((c.c2 % 3) + 3) % 3;
  if (r1 == 0 || r2 == 0) throw NonIsolatedFixedPointError();
  return r1 == r2 ? QuotientSingularity::OneThird : QuotientSingularity::A2;
}

FixedPointProfile profile_from_characters(std::span<const CharacterPair> cs) {
  FixedPointProfile p;
  for (const auto& c : cs) {
    if (classify_fixed_point(c) == QuotientSingularity::OneThird)
      ++p.alpha;
    else
      ++p.beta;
  }
  return p;
}

std::vector<FixedPointProfile> solve_fixed_point_profile(long k2_x, long chi_x,
                                                         long total,
                                                         const ProfileConstraints& c) {
  if (total < 0) throw Error("solve_fixed_point_profile: total must be >= 0");
  std::vector<FixedPointProfile> out;
  for (long alpha = 0; alpha <= total; ++alpha) {
    const long beta = total - alpha;
    if (beta < c.beta_min) continue;
    if ((k2_x - alpha) % 3 != 0) continue;
    if ((3 * chi_x + alpha + 2 * beta) % 9 != 0) continue;
    if (c.require_k2_y_nonneg && (k2_x - alpha) / 3 < 0) continue;
    out.push_back({alpha, beta});
  }
  return out;
}

}  // namespace cancov
