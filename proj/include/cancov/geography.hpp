#ifndef CANCOV_GEOGRAPHY_HPP
#define CANCOV_GEOGRAPHY_HPP

#include <string>
#include <vector>

#include "cancov/surface.hpp"

namespace cancov {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

struct GeographyCheck {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct GeographyReport {
  std::vector<GeographyCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
};

/// The standard constraints on a minimal surface of general type:
/// chi >= 1, K^2 >= 1, Noether (K^2 >= 2·p_g - 4) and
/// Bogomolov–Miyaoka–Yau (K^2 <= 9·chi). With minimal_general_type = false
/// every check is reported as skipped, never failed: the inequalities are
/// sanity gates on the data, not minimality proofs.
///
/// For symbolic invariants the inequalities are required on the whole
/// half-line param >= param_floor, decided exactly from slope and offset.
GeographyReport check_geography(const SurfaceInvariants<Rational>& s,
                                bool minimal_general_type);
GeographyReport check_geography(const SurfaceInvariants<LinForm>& s,
                                bool minimal_general_type, long param_floor);

/// The defining equality of a canonical cover pair: p_g(Y) = p_g(T),
/// symbolic when both sides are forms.
template <typename Num>
bool check_canonical_cover_pair(const SurfaceInvariants<Num>& y,
                                const SurfaceInvariants<Num>& t) {
  return y.pg == t.pg;
}

}  // namespace cancov

#endif
