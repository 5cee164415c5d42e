#ifndef CANCOV_VERIFY_HPP
#define CANCOV_VERIFY_HPP

#include <string>
#include <vector>

#include "cancov/catalog.hpp"

namespace cancov {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // failure reason; empty on pass
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  long passed_count() const {
    long n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
  }
};

/// Run the whole verification battery against a catalog: table identities,
/// double cover consistency, the symbolic pipelines with their frozen
/// formulas, numeric/symbolic agreement for k = 1..k_max, fixed-point
/// profile feasibility, section dimensions, bases, eigenspace splittings,
/// coverage, and the product p_g derivations. A thrown exception inside a
/// unit records that unit as failed; it never aborts the battery.
VerifyReport run_verification(const Catalog& cat, long k_max);

}  // namespace cancov

#endif
