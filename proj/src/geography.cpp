#include "cancov/geography.hpp"

#include <sstream>

namespace cancov {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

template <typename Num>
GeographyReport run_checks(const SurfaceInvariants<Num>& s, bool enabled,
                           long floor) {
  GeographyReport report;
  auto add = [&](std::string name, const Num& lhs, const Num& rhs) {
    GeographyCheck c{std::move(name), CheckStatus::Skipped, {}};
    if (enabled) {
      const bool ok = ge_on_halfline(lhs, rhs, floor);
      c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    }
    std::ostringstream os;
    os << lhs << " >= " << rhs;
    c.detail = os.str();
    report.checks.push_back(std::move(c));
  };
  const Num one = constant_like(1, s.chi);
  add("chi >= 1", s.chi, one);
  add("K2 >= 1", s.k2, one);
  add("noether: K2 >= 2*pg - 4", s.k2, Rational(2) * s.pg - constant_like(4, s.pg));
  add("bmy: K2 <= 9*chi", Rational(9) * s.chi, s.k2);
  return report;
}

}  // namespace

GeographyReport check_geography(const SurfaceInvariants<Rational>& s,
                                bool minimal_general_type) {
  return run_checks(s, minimal_general_type, 0);
}

GeographyReport check_geography(const SurfaceInvariants<LinForm>& s,
                                bool minimal_general_type, long param_floor) {
  return run_checks(s, minimal_general_type, param_floor);
}

}  // namespace cancov
