#ifndef CANCOV_PIPELINE_HPP
#define CANCOV_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cancov/catalog.hpp"
#include "cancov/geography.hpp"

namespace cancov {

/// One recorded cross-check: a computed quantity against its frozen
/// expectation.
struct FormulaCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// The complete record of one series computation X -> Sigma -> (Y, T):
/// the four surface shadows, the singular loci that were resolved along the
/// way, every formula/identity cross-check, and the geography reports.
template <typename Num>
struct PipelineReport {
  int example_id = 0;
  std::optional<long> k;  // empty for a symbolic run
  SurfaceInvariants<Num> x, s, y, t;
  SingularLocus<Num> sigma_locus;  // A1 points of Sigma = X/sigma
  SingularLocus<Num> y_locus;      // what the resolution Y absorbed
  SingularLocus<Num> t_locus;      // what the resolution T absorbed
  std::vector<FormulaCheck> checks;
  std::vector<std::pair<std::string, GeographyReport>> geography;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    for (const auto& [name, report] : geography)
      if (!report.all_passed()) return false;
    return true;
  }
};

/// Run one series at a concrete parameter value k >= 1. Quotient errors
/// propagate with the (example, k) context attached.
PipelineReport<Rational> run_pipeline(const Catalog& cat, int example_id, long k);

/// Run one series symbolically; every invariant is a linear form in k and
/// every check is an exact form equality.
PipelineReport<LinForm> symbolic_pipeline(const Catalog& cat, int example_id);

}  // namespace cancov

#endif
