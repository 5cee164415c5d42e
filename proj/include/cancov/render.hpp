#ifndef CANCOV_RENDER_HPP
#define CANCOV_RENDER_HPP

#include <string>
#include <vector>

#include "cancov/catalog.hpp"
#include "cancov/pipeline.hpp"
#include "cancov/verify.hpp"

namespace cancov {

enum class OutputFormat { Json, Csv, Markdown };

/// "json", "csv" or "markdown"; anything else throws UsageError.
OutputFormat parse_format(const std::string& name);

/// Resolution order: the --format flag if nonempty, then the CANCOV_FORMAT
/// environment variable, then markdown when stdout is a terminal and json
/// otherwise.
OutputFormat resolve_format(const std::string& flag);

std::string render_pair_numeric(const GeneratingPair& p, long n,
                                const SurfaceInvariants<Rational>& x,
                                const SurfaceInvariants<Rational>& s,
                                OutputFormat f);
std::string render_pair_symbolic(const GeneratingPair& p, OutputFormat f);

std::string render_profiles(const std::vector<FixedPointProfile>& sols,
                            OutputFormat f);

std::string render_basis(const WeightConfig& cfg, OutputFormat f);

/// One table row per report, in the given order.
std::string render_table(const std::vector<PipelineReport<Rational>>& rows,
                         OutputFormat f);

std::string render_verify(const VerifyReport& r, OutputFormat f);

}  // namespace cancov

#endif
