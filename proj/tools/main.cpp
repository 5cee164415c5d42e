#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cancov/catalog.hpp"
#include "cancov/errors.hpp"
#include "cancov/pipeline.hpp"
#include "cancov/quotient.hpp"
#include "cancov/render.hpp"
#include "cancov/sections.hpp"
#include "cancov/serialize.hpp"
#include "cancov/verify.hpp"

namespace {

using namespace cancov;

// Exit codes: 0 success, 1 a verification/consistency check failed,
// 2 unusable input, 3 the profile solver found no solution.
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoSolution = 3;

struct PairArgs {
  std::string id;
  std::optional<long> n;
  bool symbolic = false;
  std::string format;
};

struct TableArgs {
  int example = 0;
  std::string k_range;
  std::string catalog_path;
  std::string format;
};

struct SolveArgs {
  long k2 = 0;
  long chi = 0;
  long fixed_total = 0;
  long beta_min = 0;
  bool require_k2_nonneg = false;
  std::string format;
};

struct BasisArgs {
  std::vector<int> weights;
  std::vector<int> u;
  long degree = 0;
  std::string format;
};

struct VerifyArgs {
  long k_max = 12;
  std::string catalog_path;
  std::string format;
};

/// The built-in catalog, or the one loaded from --catalog when given.
const Catalog& select_catalog(const std::string& path, Catalog& storage) {
  if (path.empty()) return builtin_catalog();
  storage = load_catalog_file(path);
  return storage;
}

long parse_long(const std::string& s, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + what + ": '" + s + "'");
  }
  if (used != s.size())
    throw UsageError(std::string("cannot parse ") + what + ": '" + s + "'");
  return v;
}

/// "N" or "A..B" (inclusive), both ends >= 1.
std::pair<long, long> parse_k_range(const std::string& s) {
  long from = 0, to = 0;
  if (const auto dots = s.find(".."); dots == std::string::npos) {
    from = to = parse_long(s, "k");
  } else {
    from = parse_long(s.substr(0, dots), "k range start");
    to = parse_long(s.substr(dots + 2), "k range end");
  }
  if (from < 1 || to < from)
    throw UsageError("k range must satisfy 1 <= start <= end, got '" + s + "'");
  return {from, to};
}

int do_pair(const PairArgs& a) {
  const OutputFormat f = resolve_format(a.format);
  if (a.n && a.symbolic)
    throw UsageError("--n and --symbolic are mutually exclusive");
  const Catalog& cat = builtin_catalog();
  const PairId id = parse_pair_id(a.id);
  const GeneratingPair& p = cat.pair(id);
  if (a.n) {
    auto [x, s] = pair_invariants(cat, id, *a.n);
    std::cout << render_pair_numeric(p, *a.n, x, s, f);
  } else {
    std::cout << render_pair_symbolic(p, f);
  }
  return 0;
}

int do_table(const TableArgs& a) {
  const OutputFormat f = resolve_format(a.format);
  const auto [from, to] = parse_k_range(a.k_range);
  Catalog storage;
  const Catalog& cat = select_catalog(a.catalog_path, storage);
  std::vector<PipelineReport<Rational>> rows;
  rows.reserve(to - from + 1);
  for (long k = from; k <= to; ++k)
    rows.push_back(run_pipeline(cat, a.example, k));
  std::cout << render_table(rows, f);
  for (const auto& r : rows)
    if (!r.all_passed()) return kExitCheckFailed;
  return 0;
}

int do_solve(const SolveArgs& a) {
  const OutputFormat f = resolve_format(a.format);
  const ProfileConstraints constraints{a.beta_min, a.require_k2_nonneg};
  const auto sols =
      solve_fixed_point_profile(a.k2, a.chi, a.fixed_total, constraints);
  std::cout << render_profiles(sols, f);
  return sols.empty() ? kExitNoSolution : 0;
}

int do_basis(const BasisArgs& a) {
  const OutputFormat f = resolve_format(a.format);
  if (a.u.size() != 2)
    throw UsageError("--u takes exactly two residues, e.g. --u 1,2");
  const WeightConfig cfg{a.weights, a.u[0], a.u[1], a.degree};
  validate(cfg);  // malformed lists surface as usage errors below
  std::cout << render_basis(cfg, f);
  return 0;
}

int do_verify(const VerifyArgs& a) {
  const OutputFormat f = resolve_format(a.format);
  if (a.k_max < 1) throw UsageError("--k-max must be >= 1");
  Catalog storage;
  const Catalog& cat = select_catalog(a.catalog_path, storage);
  const VerifyReport report = run_verification(cat, a.k_max);
  std::cout << render_verify(report, f);
  return report.all_passed() ? 0 : kExitCheckFailed;
}

void add_format_option(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "output format (json, csv, markdown)")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of cyclic-quotient canonical cover series"};
  app.require_subcommand(1);

  PairArgs pair_args;
  CLI::App* pair_cmd =
      app.add_subcommand("pair", "invariant tables of a generating pair");
  pair_cmd->add_option("--id", pair_args.id, "pair id: I, II or III")
      ->required();
  pair_cmd->add_option("--n", pair_args.n,
                       "evaluate at a concrete n instead of printing formulas");
  pair_cmd->add_flag("--symbolic", pair_args.symbolic,
                     "print the formulas in n (the default)");
  add_format_option(pair_cmd, pair_args.format);

  TableArgs table_args;
  CLI::App* table_cmd =
      app.add_subcommand("table", "series table of one example");
  table_cmd->add_option("--example", table_args.example, "example id (1-3)")
      ->required();
  table_cmd
      ->add_option("--k", table_args.k_range,
                   "series parameter: a value like 2 or a range like 1..3")
      ->required();
  table_cmd->add_option("--catalog", table_args.catalog_path,
                        "use a catalog file instead of the built-in one");
  add_format_option(table_cmd, table_args.format);

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "fixed-point profiles (alpha, beta) allowed by divisibility");
  solve_cmd->add_option("--k2", solve_args.k2, "K^2 of the cover")->required();
  solve_cmd->add_option("--chi", solve_args.chi, "chi of the cover")
      ->required();
  solve_cmd
      ->add_option("--fixed", solve_args.fixed_total,
                   "total number of isolated fixed points (alpha + beta)")
      ->required();
  solve_cmd->add_option("--beta-min", solve_args.beta_min,
                        "lower bound on beta");
  solve_cmd->add_flag("--require-k2-nonneg", solve_args.require_k2_nonneg,
                      "discard profiles that make K2 of the quotient negative");
  add_format_option(solve_cmd, solve_args.format);

  BasisArgs basis_args;
  CLI::App* basis_cmd = app.add_subcommand(
      "basis", "monomial basis of the invariant subspace of a configuration");
  basis_cmd
      ->add_option("--weights", basis_args.weights,
                   "section pullback weights, e.g. 0,0,2,1")
      ->required()
      ->delimiter(',');
  basis_cmd
      ->add_option("--u", basis_args.u, "weights of x0,x1, e.g. 1,2")
      ->required()
      ->delimiter(',');
  basis_cmd->add_option("--degree", basis_args.degree, "degree d of the P^1 factor")
      ->required();
  add_format_option(basis_cmd, basis_args.format);

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the full verification battery");
  verify_cmd->add_option("--k-max", verify_args.k_max,
                         "check concrete values up to this k (default 12)");
  verify_cmd->add_option("--catalog", verify_args.catalog_path,
                         "verify a catalog file instead of the built-in one");
  add_format_option(verify_cmd, verify_args.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (pair_cmd->parsed()) return do_pair(pair_args);
    if (table_cmd->parsed()) return do_table(table_args);
    if (solve_cmd->parsed()) return do_solve(solve_args);
    if (basis_cmd->parsed()) return do_basis(basis_args);
    if (verify_cmd->parsed()) return do_verify(verify_args);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutOfRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
