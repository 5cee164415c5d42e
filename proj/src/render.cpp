#include "cancov/render.hpp"

#include <unistd.h>

#include <cstdlib>
#include <sstream>

#include "cancov/errors.hpp"
#include "cancov/sections.hpp"
#include "cancov/serialize.hpp"

namespace cancov {

using nlohmann::json;

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void pair_header(std::ostringstream& os, const GeneratingPair& p) {
  os << "pair " << to_string(p.id) << " (genus " << p.genus << ", "
     << p.iota_fixed_points << " involution fixed points)";
}

void surface_line(std::ostringstream& os, const char* tag,
                  const SurfaceInvariants<Rational>& s) {
  os << tag << ": q=" << s.q << " pg=" << s.pg << " K2=" << s.k2
     << " chi=" << s.chi << " e=" << s.e << "\n";
}

void formula_lines(std::ostringstream& os, const char* tag,
                   const SurfaceInvariants<LinForm>& s) {
  os << "K2_" << tag << " = " << s.k2.str() << "\n";
  os << "chi_" << tag << " = " << s.chi.str() << "\n";
  os << "pg_" << tag << " = " << s.pg.str() << "\n";
  os << "q_" << tag << " = " << s.q.str() << "\n";
  os << "e_" << tag << " = " << s.e.str() << "\n";
}

void symbolic_csv_row(std::ostringstream& os, const char* tag,
                      const SurfaceInvariants<LinForm>& s) {
  os << tag << "," << s.q.str_explicit() << "," << s.pg.str_explicit() << ","
     << s.k2.str_explicit() << "," << s.chi.str_explicit() << ","
     << s.e.str_explicit() << "\n";
}

struct TableCells {
  std::string k, k2_x, chi_x, k2_y, chi_y, pg_y, k2_t, pg_t, sigma_a1;
  bool checks_passed = false;
};

TableCells cells_of(const PipelineReport<Rational>& r) {
  TableCells c;
  c.k = r.k ? std::to_string(*r.k) : "-";
  c.k2_x = r.x.k2.str();
  c.chi_x = r.x.chi.str();
  c.k2_y = r.y.k2.str();
  c.chi_y = r.y.chi.str();
  c.pg_y = r.y.pg.str();
  c.k2_t = r.t.k2.str();
  c.pg_t = r.t.pg.str();
  c.sigma_a1 = r.sigma_locus.a1_count.str();
  c.checks_passed = r.all_passed();
  return c;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "markdown") return OutputFormat::Markdown;
  throw UsageError("unknown format '" + name +
                   "' (expected json, csv or markdown)");
}

OutputFormat resolve_format(const std::string& flag) {
  if (!flag.empty()) return parse_format(flag);
  if (const char* env = std::getenv("CANCOV_FORMAT"); env != nullptr && *env)
    return parse_format(env);
  return isatty(STDOUT_FILENO) ? OutputFormat::Markdown : OutputFormat::Json;
}

std::string render_pair_numeric(const GeneratingPair& p, long n,
                                const SurfaceInvariants<Rational>& x,
                                const SurfaceInvariants<Rational>& s,
                                OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return dump(json{{"pair", to_string(p.id)},
                       {"genus", p.genus},
                       {"iota_fixed_points", p.iota_fixed_points},
                       {"n", n},
                       {"x", to_json(x)},
                       {"s", to_json(s)}});
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "surface,q,pg,K2,chi,e\n";
      os << "X," << x.q << "," << x.pg << "," << x.k2 << "," << x.chi << ","
         << x.e << "\n";
      os << "S," << s.q << "," << s.pg << "," << s.k2 << "," << s.chi << ","
         << s.e << "\n";
      return os.str();
    }
    case OutputFormat::Markdown: {
      std::ostringstream os;
      pair_header(os, p);
      os << ", n = " << n << "\n";
      surface_line(os, "X", x);
      surface_line(os, "S", s);
      return os.str();
    }
  }
  throw Error("unreachable format");
}

std::string render_pair_symbolic(const GeneratingPair& p, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return dump(json{{"pair", to_string(p.id)},
                       {"genus", p.genus},
                       {"iota_fixed_points", p.iota_fixed_points},
                       {"min_n", p.min_n},
                       {"x", to_json(p.x)},
                       {"s", to_json(p.s)}});
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "surface,q,pg,K2,chi,e\n";
      symbolic_csv_row(os, "X", p.x);
      symbolic_csv_row(os, "S", p.s);
      return os.str();
    }
    case OutputFormat::Markdown: {
      std::ostringstream os;
      pair_header(os, p);
      os << ", n >= " << p.min_n << "\n";
      formula_lines(os, "X", p.x);
      formula_lines(os, "S", p.s);
      return os.str();
    }
  }
  throw Error("unreachable format");
}

std::string render_profiles(const std::vector<FixedPointProfile>& sols,
                            OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: {
      json a = json::array();
      for (const auto& s : sols)
        a.push_back(json{{"alpha", s.alpha}, {"beta", s.beta}});
      return dump(a);
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "alpha,beta\n";
      for (const auto& s : sols) os << s.alpha << "," << s.beta << "\n";
      return os.str();
    }
    case OutputFormat::Markdown: {
      if (sols.empty()) return "no solutions\n";
      std::ostringstream os;
      for (const auto& s : sols) os << "(" << s.alpha << "," << s.beta << ")\n";
      return os.str();
    }
  }
  throw Error("unreachable format");
}

std::string render_basis(const WeightConfig& cfg, OutputFormat f) {
  const MonomialBasis basis = invariant_monomial_basis(cfg);
  switch (f) {
    case OutputFormat::Json: {
      json ms = json::array();
      for (const auto& m : basis)
        ms.push_back(json{{"section", m.section}, {"exponent", m.exponent}});
      return dump(json{{"config",
                        {{"weights", cfg.section_weights},
                         {"u0", cfg.u0},
                         {"u1", cfg.u1},
                         {"degree", cfg.degree}}},
                       {"monomials", ms},
                       {"dimension", static_cast<long>(basis.size())}});
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "section,exponent\n";
      for (const auto& m : basis) os << m.section << "," << m.exponent << "\n";
      return os.str();
    }
    case OutputFormat::Markdown: {
      std::ostringstream os;
      for (const auto& m : basis)
        os << "x0^" << m.exponent << " x1^" << (cfg.degree - m.exponent)
           << " f_" << m.section << "\n";
      os << "dim = " << basis.size() << "\n";
      return os.str();
    }
  }
  throw Error("unreachable format");
}

std::string render_table(const std::vector<PipelineReport<Rational>>& rows,
                         OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: {
      json a = json::array();
      for (const auto& r : rows) {
        a.push_back(json{{"k", r.k ? json(*r.k) : json()},
                         {"K2_X", to_long(r.x.k2)},
                         {"chi_X", to_long(r.x.chi)},
                         {"K2_Y", to_long(r.y.k2)},
                         {"chi_Y", to_long(r.y.chi)},
                         {"pg_Y", to_long(r.y.pg)},
                         {"K2_T", to_long(r.t.k2)},
                         {"pg_T", to_long(r.t.pg)},
                         {"sigma_A1", to_long(r.sigma_locus.a1_count)},
                         {"checks_passed", r.all_passed()}});
      }
      return dump(a);
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "k,K2_X,chi_X,K2_Y,chi_Y,pg_Y,K2_T,pg_T,sigma_A1,checks_passed\n";
      for (const auto& r : rows) {
        const TableCells c = cells_of(r);
        os << c.k << "," << c.k2_x << "," << c.chi_x << "," << c.k2_y << ","
           << c.chi_y << "," << c.pg_y << "," << c.k2_t << "," << c.pg_t << ","
           << c.sigma_a1 << "," << (c.checks_passed ? "true" : "false")
           << "\n";
      }
      return os.str();
    }
    case OutputFormat::Markdown: {
      std::ostringstream os;
      os << "| k | K2_X | chi_X | K2_Y | chi_Y | pg_Y | K2_T | pg_T | "
            "sigma_A1 | checks |\n";
      os << "|---|------|-------|------|-------|------|------|------|"
            "----------|--------|\n";
      for (const auto& r : rows) {
        const TableCells c = cells_of(r);
        os << "| " << c.k << " | " << c.k2_x << " | " << c.chi_x << " | "
           << c.k2_y << " | " << c.chi_y << " | " << c.pg_y << " | " << c.k2_t
           << " | " << c.pg_t << " | " << c.sigma_a1 << " | "
           << (c.checks_passed ? "pass" : "FAIL") << " |\n";
      }
      return os.str();
    }
  }
  throw Error("unreachable format");
}

std::string render_verify(const VerifyReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back(
            json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      return dump(json{{"checks", checks},
                       {"total", static_cast<long>(r.checks.size())},
                       {"passed", r.passed_count()},
                       {"all_passed", r.all_passed()}});
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "name,pass,detail\n";
      for (const auto& c : r.checks)
        os << csv_quote(c.name) << "," << (c.pass ? "true" : "false") << ","
           << csv_quote(c.detail) << "\n";
      return os.str();
    }
    case OutputFormat::Markdown: {
      std::ostringstream os;
      for (const auto& c : r.checks) {
        os << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
      }
      const long total = static_cast<long>(r.checks.size());
      if (r.all_passed())
        os << "all checks passed (" << total << ")\n";
      else
        os << (total - r.passed_count()) << " of " << total
           << " checks failed\n";
      return os.str();
    }
  }
  throw Error("unreachable format");
}

}  // namespace cancov
