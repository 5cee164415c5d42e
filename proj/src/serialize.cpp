#include "cancov/serialize.hpp"

#include <cstdint>
#include <fstream>
#include <utility>

#include "cancov/errors.hpp"

namespace cancov {

using nlohmann::json;

namespace {

std::int64_t to_i64(const Int& z, const char* what) {
  if (!z.fits_slong_p())
    throw Error(std::string(what) + " does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

std::int64_t integral(const Rational& v, const char* what) {
  if (!v.is_integer())
    throw Error(std::string(what) + " is not an integer: " + v.str());
  return to_i64(v.num(), what);
}

json shadow_json(const LineBundleShadow& s) {
  return json{{"name", s.name},
              {"h0", s.coh.h0},
              {"h1", s.coh.h1},
              {"h2", s.coh.h2}};
}

/// Catalog rows persist only the defining entries; chi and e are rebuilt on
/// load, so a stored row can never disagree with the identities.
json row_json(const SurfaceInvariants<LinForm>& s) {
  return json{{"label", s.label},
              {"q", to_json(s.q)},
              {"pg", to_json(s.pg)},
              {"k2", to_json(s.k2)}};
}

json pattern_json(const WeightConfigPattern& p) {
  return json{{"weights", p.weights},
              {"u0", p.u0},
              {"u1", p.u1},
              {"degree", to_json(p.degree)}};
}

json families_json(const std::vector<BasisFamily>& fs) {
  json a = json::array();
  for (const auto& f : fs)
    a.push_back(json{{"section", f.section},
                     {"residue", f.residue},
                     {"count", to_json(f.count)}});
  return a;
}

template <typename Num>
json report_json(const PipelineReport<Num>& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
  json geo = json::object();
  for (const auto& [name, rep] : r.geography) geo[name] = to_json(rep);
  json k_value;  // null for a symbolic run
  if (r.k) k_value = *r.k;
  return json{{"example", r.example_id},
              {"k", k_value},
              {"surfaces",
               {{"X", to_json(r.x)},
                {"S", to_json(r.s)},
                {"Y", to_json(r.y)},
                {"T", to_json(r.t)}}},
              {"singular_loci",
               {{"sigma", to_json(r.sigma_locus)},
                {"resolved_by_Y", to_json(r.y_locus)},
                {"resolved_by_T", to_json(r.t_locus)}}},
              {"checks", checks},
              {"geography", geo},
              {"all_passed", r.all_passed()}};
}

// Parse side. Failures are schema problems, hence CatalogError.

const json& member(const json& j, const char* key) {
  if (!j.is_object())
    throw CatalogError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end())
    throw CatalogError(std::string("missing key '") + key + "'");
  return *it;
}

std::int64_t int_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer())
    throw CatalogError(std::string("key '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

bool bool_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_boolean())
    throw CatalogError(std::string("key '") + key + "' must be a boolean");
  return v.get<bool>();
}

std::string str_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_string())
    throw CatalogError(std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

SurfaceInvariants<LinForm> row_from_json(const json& j) {
  return make_surface(linform_from_json(member(j, "q")),
                      linform_from_json(member(j, "pg")),
                      linform_from_json(member(j, "k2")),
                      str_member(j, "label"));
}

LineBundleShadow shadow_from_json(const json& j) {
  LineBundleShadow s;
  s.name = str_member(j, "name");
  s.coh.h0 = int_member(j, "h0");
  s.coh.h1 = int_member(j, "h1");
  s.coh.h2 = int_member(j, "h2");
  return s;
}

FixedPointProfile profile_from_json(const json& j) {
  return FixedPointProfile{int_member(j, "alpha"), int_member(j, "beta")};
}

WeightConfigPattern pattern_from_json(const json& j) {
  WeightConfigPattern p;
  const json& w = member(j, "weights");
  if (!w.is_array())
    throw CatalogError("key 'weights' must be an array of integers");
  for (const json& e : w) {
    if (!e.is_number_integer())
      throw CatalogError("key 'weights' must be an array of integers");
    p.weights.push_back(static_cast<int>(e.get<std::int64_t>()));
  }
  p.u0 = static_cast<int>(int_member(j, "u0"));
  p.u1 = static_cast<int>(int_member(j, "u1"));
  p.degree = linform_from_json(member(j, "degree"));
  return p;
}

std::vector<BasisFamily> families_from_json(const json& j, const char* key) {
  const json& a = member(j, key);
  if (!a.is_array())
    throw CatalogError(std::string("key '") + key + "' must be an array");
  std::vector<BasisFamily> fs;
  for (const json& e : a) {
    BasisFamily f;
    f.section = static_cast<int>(int_member(e, "section"));
    f.residue = static_cast<int>(int_member(e, "residue"));
    f.count = linform_from_json(member(e, "count"));
    fs.push_back(std::move(f));
  }
  return fs;
}

GeneratingPair pair_from_json(const json& j) {
  GeneratingPair p;
  p.id = parse_pair_id(str_member(j, "id"));
  p.genus = static_cast<int>(int_member(j, "genus"));
  p.iota_fixed_points = static_cast<int>(int_member(j, "iota_fixed_points"));
  p.min_n = static_cast<int>(int_member(j, "min_n"));
  p.x = row_from_json(member(j, "x"));
  p.s = row_from_json(member(j, "s"));
  if (j.contains("l_shadow")) p.l_shadow = shadow_from_json(j["l_shadow"]);
  if (j.contains("canonical_shadow"))
    p.canonical_shadow = shadow_from_json(j["canonical_shadow"]);
  return p;
}

ExampleRecipe example_from_json(const json& j) {
  ExampleRecipe e;
  e.id = static_cast<int>(int_member(j, "id"));
  e.pair = parse_pair_id(str_member(j, "pair"));
  e.x_profile = profile_from_json(member(j, "x_profile"));
  e.sigma_profile = profile_from_json(member(j, "sigma_profile"));
  e.q_y = int_member(j, "q_y");
  e.q_t = int_member(j, "q_t");
  e.sigma_a1_count = linform_from_json(member(j, "sigma_a1_count"));
  e.sigma_a1_inferred = bool_member(j, "sigma_a1_inferred");
  e.x_config = pattern_from_json(member(j, "x_config"));
  e.x_dim = linform_from_json(member(j, "x_dim"));
  e.x_families = families_from_json(j, "x_families");
  if (j.contains("adjoint_config"))
    e.adjoint_config = pattern_from_json(j["adjoint_config"]);
  if (j.contains("adjoint_dim"))
    e.adjoint_dim = linform_from_json(j["adjoint_dim"]);
  e.adjoint_families = families_from_json(j, "adjoint_families");
  e.h1_correction = int_member(j, "h1_correction");
  const json& exp = member(j, "expected");
  if (!exp.is_array()) throw CatalogError("key 'expected' must be an array");
  for (const json& entry : exp)
    e.expected.emplace_back(str_member(entry, "name"),
                            linform_from_json(member(entry, "formula")));
  return e;
}

}  // namespace

json to_json(const LinForm& f) {
  return json{{"slope_num", to_i64(f.slope().num(), "slope")},
              {"slope_den", to_i64(f.slope().den(), "slope")},
              {"offset_num", to_i64(f.offset().num(), "offset")},
              {"offset_den", to_i64(f.offset().den(), "offset")},
              {"param", f.param()}};
}

json to_json(const SurfaceInvariants<Rational>& s) {
  return json{{"label", s.label},
              {"q", integral(s.q, "q")},
              {"pg", integral(s.pg, "pg")},
              {"k2", integral(s.k2, "K2")},
              {"chi", integral(s.chi, "chi")},
              {"e", integral(s.e, "e")}};
}

json to_json(const SurfaceInvariants<LinForm>& s) {
  return json{{"label", s.label},
              {"q", to_json(s.q)},
              {"pg", to_json(s.pg)},
              {"k2", to_json(s.k2)},
              {"chi", to_json(s.chi)},
              {"e", to_json(s.e)}};
}

json to_json(const SingularLocus<Rational>& l) {
  return json{{"a1", integral(l.a1_count, "a1 count")},
              {"a2", l.a2_count},
              {"one_third", l.one_third_count}};
}

json to_json(const SingularLocus<LinForm>& l) {
  return json{{"a1", to_json(l.a1_count)},
              {"a2", l.a2_count},
              {"one_third", l.one_third_count}};
}

json to_json(const GeographyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"status", to_string(c.status)},
                          {"detail", c.detail}});
  return json{{"checks", checks}, {"all_passed", r.all_passed()}};
}

json to_json(const PipelineReport<Rational>& r) { return report_json(r); }
json to_json(const PipelineReport<LinForm>& r) { return report_json(r); }

json to_json(const Catalog& c) {
  json pairs = json::array();
  for (const auto& p : c.pairs) {
    json jp{{"id", to_string(p.id)},
            {"genus", p.genus},
            {"iota_fixed_points", p.iota_fixed_points},
            {"min_n", p.min_n},
            {"x", row_json(p.x)},
            {"s", row_json(p.s)}};
    if (p.l_shadow) jp["l_shadow"] = shadow_json(*p.l_shadow);
    if (p.canonical_shadow)
      jp["canonical_shadow"] = shadow_json(*p.canonical_shadow);
    pairs.push_back(std::move(jp));
  }
  json examples = json::array();
  for (const auto& e : c.examples) {
    json je{{"id", e.id},
            {"pair", to_string(e.pair)},
            {"x_profile", {{"alpha", e.x_profile.alpha}, {"beta", e.x_profile.beta}}},
            {"sigma_profile",
             {{"alpha", e.sigma_profile.alpha}, {"beta", e.sigma_profile.beta}}},
            {"q_y", e.q_y},
            {"q_t", e.q_t},
            {"sigma_a1_count", to_json(e.sigma_a1_count)},
            {"sigma_a1_inferred", e.sigma_a1_inferred},
            {"x_config", pattern_json(e.x_config)},
            {"x_dim", to_json(e.x_dim)},
            {"x_families", families_json(e.x_families)},
            {"adjoint_families", families_json(e.adjoint_families)},
            {"h1_correction", e.h1_correction}};
    if (e.adjoint_config) je["adjoint_config"] = pattern_json(*e.adjoint_config);
    if (e.adjoint_dim) je["adjoint_dim"] = to_json(*e.adjoint_dim);
    json expected = json::array();
    for (const auto& [name, formula] : e.expected)
      expected.push_back(json{{"name", name}, {"formula", to_json(formula)}});
    je["expected"] = std::move(expected);
    examples.push_back(std::move(je));
  }
  return json{{"pairs", pairs}, {"examples", examples}};
}

LinForm linform_from_json(const json& j) {
  const std::int64_t sn = int_member(j, "slope_num");
  const std::int64_t sd = int_member(j, "slope_den");
  const std::int64_t on = int_member(j, "offset_num");
  const std::int64_t od = int_member(j, "offset_den");
  if (sd == 0 || od == 0) throw CatalogError("zero denominator in a form");
  return LinForm(Rational(sn, sd), Rational(on, od), str_member(j, "param"));
}

Catalog catalog_from_json(const json& j) {
  Catalog c;
  const json& pairs = member(j, "pairs");
  if (!pairs.is_array()) throw CatalogError("key 'pairs' must be an array");
  for (const json& p : pairs) c.pairs.push_back(pair_from_json(p));
  const json& examples = member(j, "examples");
  if (!examples.is_array())
    throw CatalogError("key 'examples' must be an array");
  for (const json& e : examples) c.examples.push_back(example_from_json(e));
  return c;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CatalogError("catalog parse error in " + path + ": " + e.what());
  }
  return catalog_from_json(j);
}

}  // namespace cancov
