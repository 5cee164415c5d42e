#ifndef CANCOV_SERIALIZE_HPP
#define CANCOV_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "cancov/catalog.hpp"
#include "cancov/pipeline.hpp"

namespace cancov {

/// JSON views of the library types. Keys are emitted in sorted order, so a
/// document produced here survives a parse/dump cycle byte for byte.
///
/// Forms serialize as exact fractions:
///   {"offset_den":1,"offset_num":-12,"param":"k","slope_den":1,"slope_num":24}
/// Numeric invariants serialize as plain integers (every invariant in the
/// catalog is one); a non-integer value is an internal error, not a schema.
nlohmann::json to_json(const LinForm& f);
nlohmann::json to_json(const SurfaceInvariants<Rational>& s);
nlohmann::json to_json(const SurfaceInvariants<LinForm>& s);
nlohmann::json to_json(const SingularLocus<Rational>& l);
nlohmann::json to_json(const SingularLocus<LinForm>& l);
nlohmann::json to_json(const GeographyReport& r);
nlohmann::json to_json(const PipelineReport<Rational>& r);
nlohmann::json to_json(const PipelineReport<LinForm>& r);
nlohmann::json to_json(const Catalog& c);

/// Parsers for the catalog schema. Validation is structural (keys present,
/// right JSON types, denominators nonzero); whether the numbers describe a
/// real geometry is the verifier's question, so a well-formed file with
/// wrong values loads fine and then fails verification.
LinForm linform_from_json(const nlohmann::json& j);
Catalog catalog_from_json(const nlohmann::json& j);

/// Read and parse a catalog file. Throws CatalogError on I/O or schema
/// problems.
Catalog load_catalog_file(const std::string& path);

}  // namespace cancov

#endif
