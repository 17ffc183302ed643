#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "shatter/constructions.hpp"
#include "shatter/solver.hpp"

namespace shatter {

using Json = nlohmann::json;

struct FamilyDocument {
  Family family;
  std::optional<Json> certificate;
};

/// Parses the canonical family JSON. Throws SyntaxError (with byte position)
/// for malformed JSON and ValidationError for schema or invariant violations,
/// including non-convex polygon vertex lists.
FamilyDocument parse_family_document(const std::string& text);

Family parse_family(const std::string& text);

Json family_to_json(const Family& f, const std::optional<Json>& certificate = std::nullopt);

/// Canonical serialization: sorted keys, two-space indent, trailing newline,
/// rationals as "p/q" strings. parse(serialize(f)) == f bit-exactly.
std::string serialize_family(const Family& f,
                             const std::optional<Json>& certificate = std::nullopt);

Json certificate_to_json(const ConstructionResult& r);

/// Witness list embedded in a certificate, for rendering.
std::vector<Witness> witnesses_from_certificate(const Json& certificate, int n);

/// {"segments": [[["x","y"],["x","y"]], ...], "halfplanes": [{"a","b","c"}, ...]}
HittingInstance parse_hitting_instance(const std::string& text);

std::string serialize_hitting_instance(const HittingInstance& inst);

}  // namespace shatter
