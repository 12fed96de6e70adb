#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affmon/json_convert.hpp"
#include "affmon/log_ring.hpp"
#include "affmon/monoid.hpp"

namespace affmon {

// File loading and the document-level formats consumed by the command line
// tool. Parse failures throw ParseError naming the file position or the
// offending field.

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// JSON with positioned errors: "name:line:column: reason".
Json parse_json_text(const std::string& text, const std::string& name);
Json load_json_file(const std::string& path);

/// Monoid document: {"monoid": {"ambient_rank", "generators"}} or
/// {"presentation": {"n", "relations"}}; a bare monoid object is accepted.
/// Presentations go through the universal cancellative torsion-free
/// quotient and report any torsion that was discarded on the way.
struct MonoidInput {
  AffineMonoid monoid;
  bool presented = false;
  bool torsion_free = true;
  std::vector<Int> discarded_torsion;
  IntegerMatrix generator_images{0, 0};  // presented inputs only
};
MonoidInput monoid_from_document(const Json& j);

/// Ring document: {"ring": {...}} or a bare descriptor object.
BaseRingDescriptor ring_from_document(const Json& j);

/// Shorthand ring names for the command line: Q, Z, F<p>, mod<n>, QxQ,
/// QxQxQ, ... Returns nothing when the string is not a shorthand.
std::optional<BaseRingDescriptor> ring_from_shorthand(const std::string& s);

/// Center document: {"monoid_prime": {"face_generators": [...]},
/// "base_prime": {"p": ..., "factor": ...}} with both parts optional, or
/// {"polynomial_generators": [...]}; a wrapping {"center": ...} is
/// accepted. Polynomial generators stay unparsed until the coefficient
/// field and variable count are known.
struct CenterInput {
  std::optional<CenterSpec> monomial;
  std::optional<Json> polynomial;
};
CenterInput center_from_document(const Json& j);

std::vector<Polynomial> polynomials_from_json(const PolyContext& ctx, const Json& j,
                                              const std::string& path);

/// Certificate document: {"certificate": {...}} (a report) or the bare
/// certificate object.
Certificate certificate_from_document(const Json& j);

}  // namespace affmon
