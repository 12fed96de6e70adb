#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "affmon/base_ring.hpp"
#include "affmon/faces.hpp"
#include "affmon/matrix.hpp"
#include "affmon/numeric.hpp"
#include "affmon/polynomial.hpp"

namespace affmon {

using Json = nlohmann::ordered_json;

/// Raised on any structural problem with input data; the message names the
/// offending field.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Integers travel as decimal strings so they survive every JSON parser;
// plain JSON numbers are accepted on input for convenience.
Json json_int(const Int& v);
Int parse_int(const Json& j, const std::string& path);

Json json_vec(const Vec& v);
Vec parse_vec(const Json& j, const std::string& path);

Json json_matrix(const IntegerMatrix& m);
/// cols disambiguates the empty matrix.
IntegerMatrix parse_matrix(const Json& j, std::size_t cols, const std::string& path);

Json json_ring(const BaseRingDescriptor& a);
BaseRingDescriptor parse_ring(const Json& j, const std::string& path);

Json json_scalar(const BaseRingDescriptor& a, const Scalar& s);
Scalar parse_scalar(const BaseRingDescriptor& a, const Json& j, const std::string& path);

Json json_base_prime(const BasePrimeSpec& q);
BasePrimeSpec parse_base_prime(const Json& j, const std::string& path);

/// {"ambient_rank": n, "generators": [[..]]}
Json json_monoid_data(std::size_t ambient, const IntegerMatrix& gens);
struct MonoidData {
  std::size_t ambient = 0;
  IntegerMatrix gens{0, 0};
};
MonoidData parse_monoid_data(const Json& j, const std::string& path);

Json json_face(const Face& f);

Json json_polynomial(const BaseRingDescriptor& field, const Polynomial& f);
Polynomial parse_polynomial(const PolyContext& ctx, const Json& j, const std::string& path);

// Shared low-level accessors with field-naming errors.
const Json& require_field(const Json& j, const std::string& key, const std::string& path);
std::size_t parse_size(const Json& j, const std::string& path);
bool parse_bool(const Json& j, const std::string& path);
std::string parse_string(const Json& j, const std::string& path);

}  // namespace affmon
