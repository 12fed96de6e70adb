#include "affmon/json_convert.hpp"

#include <cassert>

namespace affmon {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

Rat parse_rat(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) fail(path, "expected a number as a decimal string");
  try {
    Rat r(j.get<std::string>());
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(path, "not a valid rational: '" + j.get<std::string>() + "'");
  }
}

}  // namespace

const Json& require_field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

std::size_t parse_size(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (v >= 0) return static_cast<std::size_t>(v);
  }
  fail(path, "expected a nonnegative integer");
}

bool parse_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

std::string parse_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Json json_int(const Int& v) { return Json(v.get_str()); }

Int parse_int(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) fail(path, "expected an integer as a decimal string");
  try {
    return Int(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    fail(path, "not a valid integer: '" + j.get<std::string>() + "'");
  }
}

Json json_vec(const Vec& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(json_int(x));
  return out;
}

Vec parse_vec(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  Vec out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Json json_matrix(const IntegerMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(json_vec(m.row(i)));
  return out;
}

IntegerMatrix parse_matrix(const Json& j, std::size_t cols, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  IntegerMatrix m(0, cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string row_path = path + "[" + std::to_string(i) + "]";
    Vec row = parse_vec(j[i], row_path);
    if (row.size() != cols)
      fail(row_path, "expected " + std::to_string(cols) + " entries, got " +
                         std::to_string(row.size()));
    m.append_row(row);
  }
  return m;
}

Json json_ring(const BaseRingDescriptor& a) {
  Json out = Json::object();
  switch (a.kind) {
    case RingKind::Rationals:
      out["kind"] = "rationals";
      break;
    case RingKind::PrimeField:
      out["kind"] = "prime_field";
      out["p"] = json_int(a.modulus);
      break;
    case RingKind::Integers:
      out["kind"] = "integers";
      break;
    case RingKind::ModN:
      out["kind"] = "mod_n";
      out["n"] = json_int(a.modulus);
      break;
    case RingKind::ProductOfFields:
      out["kind"] = "product";
      out["factors"] = a.factors;
      break;
  }
  return out;
}

BaseRingDescriptor parse_ring(const Json& j, const std::string& path) {
  std::string kind = parse_string(require_field(j, "kind", path), path + ".kind");
  if (kind == "rationals") return ring_rationals();
  if (kind == "integers") return ring_integers();
  if (kind == "prime_field") {
    Int p = parse_int(require_field(j, "p", path), path + ".p");
    if (!is_prime_int(p)) fail(path + ".p", "'" + p.get_str() + "' is not prime");
    return ring_prime_field(p);
  }
  if (kind == "mod_n") {
    Int n = parse_int(require_field(j, "n", path), path + ".n");
    if (n < 2) fail(path + ".n", "modulus must be at least 2");
    return ring_integers_mod(n);
  }
  if (kind == "product" || kind == "product_of_fields") {
    std::size_t factors =
        parse_size(require_field(j, "factors", path), path + ".factors");
    if (factors < 2) fail(path + ".factors", "a product needs at least 2 factors");
    return ring_product_of_fields(factors);
  }
  fail(path + ".kind", "unknown ring kind '" + kind + "'");
}

Json json_scalar(const BaseRingDescriptor& a, const Scalar& s) {
  assert(s.c.size() == a.width());
  if (a.width() == 1) return Json(s.c[0].get_str());
  Json out = Json::array();
  for (const Rat& r : s.c) out.push_back(r.get_str());
  return out;
}

Scalar parse_scalar(const BaseRingDescriptor& a, const Json& j, const std::string& path) {
  Scalar s;
  if (a.width() == 1) {
    s.c.push_back(parse_rat(j, path));
  } else {
    if (!j.is_array() || j.size() != a.width())
      fail(path, "expected " + std::to_string(a.width()) + " components");
    for (std::size_t i = 0; i < j.size(); ++i)
      s.c.push_back(parse_rat(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return ring_normalize(a, std::move(s));
}

Json json_base_prime(const BasePrimeSpec& q) {
  Json out = Json::object();
  out["p"] = json_int(q.p);
  out["factor"] = q.factor;
  return out;
}

BasePrimeSpec parse_base_prime(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  BasePrimeSpec q;
  if (j.contains("p")) q.p = parse_int(j["p"], path + ".p");
  if (j.contains("factor")) q.factor = parse_size(j["factor"], path + ".factor");
  return q;
}

Json json_monoid_data(std::size_t ambient, const IntegerMatrix& gens) {
  Json out = Json::object();
  out["ambient_rank"] = ambient;
  out["generators"] = json_matrix(gens);
  return out;
}

MonoidData parse_monoid_data(const Json& j, const std::string& path) {
  MonoidData out;
  out.ambient = parse_size(require_field(j, "ambient_rank", path), path + ".ambient_rank");
  out.gens = parse_matrix(require_field(j, "generators", path), out.ambient,
                          path + ".generators");
  return out;
}

Json json_face(const Face& f) {
  Json out = Json::object();
  Json idx = Json::array();
  for (std::size_t i : f.gen_indices) idx.push_back(i);
  out["generator_indices"] = idx;
  out["functional"] = json_vec(f.functional);
  return out;
}

Json json_polynomial(const BaseRingDescriptor& field, const Polynomial& f) {
  Json terms = Json::array();
  for (const Term& t : f.terms) {
    Json jt = Json::object();
    jt["coeff"] = json_scalar(field, t.coeff);
    jt["exponents"] = json_vec(t.exp);
    terms.push_back(std::move(jt));
  }
  Json out = Json::object();
  out["terms"] = std::move(terms);
  return out;
}

Polynomial parse_polynomial(const PolyContext& ctx, const Json& j, const std::string& path) {
  const Json& jterms = require_field(j, "terms", path);
  if (!jterms.is_array()) fail(path + ".terms", "expected an array of terms");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < jterms.size(); ++i) {
    std::string tpath = path + ".terms[" + std::to_string(i) + "]";
    const Json& jt = jterms[i];
    Scalar coeff =
        parse_scalar(ctx.field, require_field(jt, "coeff", tpath), tpath + ".coeff");
    Vec exp = parse_vec(require_field(jt, "exponents", tpath), tpath + ".exponents");
    if (exp.size() != ctx.nvars)
      fail(tpath + ".exponents", "expected " + std::to_string(ctx.nvars) + " exponents");
    for (const Int& e : exp)
      if (e < 0) fail(tpath + ".exponents", "exponents must be nonnegative");
    terms.push_back(Term{std::move(exp), std::move(coeff)});
  }
  return poly_from_terms(ctx, std::move(terms));
}

}  // namespace affmon
