#include "affmon/io.hpp"

#include <fstream>
#include <sstream>

namespace affmon {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << content;
  if (!out) throw ParseError(path + ": write failed");
}

Json parse_json_text(const std::string& text, const std::string& name) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is one past the failure; count lines up to it
    std::size_t stop = e.byte > 0 ? e.byte - 1 : 0;
    if (stop > text.size()) stop = text.size();
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string reason = e.what();
    // the library message ends with the useful part after the last "; "
    std::size_t at = reason.rfind("error: ");
    if (at != std::string::npos) reason = reason.substr(at + 7);
    throw ParseError(name + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": " + reason);
  }
}

Json load_json_file(const std::string& path) {
  return parse_json_text(read_text_file(path), path);
}

namespace {

std::pair<Vec, Vec> parse_relation(const Json& j, std::size_t n, const std::string& path) {
  const Json *left = nullptr, *right = nullptr;
  if (j.is_object()) {
    left = &require_field(j, "lhs", path);
    right = &require_field(j, "rhs", path);
  } else if (j.is_array() && j.size() == 2) {
    left = &j[0];
    right = &j[1];
  } else {
    throw ParseError(path + ": expected {\"lhs\", \"rhs\"} or a pair of vectors");
  }
  Vec a = parse_vec(*left, path + ".lhs");
  Vec b = parse_vec(*right, path + ".rhs");
  if (a.size() != n)
    throw ParseError(path + ".lhs: expected " + std::to_string(n) + " coefficients");
  if (b.size() != n)
    throw ParseError(path + ".rhs: expected " + std::to_string(n) + " coefficients");
  for (const Int& v : a)
    if (v < 0) throw ParseError(path + ".lhs: coefficients must be nonnegative");
  for (const Int& v : b)
    if (v < 0) throw ParseError(path + ".rhs: coefficients must be nonnegative");
  return {std::move(a), std::move(b)};
}

}  // namespace

MonoidInput monoid_from_document(const Json& j) {
  if (!j.is_object()) throw ParseError("document: expected an object");
  MonoidInput out;
  if (j.contains("presentation")) {
    const Json& jp = j["presentation"];
    PresentedMonoid p;
    p.n = parse_size(require_field(jp, "n", "presentation"), "presentation.n");
    const Json& jrel = require_field(jp, "relations", "presentation");
    if (!jrel.is_array()) throw ParseError("presentation.relations: expected an array");
    for (std::size_t i = 0; i < jrel.size(); ++i)
      p.relations.push_back(
          parse_relation(jrel[i], p.n, "presentation.relations[" + std::to_string(i) + "]"));
    FromPresentationResult r = from_presentation(p);
    out.monoid = std::move(r.monoid);
    out.presented = true;
    out.torsion_free = r.torsion_free;
    out.discarded_torsion = std::move(r.discarded_torsion);
    out.generator_images = std::move(r.generator_images);
    return out;
  }
  const Json& jm = j.contains("monoid") ? j["monoid"] : j;
  MonoidData d = parse_monoid_data(jm, j.contains("monoid") ? "monoid" : "document");
  out.monoid = make_affine_monoid(d.gens, d.ambient);
  return out;
}

BaseRingDescriptor ring_from_document(const Json& j) {
  if (!j.is_object()) throw ParseError("ring document: expected an object");
  if (j.contains("ring")) return parse_ring(j["ring"], "ring");
  return parse_ring(j, "ring");
}

std::optional<BaseRingDescriptor> ring_from_shorthand(const std::string& s) {
  if (s == "Q") return ring_rationals();
  if (s == "Z") return ring_integers();
  auto digits = [](const std::string& t) {
    return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
  };
  if (s.size() > 1 && s[0] == 'F' && digits(s.substr(1))) {
    Int p(s.substr(1));
    if (is_prime_int(p)) return ring_prime_field(p);
    return std::nullopt;
  }
  if (s.size() > 3 && s.rfind("mod", 0) == 0 && digits(s.substr(3))) {
    Int n(s.substr(3));
    if (n >= 2) return ring_integers_mod(n);
    return std::nullopt;
  }
  // QxQ, QxQxQ, ...: a product of rational fields
  if (s.size() >= 3 && s[0] == 'Q') {
    std::size_t factors = 1;
    std::size_t i = 1;
    while (i + 1 < s.size() && s[i] == 'x' && s[i + 1] == 'Q') {
      ++factors;
      i += 2;
    }
    if (i == s.size() && factors >= 2) return ring_product_of_fields(factors);
  }
  return std::nullopt;
}

CenterInput center_from_document(const Json& j) {
  if (!j.is_object()) throw ParseError("center document: expected an object");
  const Json& jc = j.contains("center") ? j["center"] : j;
  const std::string base = j.contains("center") ? "center" : "document";
  CenterInput out;
  if (jc.contains("polynomial_generators")) {
    if (jc.contains("monoid_prime") || jc.contains("base_prime"))
      throw ParseError(base + ": a center is either a monomial prime or a list of "
                       "polynomial generators, not both");
    const Json& jp = jc["polynomial_generators"];
    if (!jp.is_array())
      throw ParseError(base + ".polynomial_generators: expected an array");
    out.polynomial = jp;
    return out;
  }
  CenterSpec spec;
  if (jc.contains("monoid_prime")) {
    const Json& jm = jc["monoid_prime"];
    const Json& jf =
        require_field(jm, "face_generators", base + ".monoid_prime");
    if (!jf.is_array())
      throw ParseError(base + ".monoid_prime.face_generators: expected an array");
    for (std::size_t i = 0; i < jf.size(); ++i)
      spec.face_gens.push_back(parse_size(
          jf[i], base + ".monoid_prime.face_generators[" + std::to_string(i) + "]"));
  }
  if (jc.contains("base_prime"))
    spec.base_prime = parse_base_prime(jc["base_prime"], base + ".base_prime");
  out.monomial = std::move(spec);
  return out;
}

std::vector<Polynomial> polynomials_from_json(const PolyContext& ctx, const Json& j,
                                              const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of polynomials");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_polynomial(ctx, j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Certificate certificate_from_document(const Json& j) {
  if (j.is_object() && j.contains("certificate"))
    return certificate_from_json(j["certificate"]);
  return certificate_from_json(j);
}

}  // namespace affmon
