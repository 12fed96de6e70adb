#include "affmon/certificate.hpp"

#include <algorithm>
#include <cstdint>

#include "affmon/monoid.hpp"
#include "affmon/spectrum.hpp"

namespace affmon {

namespace {

struct StepFailure : std::runtime_error {
  explicit StepFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct OracleBudgetHit : std::runtime_error {
  OracleBudgetHit() : std::runtime_error("oracle budget exceeded") {}
};

[[noreturn]] void reject(const std::string& msg) { throw StepFailure(msg); }

AffineMonoid monoid_of(const Json& data) {
  MonoidData md = parse_monoid_data(require_field(data, "monoid", "data"), "data.monoid");
  return make_affine_monoid(md.gens, md.ambient);
}

std::vector<std::size_t> parse_index_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_size(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Vec combine(const IntegerMatrix& gens, const Vec& coeffs) {
  Vec out(gens.cols(), 0);
  for (std::size_t i = 0; i < gens.rows(); ++i) out = add(out, scaled(coeffs[i], gens.row(i)));
  return out;
}

// ---- per-rule verifiers ------------------------------------------------

void check_membership_witness(const Json& d) {
  AffineMonoid q = monoid_of(d);
  Vec x = parse_vec(require_field(d, "x", "data"), "data.x");
  Vec c = parse_vec(require_field(d, "coefficients", "data"), "data.coefficients");
  if (c.size() != q.gens.rows()) reject("coefficient count does not match the generators");
  for (const Int& v : c)
    if (v < 0) reject("negative coefficient in a membership witness");
  if (combine(q.gens, c) != x) reject("coefficients do not reproduce the element");
}

void check_non_membership(const Json& d) {
  AffineMonoid q = monoid_of(d);
  Vec x = parse_vec(require_field(d, "x", "data"), "data.x");
  if (membership(q, x).member) reject("claimed non-member is reachable");
}

void check_face_support(const Json& d) {
  AffineMonoid q = monoid_of(d);
  std::vector<std::size_t> s =
      parse_index_list(require_field(d, "face_indices", "data"), "data.face_indices");
  Vec lambda = parse_vec(require_field(d, "functional", "data"), "data.functional");
  if (lambda.size() != q.ambient) reject("functional has the wrong length");
  std::vector<bool> in(q.gens.rows(), false);
  for (std::size_t i : s) {
    if (i >= q.gens.rows()) reject("face index out of range");
    in[i] = true;
  }
  for (std::size_t i = 0; i < q.gens.rows(); ++i) {
    Int v = dot(lambda, q.gens.row(i));
    if (in[i] && v != 0) reject("functional does not vanish on a face generator");
    if (!in[i] && v <= 0) reject("functional is not positive off the face");
  }
}

void check_face_rejection(const Json& d) {
  AffineMonoid q = monoid_of(d);
  std::vector<std::size_t> s =
      parse_index_list(require_field(d, "support_indices", "data"), "data.support_indices");
  Vec c = parse_vec(require_field(d, "combination", "data"), "data.combination");
  if (c.size() != q.gens.rows()) reject("combination length does not match the generators");
  std::vector<bool> in(q.gens.rows(), false);
  for (std::size_t i : s) {
    if (i >= q.gens.rows()) reject("support index out of range");
    in[i] = true;
  }
  if (combine(q.gens, c) != Vec(q.ambient, 0)) reject("combination is not a relation");
  Int outside = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (in[i]) continue;
    if (c[i] < 0) reject("negative coefficient outside the support");
    outside += c[i];
  }
  if (outside == 0) reject("no positive coefficient outside the support");
}

void check_saturation_witness(const Json& d) {
  AffineMonoid q = monoid_of(d);
  Vec x = parse_vec(require_field(d, "x", "data"), "data.x");
  Int n = parse_int(require_field(d, "n", "data"), "data.n");
  Vec c = parse_vec(require_field(d, "multiple_coefficients", "data"),
                    "data.multiple_coefficients");
  if (n < 2) reject("the multiplier must be at least 2");
  if (c.size() != q.gens.rows()) reject("coefficient count does not match the generators");
  for (const Int& v : c)
    if (v < 0) reject("negative coefficient in the multiple witness");
  if (combine(q.gens, c) != scaled(n, x)) reject("coefficients do not reproduce the multiple");
  if (membership(q, x).member) reject("claimed outside element is a member");
}

void check_root_closed(const Json& d) {
  AffineMonoid q = monoid_of(d);
  SaturationResult r = root_closed_and_saturate(q);
  if (!r.root_closed) reject("the monoid is not root closed");
}

void check_zero_divisor(const Json& d) {
  BaseRingDescriptor a = parse_ring(require_field(d, "ring", "data"), "data.ring");
  Scalar x = parse_scalar(a, require_field(d, "a", "data"), "data.a");
  Scalar y = parse_scalar(a, require_field(d, "b", "data"), "data.b");
  if (ring_is_zero(x) || ring_is_zero(y)) reject("zero divisor factors must be nonzero");
  if (!ring_is_zero(ring_mul(a, x, y))) reject("the product is not zero");
}

void check_ring_flag(const Json& d) {
  BaseRingDescriptor a = parse_ring(require_field(d, "ring", "data"), "data.ring");
  std::string flag = parse_string(require_field(d, "flag", "data"), "data.flag");
  bool value = parse_bool(require_field(d, "value", "data"), "data.value");
  bool actual = false;
  if (flag == "domain")
    actual = a.is_domain();
  else if (flag == "field")
    actual = a.is_field();
  else if (flag == "regular")
    actual = a.is_regular();
  else if (flag == "local")
    actual = a.is_local();
  else
    throw ParseError("data.flag: unknown ring flag '" + flag + "'");
  if (actual != value) reject("ring flag '" + flag + "' does not match");
}

void check_base_prime(const Json& d) {
  BaseRingDescriptor a = parse_ring(require_field(d, "ring", "data"), "data.ring");
  BasePrimeSpec p = parse_base_prime(require_field(d, "prime", "data"), "data.prime");
  if (!valid_base_prime(a, p)) reject("not a prime of the base ring");
  if (d.contains("height")) {
    std::size_t h = parse_size(d["height"], "data.height");
    if (base_prime_height(a, p) != h) reject("stated height is wrong");
  }
  if (d.contains("residue")) {
    BaseRingDescriptor r = parse_ring(d["residue"], "data.residue");
    if (!(residue_field(a, p) == r)) reject("stated residue field is wrong");
  }
}

void check_laurent_recognition(const Json& d) {
  AffineMonoid q = monoid_of(d);
  std::size_t rank = parse_size(require_field(d, "rank", "data"), "data.rank");
  if (q.unit_gen_indices.size() != q.gens.rows())
    reject("a generator is not invertible, the monoid is not a group");
  if (q.gp_rank() != rank) reject("stated lattice rank is wrong");
}

void check_monomial_prime_quotient(const Json& d) {
  check_face_support(d);
  AffineMonoid q = monoid_of(d);
  Vec lambda = parse_vec(d["functional"], "data.functional");
  std::vector<std::size_t> s = parse_index_list(d["face_indices"], "data.face_indices");
  std::vector<bool> in(q.gens.rows(), false);
  for (std::size_t i : s) in[i] = true;
  // multiplicativity of the quotient basis: products of face generators
  // stay in the face, any product touching the outside falls in the prime
  for (std::size_t i = 0; i < q.gens.rows(); ++i) {
    for (std::size_t j = i; j < q.gens.rows(); ++j) {
      Int v = dot(lambda, add(q.gens.row(i), q.gens.row(j)));
      if (in[i] && in[j]) {
        if (v != 0) reject("a product of face generators leaves the face");
      } else if (v <= 0) {
        reject("a product with an outside generator misses the prime");
      }
    }
  }
}

void check_dimension(const Json& d) {
  AffineMonoid q = monoid_of(d);
  std::size_t dim = parse_size(require_field(d, "dim", "data"), "data.dim");
  if (primes(q).dim != dim) reject("stated monoid dimension is wrong");
}

void check_dim_equation(const Json& d) {
  Int total = parse_int(require_field(d, "total", "data"), "data.total");
  Int height = parse_int(require_field(d, "height", "data"), "data.height");
  Int fiber = parse_int(require_field(d, "fiber_dim", "data"), "data.fiber_dim");
  if (total != height + fiber) reject("dimension equation does not balance");
}

void check_oracle_dim(const Json& d, std::size_t budget) {
  BaseRingDescriptor field = parse_ring(require_field(d, "field", "data"), "data.field");
  if (!(field.kind == RingKind::Rationals || field.kind == RingKind::PrimeField))
    throw ParseError("data.field: oracle computations need a coefficient field");
  std::size_t nvars = parse_size(require_field(d, "nvars", "data"), "data.nvars");
  PolyContext ctx = make_poly_context(field, nvars);
  const Json& jideal = require_field(d, "ideal", "data");
  if (!jideal.is_array()) throw ParseError("data.ideal: expected an array of polynomials");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < jideal.size(); ++i)
    gens.push_back(parse_polynomial(ctx, jideal[i], "data.ideal[" + std::to_string(i) + "]"));
  Int dim = parse_int(require_field(d, "dim", "data"), "data.dim");
  GroebnerResult gb = buchberger(ctx, std::move(gens), budget);
  if (gb.budget_exceeded) throw OracleBudgetHit();
  long actual = krull_dim_quotient(ctx, gb.basis);
  if (Int(actual) != dim) reject("recomputed dimension disagrees");
}

void check_locality(const Json& d) {
  bool localized = parse_bool(require_field(d, "localized", "data"), "data.localized");
  if (localized) return;
  BaseRingDescriptor a = parse_ring(require_field(d, "ring", "data"), "data.ring");
  AffineMonoid q = monoid_of(d);
  if (!a.is_local()) reject("the coefficient ring is not local");
  if (!q.is_trivial()) reject("the monoid part is not trivial");
}

void check_monomial_contraction(const Json& d) {
  check_face_support(d);
  AffineMonoid q = monoid_of(d);
  Vec lambda = parse_vec(d["functional"], "data.functional");
  const Json& jsamples = require_field(d, "samples", "data");
  if (!jsamples.is_array()) throw ParseError("data.samples: expected an array");
  for (std::size_t i = 0; i < jsamples.size(); ++i) {
    std::string path = "data.samples[" + std::to_string(i) + "]";
    const Json& js = jsamples[i];
    Vec x = parse_vec(require_field(js, "x", path), path + ".x");
    bool in_prime = parse_bool(require_field(js, "in_prime", path), path + ".in_prime");
    if (!membership(q, x).member) reject("contraction sample is not in the monoid");
    if ((dot(lambda, x) > 0) != in_prime) reject("contraction sample classified wrongly");
  }
}

void check_unit_preimage(const Json& d) {
  AffineMonoid q = monoid_of(d);
  std::vector<std::size_t> stated =
      parse_index_list(require_field(d, "unit_indices", "data"), "data.unit_indices");
  if (stated != q.unit_gen_indices) reject("stated invertible generators are wrong");
}

void verify_step(const CertStep& step, std::size_t budget) {
  const Json& d = step.data;
  if (step.rule == "reasoning") return;
  if (step.rule == "membership-witness") return check_membership_witness(d);
  if (step.rule == "non-membership") return check_non_membership(d);
  if (step.rule == "face-support") return check_face_support(d);
  if (step.rule == "face-rejection") return check_face_rejection(d);
  if (step.rule == "saturation-witness") return check_saturation_witness(d);
  if (step.rule == "root-closed") return check_root_closed(d);
  if (step.rule == "zero-divisor") return check_zero_divisor(d);
  if (step.rule == "ring-flag") return check_ring_flag(d);
  if (step.rule == "base-prime") return check_base_prime(d);
  if (step.rule == "laurent-recognition") return check_laurent_recognition(d);
  if (step.rule == "monomial-prime-quotient") return check_monomial_prime_quotient(d);
  if (step.rule == "dimension") return check_dimension(d);
  if (step.rule == "dim-equation") return check_dim_equation(d);
  if (step.rule == "oracle-dim") return check_oracle_dim(d, budget);
  if (step.rule == "locality") return check_locality(d);
  if (step.rule == "monomial-contraction") return check_monomial_contraction(d);
  if (step.rule == "unit-preimage") return check_unit_preimage(d);
  throw ParseError("unknown certificate rule '" + step.rule + "'");
}

}  // namespace

std::vector<std::string> known_certificate_rules() {
  return {"reasoning",        "membership-witness", "non-membership",
          "face-support",     "face-rejection",     "saturation-witness",
          "root-closed",      "zero-divisor",       "ring-flag",
          "base-prime",       "laurent-recognition", "monomial-prime-quotient",
          "dimension",        "dim-equation",       "oracle-dim",
          "locality",         "monomial-contraction", "unit-preimage"};
}

Json certificate_to_json(const Certificate& cert) {
  Json out = Json::object();
  out["verdict"] = cert.verdict;
  out["subject"] = cert.subject;
  Json steps = Json::array();
  for (const CertStep& s : cert.steps) {
    Json js = Json::object();
    js["rule"] = s.rule;
    js["claim"] = s.claim;
    js["method"] = s.method;
    js["data"] = s.data;
    Json uses = Json::array();
    for (std::size_t u : s.uses) uses.push_back(u);
    js["uses"] = std::move(uses);
    steps.push_back(std::move(js));
  }
  out["steps"] = std::move(steps);
  return out;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  cert.verdict = parse_string(require_field(j, "verdict", "certificate"), "certificate.verdict");
  cert.subject = parse_string(require_field(j, "subject", "certificate"), "certificate.subject");
  const Json& jsteps = require_field(j, "steps", "certificate");
  if (!jsteps.is_array()) throw ParseError("certificate.steps: expected an array");
  for (std::size_t i = 0; i < jsteps.size(); ++i) {
    std::string path = "certificate.steps[" + std::to_string(i) + "]";
    const Json& js = jsteps[i];
    CertStep step;
    step.rule = parse_string(require_field(js, "rule", path), path + ".rule");
    step.claim = parse_string(require_field(js, "claim", path), path + ".claim");
    step.method = parse_string(require_field(js, "method", path), path + ".method");
    step.data = require_field(js, "data", path);
    const Json& juses = require_field(js, "uses", path);
    if (!juses.is_array()) throw ParseError(path + ".uses: expected an array");
    for (std::size_t k = 0; k < juses.size(); ++k)
      step.uses.push_back(parse_size(juses[k], path + ".uses[" + std::to_string(k) + "]"));
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

std::string digest_bytes(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (std::size_t i = 0; i < 16; ++i) out[15 - i] = hex[(h >> (4 * i)) & 0xf];
  return out;
}

std::string certificate_digest(const Certificate& cert) {
  return digest_bytes(certificate_to_json(cert).dump());
}

VerifyResult verify_certificate(const Certificate& cert, std::size_t oracle_budget) {
  VerifyResult out;
  if (cert.verdict != "yes" && cert.verdict != "no" && cert.verdict != "unsupported") {
    out.malformed = true;
    out.message = "verdict must be yes, no or unsupported";
    return out;
  }
  static const std::vector<std::string> methods = {"structural", "oracle", "brute-force"};
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertStep& step = cert.steps[i];
    if (std::find(methods.begin(), methods.end(), step.method) == methods.end()) {
      out.malformed = true;
      out.failed_step = i;
      out.message = "step " + std::to_string(i) + ": unknown method '" + step.method + "'";
      return out;
    }
    for (std::size_t u : step.uses) {
      if (u >= i) {
        out.malformed = true;
        out.failed_step = i;
        out.message = "step " + std::to_string(i) + " uses step " + std::to_string(u) +
                      ", which does not precede it";
        return out;
      }
    }
    try {
      verify_step(step, oracle_budget);
    } catch (const ParseError& e) {
      out.malformed = true;
      out.failed_step = i;
      out.message = "step " + std::to_string(i) + ": " + e.what();
      return out;
    } catch (const OracleBudgetHit&) {
      out.budget_exceeded = true;
      out.failed_step = i;
      out.message = "step " + std::to_string(i) + ": oracle budget exceeded";
      return out;
    } catch (const StepFailure& e) {
      out.failed_step = i;
      out.message = "step " + std::to_string(i) + ": " + e.what();
      return out;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace affmon
