#include "affmon/algebra.hpp"

#include <cassert>
#include <sstream>

#include "affmon/json_convert.hpp"

namespace affmon {

namespace {

void insert_term(const BaseRingDescriptor& a, AlgebraElement& out, const Vec& exp,
                 const Scalar& coeff) {
  auto [it, inserted] = out.terms.try_emplace(exp, coeff);
  if (!inserted) {
    it->second = ring_add(a, it->second, coeff);
    if (ring_is_zero(it->second)) out.terms.erase(it);
  } else if (ring_is_zero(it->second)) {
    out.terms.erase(it);
  }
}

}  // namespace

AlgebraElement alg_zero() { return AlgebraElement{}; }

AlgebraElement alg_monomial(const BaseRingDescriptor& a, Vec exp, Scalar coeff) {
  AlgebraElement out;
  Scalar c = ring_normalize(a, std::move(coeff));
  if (!ring_is_zero(c)) out.terms.emplace(std::move(exp), std::move(c));
  return out;
}

AlgebraElement alg_one(const BaseRingDescriptor& a, std::size_t ambient) {
  return alg_monomial(a, Vec(ambient, 0), ring_one(a));
}

bool alg_is_zero(const AlgebraElement& x) { return x.terms.empty(); }

AlgebraElement alg_add(const BaseRingDescriptor& a, const AlgebraElement& x,
                       const AlgebraElement& y) {
  AlgebraElement out = x;
  for (const auto& [exp, coeff] : y.terms) insert_term(a, out, exp, coeff);
  return out;
}

AlgebraElement alg_sub(const BaseRingDescriptor& a, const AlgebraElement& x,
                       const AlgebraElement& y) {
  AlgebraElement out = x;
  for (const auto& [exp, coeff] : y.terms) insert_term(a, out, exp, ring_neg(a, coeff));
  return out;
}

AlgebraElement alg_mul(const BaseRingDescriptor& a, const AlgebraElement& x,
                       const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [xe, xc] : x.terms)
    for (const auto& [ye, yc] : y.terms) insert_term(a, out, add(xe, ye), ring_mul(a, xc, yc));
  return out;
}

AlgebraElement alg_scale(const BaseRingDescriptor& a, const Scalar& s, const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [exp, coeff] : x.terms) insert_term(a, out, exp, ring_mul(a, s, coeff));
  return out;
}

std::string alg_to_string(const BaseRingDescriptor& a, const AlgebraElement& x) {
  if (alg_is_zero(x)) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, coeff] : x.terms) {
    if (!first) os << " + ";
    first = false;
    os << ring_to_string(a, coeff) << "*e^" << to_string(exp);
  }
  return os.str();
}

AlgebraElement alg_normal_form(const AlgebraElement& x, const MonoidPrime& p) {
  AlgebraElement out;
  for (const auto& [exp, coeff] : x.terms)
    if (!in_prime(p, exp)) out.terms.emplace(exp, coeff);
  return out;
}

Certificate face_quotient_iso(const BaseRingDescriptor& a, const AffineMonoid& q,
                              const MonoidPrime& p) {
  std::string label = "{";
  for (std::size_t k = 0; k < p.face.gen_indices.size(); ++k) {
    if (k) label += ",";
    label += std::to_string(p.face.gen_indices[k]);
  }
  label += "}";

  Certificate cert;
  cert.verdict = "yes";
  cert.subject = "the quotient of " + a.name() +
                 "[Q] by the monomial prime over the face " + label +
                 " is the algebra of that face";

  Json idx = Json::array();
  for (std::size_t i : p.face.gen_indices) idx.push_back(i);
  CertStep quot;
  quot.rule = "monomial-prime-quotient";
  quot.claim = "face monomials survive as a basis of the quotient and generator "
               "pair products land on the correct side";
  quot.method = "structural";
  quot.data = Json::object({{"monoid", json_monoid_data(q.ambient, q.gens)},
                            {"face_indices", std::move(idx)},
                            {"functional", json_vec(p.face.functional)}});
  cert.steps.push_back(std::move(quot));

  CertStep inj;
  inj.rule = "reasoning";
  inj.claim = "injective: the quotient deletes only monomials outside the face, "
              "so distinct combinations of face monomials stay distinct";
  inj.method = "structural";
  inj.uses = {0};
  cert.steps.push_back(std::move(inj));

  CertStep surj;
  surj.rule = "reasoning";
  surj.claim = "surjective: every element reduces to its face supported part, "
               "the image of an element of the face algebra";
  surj.method = "structural";
  surj.uses = {0};
  cert.steps.push_back(std::move(surj));
  return cert;
}

}  // namespace affmon
