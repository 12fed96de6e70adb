#include "affmon/log_ring.hpp"

#include <algorithm>
#include <cassert>

#include "affmon/faces.hpp"
#include "affmon/smith.hpp"

namespace affmon {

namespace {

CertStep mk_step(std::string rule, std::string claim, std::string method, Json data,
                 std::vector<std::size_t> uses = {}) {
  CertStep s;
  s.rule = std::move(rule);
  s.claim = std::move(claim);
  s.method = std::move(method);
  s.data = std::move(data);
  s.uses = std::move(uses);
  return s;
}

std::size_t push_step(Certificate& cert, CertStep s) {
  cert.steps.push_back(std::move(s));
  return cert.steps.size() - 1;
}

Json monoid_json(const AffineMonoid& q) { return json_monoid_data(q.ambient, q.gens); }

Json index_array(const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(i);
  return out;
}

std::string face_label(const Face& f) {
  std::string s = "{";
  for (std::size_t k = 0; k < f.gen_indices.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(f.gen_indices[k]);
  }
  return s + "}";
}

// The base ring the localized algebra actually works over. Everything in
// the family localizes back into the family except the integers at a
// nonzero prime, which stay a regular local domain structurally.
struct EffectiveBase {
  std::optional<BaseRingDescriptor> descriptor;
  bool domain = false;
  bool regular = false;
  std::string description;
};

EffectiveBase effective_base(const LogRingDescriptor& r) {
  if (!r.localized || !r.base_prime) {
    return {r.base, r.base.is_domain(), r.base.is_regular(), r.base.name()};
  }
  std::optional<BaseRingDescriptor> lb = localize_base(r.base, *r.base_prime);
  if (!lb) {
    return {std::nullopt, true, true,
            "the integers localized at " + base_prime_name(r.base, *r.base_prime)};
  }
  return {*lb, lb->is_domain(), lb->is_regular(),
          lb->name() + ", the base localized at the center"};
}

AffineMonoid unit_submonoid(const AffineMonoid& q) {
  IntegerMatrix rows(0, q.ambient);
  for (std::size_t i : q.unit_gen_indices) rows.append_row(q.gens.row(i));
  return make_affine_monoid(rows, q.ambient);
}

Json contraction_samples(const AffineMonoid& q, const Face& f) {
  Json arr = Json::array();
  auto sample = [&](const Vec& x) {
    arr.push_back(
        Json::object({{"x", json_vec(x)}, {"in_prime", dot(f.functional, x) > 0}}));
  };
  for (std::size_t i = 0; i < q.gens.rows(); ++i) sample(q.gens.row(i));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < q.gens.rows() && pairs < 6; ++i)
    for (std::size_t j = i; j < q.gens.rows() && pairs < 6; ++j, ++pairs)
      sample(add(q.gens.row(i), q.gens.row(j)));
  return arr;
}

// Internal spot check that the quotient modulo a monomial prime is
// multiplicative: deleting prime terms before or after multiplying agrees.
void assert_quotient_multiplicative(const BaseRingDescriptor& a, const AffineMonoid& q,
                                    const MonoidPrime& p) {
  std::vector<Vec> samples;
  for (std::size_t i = 0; i < q.gens.rows() && samples.size() < 4; ++i)
    samples.push_back(q.gens.row(i));
  for (const Vec& x : samples) {
    for (const Vec& y : samples) {
      AlgebraElement ex = alg_monomial(a, x, ring_one(a));
      AlgebraElement ey = alg_monomial(a, y, ring_one(a));
      AlgebraElement lhs = alg_normal_form(alg_mul(a, ex, ey), p);
      AlgebraElement rhs = alg_normal_form(
          alg_mul(a, alg_normal_form(ex, p), alg_normal_form(ey, p)), p);
      assert(lhs == rhs);
      (void)lhs;
      (void)rhs;
    }
  }
}

// Witness steps for a monoid that is not root closed.
std::size_t push_saturation_witness(Certificate& cert, const AffineMonoid& q,
                                    const SaturationResult& sat) {
  Vec multiple = scaled(sat.witness_n, sat.witness_x);
  MembershipResult m = membership(q, multiple);
  assert(m.member);
  Json d = Json::object({{"monoid", monoid_json(q)},
                         {"x", json_vec(sat.witness_x)},
                         {"n", json_int(sat.witness_n)},
                         {"multiple_coefficients", json_vec(m.coefficients)}});
  return push_step(
      cert, mk_step("saturation-witness",
                    "the element " + to_string(sat.witness_x) + " lies outside the monoid "
                    "while its multiple by " + sat.witness_n.get_str() + " lies inside",
                    "brute-force", d));
}

// Condition on the quotient modulo the log ideal: it is a Laurent algebra
// over the effective base, so regularity is the base's regularity.
struct ConditionOne {
  bool regular = false;
  std::size_t last_step = 0;
};

ConditionOne check_condition_one(Certificate& cert, const LogRingDescriptor& r) {
  ConditionOne out;
  AffineMonoid u = unit_submonoid(r.monoid);
  assert(u.unit_gen_indices.size() == u.gens.rows());
  std::size_t rank = r.monoid.units_basis.rows();
  assert(u.gp_rank() == rank);
  Json ld = Json::object({{"monoid", monoid_json(u)}, {"rank", rank}});
  std::size_t laurent = push_step(
      cert,
      mk_step("laurent-recognition",
              "the invertible monomials form a lattice of rank " + std::to_string(rank) +
                  ", so the quotient modulo the log ideal is a Laurent algebra",
              "structural", ld));

  EffectiveBase eb = effective_base(r);
  std::size_t base_step;
  if (eb.descriptor) {
    Json rd = Json::object({{"ring", json_ring(*eb.descriptor)},
                            {"flag", "regular"},
                            {"value", eb.regular}});
    base_step = push_step(cert, mk_step("ring-flag",
                                        eb.description + (eb.regular ? " is regular" : " is not regular"),
                                        "structural", rd, {laurent}));
  } else {
    base_step = push_step(
        cert, mk_step("reasoning", eb.description + " is a regular local domain",
                      "structural", Json::object(), {laurent}));
  }
  out.regular = eb.regular;
  out.last_step = base_step;
  return out;
}

}  // namespace

std::string LogRingDescriptor::name() const {
  std::string s = "monoid algebra over " + base.name() + " on " +
                  std::to_string(monoid.gens.rows()) + " generators";
  if (localized) s += ", localized";
  return s;
}

LogRingDescriptor make_log_ring(const BaseRingDescriptor& base, const AffineMonoid& q) {
  LogRingDescriptor r;
  r.base = base;
  r.monoid = q;
  return r;
}

std::optional<BaseRingDescriptor> localize_base(const BaseRingDescriptor& a,
                                                const BasePrimeSpec& q) {
  assert(valid_base_prime(a, q));
  switch (a.kind) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return a;
    case RingKind::Integers:
      if (q.p == 0) return ring_rationals();
      return std::nullopt;
    case RingKind::ModN: {
      Int pk = 1;
      Int n = a.modulus;
      while (n % q.p == 0) {
        n /= q.p;
        pk *= q.p;
      }
      if (pk == q.p) return ring_prime_field(q.p);
      return ring_integers_mod(pk);
    }
    case RingKind::ProductOfFields:
      return ring_rationals();
  }
  return std::nullopt;
}

CenterSpec maximal_center(const AffineMonoid& q) {
  CenterSpec center;
  center.face_gens = q.unit_gen_indices;
  return center;
}

LocalizeOutcome localize_log_ring(const LogRingDescriptor& r, const CenterSpec& center) {
  LocalizeOutcome out;
  if (!valid_base_prime(r.base, center.base_prime)) {
    out.error = "the stated base prime is not a prime of " + r.base.name();
    return out;
  }
  for (std::size_t i : center.face_gens)
    if (i >= r.monoid.gens.rows()) {
      out.error = "face generator index " + std::to_string(i) + " is out of range";
      return out;
    }
  PrimeCheck pc = prime_from_face_gens(r.monoid, center.face_gens);
  if (!pc.prime) {
    out.rejection = pc.rejection;
    out.rejection_support = center.face_gens;
    return out;
  }
  LogRingDescriptor local;
  local.base = r.base;
  local.monoid = localize(r.monoid, *pc.prime);
  local.localized = true;
  local.global_monoid = r.global_monoid ? r.global_monoid : std::optional<AffineMonoid>(r.monoid);
  local.center_face = pc.prime->face;
  local.base_prime = center.base_prime;
  out.ring = std::move(local);
  return out;
}

LocalizeOutcome localize_at_polynomial_prime(const LogRingDescriptor& r,
                                             const std::vector<Polynomial>& prime_gens,
                                             std::size_t budget) {
  LocalizeOutcome out;
  if (!(r.base.kind == RingKind::Rationals || r.base.kind == RingKind::PrimeField)) {
    out.error = "polynomial centers need a coefficient field, not " + r.base.name();
    return out;
  }
  if (r.localized) {
    out.error = "polynomial centers apply to the global algebra";
    return out;
  }
  ContractionResult cr = contract_prime_to_monoid(r.base, prime_gens, r.monoid, budget);
  if (cr.budget_exceeded) {
    out.budget_exceeded = true;
    return out;
  }
  if (!cr.proper) {
    out.error = "the stated ideal contains a unit";
    return out;
  }
  if (!cr.prime) {
    out.rejection = cr.rejection;
    out.rejection_support = cr.rejection_support;
    return out;
  }
  LogRingDescriptor local;
  local.base = r.base;
  local.monoid = localize(r.monoid, *cr.prime);
  local.localized = true;
  local.global_monoid = r.monoid;
  local.center_face = cr.prime->face;
  local.base_prime = BasePrimeSpec{};
  local.poly_prime = prime_gens;
  out.ring = std::move(local);
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unsupported:
      return "unsupported";
  }
  return "unsupported";
}

MonoidPrime log_structure_prime(const AffineMonoid& q) {
  FaceCheck fc = face_from_support(q, q.unit_gen_indices);
  assert(fc.face);  // the invertible generators always span the minimal face
  return MonoidPrime{*fc.face};
}

Decision is_local_log(const LogRingDescriptor& r) {
  Decision out;
  out.certificate.subject = "locality of the " + r.name();
  // a local log ring also needs the structure map to pull units back to
  // exactly the monoid units, checked generator-wise
  auto preimage_step = [&](std::size_t after) {
    Json d = Json::object({{"monoid", monoid_json(r.monoid)},
                           {"unit_indices", index_array(r.monoid.unit_gen_indices)}});
    push_step(out.certificate,
              mk_step("unit-preimage",
                      "a generator monomial is invertible exactly when the generator "
                      "is a monoid unit",
                      "structural", d, {after}));
  };
  if (r.localized) {
    Json d = Json::object({{"localized", true}});
    std::size_t loc = push_step(
        out.certificate,
        mk_step("locality", "a localized algebra is local", "structural", d));
    preimage_step(loc);
    out.verdict = Verdict::Yes;
    out.note = "localized, hence local";
  } else if (r.base.is_local() && r.monoid.is_trivial()) {
    Json d = Json::object({{"localized", false},
                           {"ring", json_ring(r.base)},
                           {"monoid", monoid_json(r.monoid)}});
    std::size_t loc = push_step(
        out.certificate,
        mk_step("locality",
                "the monoid is trivial and " + r.base.name() + " is local",
                "structural", d));
    preimage_step(loc);
    out.verdict = Verdict::Yes;
    out.note = "the algebra equals its local base";
  } else if (!r.base.is_local()) {
    push_step(out.certificate,
              mk_step("reasoning",
                      r.base.name() + " has more than one maximal ideal, so the algebra does too",
                      "structural", Json::object()));
    out.verdict = Verdict::No;
    out.note = "the base ring is not local";
  } else {
    push_step(out.certificate,
              mk_step("reasoning",
                      "a nontrivial monoid gives the algebra maximal ideals away from the "
                      "monomial one, for instance by sending a non-unit monomial to 1",
                      "structural", Json::object()));
    out.verdict = Verdict::No;
    out.note = "the monoid is not trivial";
  }
  out.certificate.verdict = verdict_name(out.verdict);
  return out;
}

Decision is_very_solid(const LogRingDescriptor& r, [[maybe_unused]] bool use_oracle,
                       [[maybe_unused]] std::size_t budget) {
  Decision out;
  out.certificate.subject = "very solidity of the " + r.name();
  std::size_t frame = push_step(
      out.certificate,
      mk_step("reasoning",
              "monomial primes correspond to faces; each one is checked for prime "
              "extension, face quotient and monomial contraction",
              "structural", Json::object()));

  EffectiveBase eb = effective_base(r);
  if (!eb.domain) {
    assert(eb.descriptor);
    auto pair = ring_zero_divisor_pair(*eb.descriptor);
    assert(pair);
    Json zd = Json::object({{"ring", json_ring(*eb.descriptor)},
                            {"a", json_scalar(*eb.descriptor, pair->first)},
                            {"b", json_scalar(*eb.descriptor, pair->second)}});
    std::size_t zstep = push_step(
        out.certificate,
        mk_step("zero-divisor",
                "nonzero constants with zero product in " + eb.description, "structural",
                zd, {frame}));
    push_step(out.certificate,
              mk_step("reasoning",
                      "the constants embed into the quotient modulo any monomial prime, "
                      "so no extended monomial prime is prime",
                      "structural", Json::object(), {frame, zstep}));
    out.verdict = Verdict::No;
    AlgebraElement wa = alg_monomial(*eb.descriptor, Vec(r.monoid.ambient, 0), pair->first);
    AlgebraElement wb = alg_monomial(*eb.descriptor, Vec(r.monoid.ambient, 0), pair->second);
    out.note = "zero divisors " + alg_to_string(*eb.descriptor, wa) + " and " +
               alg_to_string(*eb.descriptor, wb) + " survive every monomial quotient";
    out.certificate.verdict = verdict_name(out.verdict);
    return out;
  }

  std::size_t domain_step;
  if (eb.descriptor) {
    Json rd = Json::object(
        {{"ring", json_ring(*eb.descriptor)}, {"flag", "domain"}, {"value", true}});
    domain_step = push_step(
        out.certificate,
        mk_step("ring-flag", eb.description + " is a domain", "structural", rd, {frame}));
  } else {
    domain_step = push_step(
        out.certificate, mk_step("reasoning", eb.description + " is a domain", "structural",
                                 Json::object(), {frame}));
  }

  std::vector<Face> faces = enumerate_faces(r.monoid);
  const BaseRingDescriptor& sample_ring =
      eb.descriptor ? *eb.descriptor : ring_rationals();
  for (const Face& f : faces) {
    Json qd = Json::object({{"monoid", monoid_json(r.monoid)},
                            {"face_indices", index_array(f.gen_indices)},
                            {"functional", json_vec(f.functional)}});
    std::size_t qstep = push_step(
        out.certificate,
        mk_step("monomial-prime-quotient",
                "the quotient at the face " + face_label(f) +
                    " is the face algebra over the base, a domain, so the prime extends "
                    "to a prime",
                "structural", qd, {domain_step}));
    Json cd = Json::object({{"monoid", monoid_json(r.monoid)},
                            {"face_indices", index_array(f.gen_indices)},
                            {"functional", json_vec(f.functional)},
                            {"samples", contraction_samples(r.monoid, f)}});
    push_step(out.certificate,
              mk_step("monomial-contraction",
                      "monomials fall into the prime at the face " + face_label(f) +
                          " exactly when the face functional is positive",
                      "structural", cd, {qstep}));
    assert_quotient_multiplicative(sample_ring, r.monoid, MonoidPrime{f});
  }
  push_step(out.certificate,
            mk_step("reasoning",
                    "every monomial prime extends to a prime with monomial contraction",
                    "structural", Json::object(), {domain_step}));
  out.verdict = Verdict::Yes;
  out.note = "all " + std::to_string(faces.size()) + " monomial primes stay prime";
  out.certificate.verdict = verdict_name(out.verdict);
  return out;
}

DimensionReport dimension_report(const LogRingDescriptor& r, bool use_oracle,
                                 std::size_t budget) {
  DimensionReport rep;
  Certificate scratch;  // steps collected here, moved out at the end

  std::size_t dim_monoid = primes(r.monoid).dim;
  rep.dim_monoid = Int(static_cast<long>(dim_monoid));
  Json dim_data =
      Json::object({{"monoid", monoid_json(r.monoid)}, {"dim", dim_monoid}});
  std::size_t dim_step = push_step(
      scratch, mk_step("dimension",
                       "the acting monoid has dimension " + std::to_string(dim_monoid),
                       "brute-force", dim_data));

  if (!r.localized) {
    long base_dim = static_cast<long>(r.base.krull_dim());
    long rank_gp = static_cast<long>(r.monoid.gp_rank());
    long rank_units = static_cast<long>(r.monoid.units_basis.rows());
    rep.dim_total = Int(base_dim + rank_gp);
    rep.dim_quotient = Int(base_dim + rank_units);
    std::size_t formula = push_step(
        scratch,
        mk_step("reasoning",
                "the algebra has dimension dim(base) + rank of the monoid lattice; "
                "modulo the log ideal a Laurent algebra of the unit rank remains",
                "structural", Json::object(), {dim_step}));
    Json eq = Json::object({{"total", json_int(rep.dim_total)},
                            {"height", json_int(rep.dim_quotient)},
                            {"fiber_dim", json_int(rep.dim_monoid)}});
    push_step(scratch, mk_step("dim-equation",
                               "dimensions add up: " + rep.dim_total.get_str() + " = " +
                                   rep.dim_quotient.get_str() + " + " +
                                   rep.dim_monoid.get_str(),
                               "structural", eq, {dim_step, formula}));
    rep.balanced = rep.dim_total == rep.dim_quotient + rep.dim_monoid;
    assert(rep.balanced);
    rep.steps = std::move(scratch.steps);
    return rep;
  }

  assert(r.base_prime && r.center_face && r.global_monoid);
  const AffineMonoid& global = *r.global_monoid;

  if (!r.poly_prime) {
    long ht = static_cast<long>(base_prime_height(r.base, *r.base_prime));
    rep.dim_quotient = Int(ht);
    rep.dim_total = Int(ht) + rep.dim_monoid;
    Json bp = Json::object({{"ring", json_ring(r.base)},
                            {"prime", json_base_prime(*r.base_prime)},
                            {"height", static_cast<std::size_t>(ht)},
                            {"residue", json_ring(residue_field(r.base, *r.base_prime))}});
    std::size_t bstep = push_step(
        scratch, mk_step("base-prime",
                         "the base part of the center is " +
                             base_prime_name(r.base, *r.base_prime) + " of height " +
                             std::to_string(ht),
                         "structural", bp));
    std::size_t formula = push_step(
        scratch,
        mk_step("reasoning",
                "localized at the center, the algebra has dimension ht(base prime) + "
                "dim(localized monoid); modulo the log ideal only the base contributes",
                "structural", Json::object(), {dim_step, bstep}));
    Json eq = Json::object({{"total", json_int(rep.dim_total)},
                            {"height", json_int(rep.dim_quotient)},
                            {"fiber_dim", json_int(rep.dim_monoid)}});
    push_step(scratch, mk_step("dim-equation",
                               "dimensions add up: " + rep.dim_total.get_str() + " = " +
                                   rep.dim_quotient.get_str() + " + " +
                                   rep.dim_monoid.get_str(),
                               "structural", eq, {dim_step, bstep, formula}));
    rep.balanced = true;

    if (use_oracle) {
      BaseRingDescriptor kappa = residue_field(r.base, *r.base_prime);
      ToricIdealResult toric = toric_ideal(kappa, global, budget);
      if (toric.budget_exceeded) {
        rep.budget_exceeded = true;
        rep.steps = std::move(scratch.steps);
        return rep;
      }
      PolyContext ctx = make_poly_context(kappa, global.gens.rows());
      long d1 = krull_dim_quotient(ctx, toric.basis);

      std::vector<Polynomial> with_prime = toric.basis;
      std::vector<bool> in_face(global.gens.rows(), false);
      for (std::size_t i : r.center_face->gen_indices) in_face[i] = true;
      for (std::size_t i = 0; i < global.gens.rows(); ++i)
        if (!in_face[i]) with_prime.push_back(poly_variable(ctx, i));
      GroebnerResult gb2 = buchberger(ctx, with_prime, budget);
      if (gb2.budget_exceeded) {
        rep.budget_exceeded = true;
        rep.steps = std::move(scratch.steps);
        return rep;
      }
      long d2 = krull_dim_quotient(ctx, gb2.basis);

      Json ideal1 = Json::array();
      for (const Polynomial& g : toric.basis) ideal1.push_back(json_polynomial(kappa, g));
      Json o1 = Json::object({{"field", json_ring(kappa)},
                              {"nvars", global.gens.rows()},
                              {"ideal", ideal1},
                              {"dim", json_int(Int(d1))}});
      std::size_t s1 = push_step(
          scratch, mk_step("oracle-dim",
                           "over the residue field the algebra has dimension " +
                               std::to_string(d1),
                           "oracle", o1));
      Json ideal2 = Json::array();
      for (const Polynomial& g : with_prime) ideal2.push_back(json_polynomial(kappa, g));
      Json o2 = Json::object({{"field", json_ring(kappa)},
                              {"nvars", global.gens.rows()},
                              {"ideal", ideal2},
                              {"dim", json_int(Int(d2))}});
      std::size_t s2 = push_step(
          scratch, mk_step("oracle-dim",
                           "adding the center's monomials cuts the dimension to " +
                               std::to_string(d2),
                           "oracle", o2));
      Json eq2 = Json::object({{"total", json_int(Int(d1))},
                               {"height", json_int(Int(d2))},
                               {"fiber_dim", json_int(rep.dim_monoid)}});
      push_step(scratch,
                mk_step("dim-equation",
                        "the recomputed drop matches the localized monoid dimension",
                        "oracle", eq2, {s1, s2, dim_step}));
      rep.balanced = Int(d1) == Int(d2) + rep.dim_monoid;
      assert(rep.balanced);
    }
    rep.steps = std::move(scratch.steps);
    return rep;
  }

  // Polynomial center over a field: all four dimensions come from the
  // oracle, and the balance is a genuine check rather than a formula.
  BaseRingDescriptor field = r.base;
  ToricIdealResult toric = toric_ideal(field, global, budget);
  if (toric.budget_exceeded) {
    rep.budget_exceeded = true;
    rep.steps = std::move(scratch.steps);
    return rep;
  }
  PolyContext ctx = make_poly_context(field, global.gens.rows());
  auto dim_of = [&](std::vector<Polynomial> gens) -> std::optional<long> {
    GroebnerResult gb = buchberger(ctx, std::move(gens), budget);
    if (gb.budget_exceeded) return std::nullopt;
    return krull_dim_quotient(ctx, gb.basis);
  };
  auto emit = [&](const std::vector<Polynomial>& gens, long value,
                  const std::string& claim) {
    Json ideal = Json::array();
    for (const Polynomial& g : gens) ideal.push_back(json_polynomial(field, g));
    Json d = Json::object({{"field", json_ring(field)},
                           {"nvars", global.gens.rows()},
                           {"ideal", ideal},
                           {"dim", json_int(Int(value))}});
    return push_step(scratch, mk_step("oracle-dim", claim, "oracle", d));
  };

  std::vector<Polynomial> ideal_q = toric.basis;
  std::vector<Polynomial> ideal_qp = toric.basis;
  for (const Polynomial& g : *r.poly_prime) ideal_qp.push_back(g);
  std::vector<Polynomial> ideal_qm = toric.basis;
  std::vector<bool> in_face(global.gens.rows(), false);
  for (std::size_t i : r.center_face->gen_indices) in_face[i] = true;
  for (std::size_t i = 0; i < global.gens.rows(); ++i)
    if (!in_face[i]) ideal_qm.push_back(poly_variable(ctx, i));
  std::vector<Polynomial> ideal_qmp = ideal_qm;
  for (const Polynomial& g : *r.poly_prime) ideal_qmp.push_back(g);

  std::optional<long> d1 = dim_of(ideal_q);
  std::optional<long> d1p = dim_of(ideal_qp);
  std::optional<long> d2 = dim_of(ideal_qm);
  std::optional<long> d2p = dim_of(ideal_qmp);
  if (!d1 || !d1p || !d2 || !d2p) {
    rep.budget_exceeded = true;
    rep.steps = std::move(scratch.steps);
    return rep;
  }
  std::size_t s1 = emit(ideal_q, *d1, "dimension of the whole algebra");
  std::size_t s1p = emit(ideal_qp, *d1p, "dimension modulo the center");
  std::size_t s2 = emit(ideal_qm, *d2, "dimension modulo the log ideal");
  std::size_t s2p = emit(ideal_qmp, *d2p, "dimension modulo the log ideal and the center");
  rep.dim_total = Int(*d1 - *d1p);
  rep.dim_quotient = Int(*d2 - *d2p);
  rep.balanced = rep.dim_total == rep.dim_quotient + rep.dim_monoid;
  Json eq = Json::object({{"total", json_int(rep.dim_total)},
                          {"height", json_int(rep.dim_quotient)},
                          {"fiber_dim", json_int(rep.dim_monoid)}});
  if (rep.balanced) {
    push_step(scratch, mk_step("dim-equation",
                               "localized dimensions add up: " + rep.dim_total.get_str() +
                                   " = " + rep.dim_quotient.get_str() + " + " +
                                   rep.dim_monoid.get_str(),
                               "oracle", eq, {s1, s1p, s2, s2p, dim_step}));
  }
  rep.steps = std::move(scratch.steps);
  return rep;
}

Decision is_log_regular(const LogRingDescriptor& r, bool use_oracle, std::size_t budget) {
  Decision out;
  Certificate& cert = out.certificate;
  cert.subject = "log regularity of the " + r.name();

  // the property is asked of local data
  if (!r.localized && !(r.base.is_local() && r.monoid.is_trivial())) {
    push_step(cert, mk_step("reasoning",
                            "the algebra is not local, so the question needs a "
                            "localization first",
                            "structural", Json::object()));
    out.verdict = Verdict::Unsupported;
    out.note = "not a local ring; localize at a center first";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }
  Json loc_data;
  if (r.localized) {
    loc_data = Json::object({{"localized", true}});
  } else {
    loc_data = Json::object({{"localized", false},
                             {"ring", json_ring(r.base)},
                             {"monoid", monoid_json(r.monoid)}});
  }
  std::size_t loc_step =
      push_step(cert, mk_step("locality", "the ring is local", "structural", loc_data));

  if (r.poly_prime && !use_oracle) {
    push_step(cert, mk_step("reasoning",
                            "a polynomial center leaves no structural route to the "
                            "dimensions; rerun with the oracle enabled",
                            "structural", Json::object(), {loc_step}));
    out.verdict = Verdict::Unsupported;
    out.note = "polynomial centers need the oracle";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }

  SaturationResult sat = root_closed_and_saturate(r.monoid);
  if (!sat.root_closed) {
    push_saturation_witness(cert, r.monoid, sat);
    out.verdict = Verdict::Unsupported;
    out.note = "the acting monoid is not root closed";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }
  std::size_t rc_step = push_step(
      cert, mk_step("root-closed", "the acting monoid is root closed", "brute-force",
                    Json::object({{"monoid", monoid_json(r.monoid)}}), {loc_step}));

  ReducedMonoidResult red = reduced_monoid(r.monoid);
  if (!red.ok) {
    std::string tors;
    for (const Int& t : red.torsion) tors += (tors.empty() ? "" : ", ") + t.get_str();
    push_step(cert, mk_step("reasoning",
                            "the units quotient has torsion (" + tors +
                                "), outside the supported hypotheses",
                            "structural", Json::object(), {rc_step}));
    out.verdict = Verdict::Unsupported;
    out.note = "the units quotient has torsion";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }

  ConditionOne c1 = check_condition_one(cert, r);
  if (!c1.regular) {
    push_step(cert, mk_step("reasoning",
                            "the quotient modulo the log ideal is a Laurent algebra over "
                            "a non-regular base, so it is not regular local",
                            "structural", Json::object(), {c1.last_step}));
    out.verdict = Verdict::No;
    out.note = "the quotient modulo the log ideal is not regular";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }
  std::size_t cond1 = push_step(
      cert, mk_step("reasoning",
                    "a Laurent algebra over a regular local base, localized, is regular "
                    "local: the first condition holds",
                    "structural", Json::object(), {c1.last_step}));

  DimensionReport rep = dimension_report(r, use_oracle, budget);
  if (rep.budget_exceeded) {
    out.budget_exceeded = true;
    out.verdict = Verdict::Unsupported;
    out.note = "the oracle ran out of budget while checking dimensions";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }
  std::size_t base_idx = cert.steps.size();
  for (CertStep& s : rep.steps) {
    for (std::size_t& u : s.uses) u += base_idx;
    push_step(cert, std::move(s));
  }
  if (!rep.balanced) {
    push_step(cert, mk_step("reasoning",
                            "the dimension of the ring is not the dimension of the "
                            "quotient plus the monoid dimension: " +
                                rep.dim_total.get_str() + " differs from " +
                                rep.dim_quotient.get_str() + " + " +
                                rep.dim_monoid.get_str(),
                            "structural", Json::object(), {cond1}));
    out.verdict = Verdict::No;
    out.note = "the dimension equation fails";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }
  push_step(cert, mk_step("reasoning",
                          "the quotient modulo the log ideal is regular local and the "
                          "dimensions add up: the ring is log regular",
                          "structural", Json::object(), {cond1, cert.steps.size() - 1}));
  out.verdict = Verdict::Yes;
  out.note = "regular quotient and balanced dimensions";
  cert.verdict = verdict_name(out.verdict);
  return out;
}

Decision main_theorem_check(const LogRingDescriptor& r, const CenterSpec& center,
                            bool use_oracle, std::size_t budget) {
  Decision out;
  Certificate& cert = out.certificate;
  cert.subject =
      "log regularity of the localization of the " + r.name() + " at the stated center";

  if (r.localized) {
    out.verdict = Verdict::Unsupported;
    out.note = "expects the global algebra, not an already localized one";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }
  if (!valid_base_prime(r.base, center.base_prime)) {
    push_step(cert, mk_step("reasoning",
                            "the stated base part of the center is not a prime of " +
                                r.base.name(),
                            "structural", Json::object()));
    out.verdict = Verdict::Unsupported;
    out.note = "invalid base prime";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }

  // base hypotheses: a regular base localizes to a regular local domain
  if (!r.base.is_regular()) {
    Json rd = Json::object(
        {{"ring", json_ring(r.base)}, {"flag", "regular"}, {"value", false}});
    push_step(cert, mk_step("ring-flag", r.base.name() + " is not regular", "structural", rd));
    out.verdict = Verdict::Unsupported;
    out.note = "the base ring is not regular";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }
  Json reg_data =
      Json::object({{"ring", json_ring(r.base)}, {"flag", "regular"}, {"value", true}});
  std::size_t reg_step =
      push_step(cert, mk_step("ring-flag", r.base.name() + " is regular", "structural",
                              reg_data));
  Json bp_data = Json::object(
      {{"ring", json_ring(r.base)},
       {"prime", json_base_prime(center.base_prime)},
       {"height", base_prime_height(r.base, center.base_prime)},
       {"residue", json_ring(residue_field(r.base, center.base_prime))}});
  std::size_t bp_step = push_step(
      cert, mk_step("base-prime",
                    "the base part of the center is the prime " +
                        base_prime_name(r.base, center.base_prime),
                    "structural", bp_data));
  std::size_t base_local = push_step(
      cert, mk_step("reasoning",
                    "localizing the regular base at that prime gives a regular local "
                    "domain",
                    "structural", Json::object(), {reg_step, bp_step}));

  // monoid hypotheses on the global data
  SaturationResult sat = root_closed_and_saturate(r.monoid);
  if (!sat.root_closed) {
    push_saturation_witness(cert, r.monoid, sat);
    out.verdict = Verdict::Unsupported;
    out.note = "the monoid is not root closed";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }
  std::size_t rc_global = push_step(
      cert, mk_step("root-closed", "the monoid is root closed", "brute-force",
                    Json::object({{"monoid", monoid_json(r.monoid)}})));
  ReducedMonoidResult red = reduced_monoid(r.monoid);
  if (!red.ok) {
    std::string tors;
    for (const Int& t : red.torsion) tors += (tors.empty() ? "" : ", ") + t.get_str();
    push_step(cert, mk_step("reasoning",
                            "the units quotient has torsion (" + tors +
                                "), outside the supported hypotheses",
                            "structural", Json::object(), {rc_global}));
    out.verdict = Verdict::Unsupported;
    out.note = "the units quotient has torsion";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }

  // the monomial part of the center must be a face
  for (std::size_t i : center.face_gens)
    if (i >= r.monoid.gens.rows()) {
      push_step(cert, mk_step("reasoning",
                              "face generator index " + std::to_string(i) +
                                  " is out of range",
                              "structural", Json::object()));
      out.verdict = Verdict::Unsupported;
      out.note = "the stated center names a generator that does not exist";
      cert.verdict = verdict_name(out.verdict);
      return out;
    }
  PrimeCheck pc = prime_from_face_gens(r.monoid, center.face_gens);
  if (!pc.prime) {
    assert(pc.rejection);
    Json rej = Json::object({{"monoid", monoid_json(r.monoid)},
                             {"support_indices", index_array(center.face_gens)},
                             {"combination", json_vec(pc.rejection->combination)}});
    push_step(cert, mk_step("face-rejection",
                            "the stated generators span no face, so the center is not "
                            "a monomial prime",
                            "structural", rej));
    out.verdict = Verdict::Unsupported;
    out.note = "the stated center is not a monomial prime";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }
  const Face& face = pc.prime->face;
  Json fs = Json::object({{"monoid", monoid_json(r.monoid)},
                          {"face_indices", index_array(face.gen_indices)},
                          {"functional", json_vec(face.functional)}});
  std::size_t face_step = push_step(
      cert, mk_step("face-support",
                    "the monomial part of the center is the prime at the face " +
                        face_label(face),
                    "structural", fs));

  // localize and transfer the hypotheses
  LogRingDescriptor local;
  local.base = r.base;
  local.monoid = localize(r.monoid, *pc.prime);
  local.localized = true;
  local.global_monoid = r.monoid;
  local.center_face = face;
  local.base_prime = center.base_prime;

  SaturationResult sat2 = root_closed_and_saturate(local.monoid);
  if (!sat2.root_closed) {
    push_saturation_witness(cert, local.monoid, sat2);
    out.verdict = Verdict::Unsupported;
    out.note = "root closedness fails after localization";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }
  std::size_t rc_local = push_step(
      cert,
      mk_step("root-closed", "root closedness survives the localization", "brute-force",
              Json::object({{"monoid", monoid_json(local.monoid)}}), {rc_global, face_step}));

  std::size_t loc_step = push_step(
      cert, mk_step("locality", "the localized algebra is local", "structural",
                    Json::object({{"localized", true}}), {face_step, bp_step}));

  // first condition for the localized ring
  ConditionOne c1 = check_condition_one(cert, local);
  assert(c1.regular);  // the base is regular and so is every localization
  std::size_t cond1 = push_step(
      cert, mk_step("reasoning",
                    "the quotient modulo the log ideal is a localized Laurent algebra "
                    "over a regular local base, hence regular local",
                    "structural", Json::object(), {base_local, c1.last_step, loc_step}));

  // second condition: the regular local base is a domain, so every face
  // quotient is a domain and every monomial prime extends to a prime
  std::vector<Face> faces = enumerate_faces(local.monoid);
  std::vector<std::size_t> face_steps;
  for (const Face& f : faces) {
    Json qd = Json::object({{"monoid", monoid_json(local.monoid)},
                            {"face_indices", index_array(f.gen_indices)},
                            {"functional", json_vec(f.functional)}});
    face_steps.push_back(push_step(
        cert, mk_step("monomial-prime-quotient",
                      "the quotient at the face " + face_label(f) +
                          " is a face algebra over a domain, so the prime extends to a "
                          "prime",
                      "structural", qd, {base_local})));
  }
  std::vector<std::size_t> solid_uses = {base_local, rc_local};
  solid_uses.insert(solid_uses.end(), face_steps.begin(), face_steps.end());
  std::size_t solid = push_step(
      cert, mk_step("reasoning",
                    "every monomial prime of the localized algebra stays prime, which "
                    "for a root closed monoid is equivalent to the dimension equation",
                    "structural", Json::object(), solid_uses));

  DimensionReport rep = dimension_report(local, use_oracle, budget);
  if (rep.budget_exceeded) {
    out.budget_exceeded = true;
    out.verdict = Verdict::Unsupported;
    out.note = "the oracle ran out of budget while checking dimensions";
    cert.verdict = verdict_name(out.verdict);
    return out;
  }
  std::size_t base_idx = cert.steps.size();
  for (CertStep& s : rep.steps) {
    for (std::size_t& u : s.uses) u += base_idx;
    push_step(cert, std::move(s));
  }
  assert(rep.balanced);

  push_step(cert, mk_step("reasoning",
                          "both conditions hold for the localized algebra: it is log "
                          "regular",
                          "structural", Json::object(), {cond1, solid, cert.steps.size() - 1}));
  out.verdict = Verdict::Yes;
  out.note = "log regular at the stated center";
  cert.verdict = verdict_name(out.verdict);
  return out;
}

}  // namespace affmon
