#include "affmon/log_ring.hpp"

#include <doctest.h>

#include <algorithm>

#include "affmon/faces.hpp"

using namespace affmon;

namespace {

IntegerMatrix rows_of(std::vector<Vec> rows, std::size_t cols) {
  IntegerMatrix m(0, cols);
  for (auto& r : rows) m.append_row(r);
  return m;
}

// quadric cone: the singular toric surface, root closed, 4 faces
AffineMonoid quadric() { return make_affine_monoid(rows_of({{2, 0}, {1, 1}, {0, 2}}, 2), 2); }

// numerical monoid <2,3>: not root closed (1 is missing)
AffineMonoid two_three() { return make_affine_monoid(rows_of({{2}, {3}}, 1), 1); }

// free monoid N^2
AffineMonoid free2() { return make_affine_monoid(rows_of({{1, 0}, {0, 1}}, 2), 2); }

// cone over the twisted cubic: its toric ideal needs genuine work
AffineMonoid twisted() {
  return make_affine_monoid(rows_of({{1, 0}, {1, 1}, {1, 2}, {1, 3}}, 2), 2);
}

AffineMonoid trivial_monoid() { return make_affine_monoid(rows_of({}, 0), 0); }

// invertible generator (1,1) with inverse (-1,-1); pointed direction (1,-1)
AffineMonoid unitful() {
  return make_affine_monoid(rows_of({{1, 1}, {1, -1}, {-1, -1}}, 2), 2);
}

void require_verified(const Decision& d) {
  VerifyResult v = verify_certificate(d.certificate, std::size_t{1} << 22);
  INFO("certificate: ", certificate_to_json(d.certificate).dump());
  INFO("failure: ", v.message);
  CHECK(v.ok);
  CHECK(d.certificate.verdict == verdict_name(d.verdict));
}

std::size_t count_rule(const Certificate& c, const std::string& rule) {
  return std::count_if(c.steps.begin(), c.steps.end(),
                       [&](const CertStep& s) { return s.rule == rule; });
}

Polynomial poly_of(const PolyContext& ctx, std::vector<std::pair<Vec, long>> terms) {
  std::vector<Term> ts;
  for (auto& [e, c] : terms) ts.push_back({e, ring_from_int(ctx.field, Int(c))});
  return poly_from_terms(ctx, ts);
}

}  // namespace

TEST_CASE("base localization stays inside the descriptor family") {
  BasePrimeSpec zero;
  BasePrimeSpec p2{2, 0};
  BasePrimeSpec p3{3, 0};

  CHECK(localize_base(ring_rationals(), zero) == ring_rationals());
  CHECK(localize_base(ring_prime_field(5), zero) == ring_prime_field(5));
  CHECK(localize_base(ring_integers(), zero) == ring_rationals());
  // the integers at a nonzero prime leave the family
  CHECK(!localize_base(ring_integers(), BasePrimeSpec{5, 0}));

  CHECK(localize_base(ring_integers_mod(6), p2) == ring_prime_field(2));
  CHECK(localize_base(ring_integers_mod(6), p3) == ring_prime_field(3));
  CHECK(localize_base(ring_integers_mod(12), p2) == ring_integers_mod(4));
  CHECK(localize_base(ring_integers_mod(12), p3) == ring_prime_field(3));
  CHECK(localize_base(ring_integers_mod(4), p2) == ring_integers_mod(4));

  BasePrimeSpec factor1{0, 1};
  CHECK(localize_base(ring_product_of_fields(2), factor1) == ring_rationals());

  // mod 12 at (2) keeps nilpotents: localization does not force a domain
  CHECK(!localize_base(ring_integers_mod(12), p2)->is_domain());
  CHECK(localize_base(ring_integers_mod(6), p2)->is_domain());
}

TEST_CASE("the log structure ideal is the complement of the units") {
  AffineMonoid q = unitful();
  MonoidPrime p = log_structure_prime(q);
  CHECK(!in_prime(p, q.gens.row(0)));   // (1,1) invertible
  CHECK(!in_prime(p, q.gens.row(2)));   // its inverse
  CHECK(in_prime(p, q.gens.row(1)));    // (1,-1) is not a unit

  AffineMonoid c = quadric();
  MonoidPrime pc = log_structure_prime(c);
  for (std::size_t i = 0; i < c.gens.rows(); ++i) CHECK(in_prime(pc, c.gens.row(i)));
  CHECK(!in_prime(pc, {0, 0}));
}

TEST_CASE("locality of the algebra") {
  SUBCASE("localized rings are local") {
    LocalizeOutcome lo =
        localize_log_ring(make_log_ring(ring_rationals(), quadric()), CenterSpec{{}, {}});
    REQUIRE(lo.ring);
    Decision d = is_local_log(*lo.ring);
    CHECK(d.verdict == Verdict::Yes);
    require_verified(d);
  }
  SUBCASE("a local base with a trivial monoid is local") {
    Decision d = is_local_log(make_log_ring(ring_integers_mod(4), trivial_monoid()));
    CHECK(d.verdict == Verdict::Yes);
    require_verified(d);
  }
  SUBCASE("a non-local base is detected") {
    Decision d = is_local_log(make_log_ring(ring_integers(), trivial_monoid()));
    CHECK(d.verdict == Verdict::No);
    require_verified(d);
  }
  SUBCASE("a nontrivial monoid spoils locality") {
    Decision d = is_local_log(make_log_ring(ring_rationals(), quadric()));
    CHECK(d.verdict == Verdict::No);
    require_verified(d);
  }
}

TEST_CASE("very solidity over domains") {
  for (BaseRingDescriptor base :
       {ring_rationals(), ring_integers(), ring_prime_field(7)}) {
    Decision d = is_very_solid(make_log_ring(base, quadric()));
    INFO("base: ", base.name());
    CHECK(d.verdict == Verdict::Yes);
    require_verified(d);
    // one prime-extension and one contraction step per face
    std::size_t nfaces = enumerate_faces(quadric()).size();
    CHECK(nfaces == 4);
    CHECK(count_rule(d.certificate, "monomial-prime-quotient") == nfaces);
    CHECK(count_rule(d.certificate, "monomial-contraction") == nfaces);
  }
}

TEST_CASE("very solidity fails over rings with zero divisors") {
  SUBCASE("integers mod 6") {
    Decision d = is_very_solid(make_log_ring(ring_integers_mod(6), quadric()));
    CHECK(d.verdict == Verdict::No);
    CHECK(count_rule(d.certificate, "zero-divisor") == 1);
    require_verified(d);
  }
  SUBCASE("a product of fields") {
    Decision d = is_very_solid(make_log_ring(ring_product_of_fields(2), free2()));
    CHECK(d.verdict == Verdict::No);
    CHECK(count_rule(d.certificate, "zero-divisor") == 1);
    require_verified(d);
  }
}

TEST_CASE("localizing the base can restore very solidity") {
  // globally Z/6 has zero divisors; at the prime (2) the base becomes F_2
  LogRingDescriptor global = make_log_ring(ring_integers_mod(6), quadric());
  Decision before = is_very_solid(global);
  CHECK(before.verdict == Verdict::No);

  LocalizeOutcome lo = localize_log_ring(global, CenterSpec{{}, {2, 0}});
  REQUIRE(lo.ring);
  Decision after = is_very_solid(*lo.ring);
  CHECK(after.verdict == Verdict::Yes);
  require_verified(after);

  // mod 12 the localization at (2) keeps nilpotents and stays non-solid
  LocalizeOutcome lo12 =
      localize_log_ring(make_log_ring(ring_integers_mod(12), quadric()), CenterSpec{{}, {2, 0}});
  REQUIRE(lo12.ring);
  Decision still = is_very_solid(*lo12.ring);
  CHECK(still.verdict == Verdict::No);
  require_verified(still);
}

TEST_CASE("localization outcomes reject bad centers") {
  LogRingDescriptor r = make_log_ring(ring_rationals(), quadric());
  SUBCASE("an invalid base prime is an error") {
    LocalizeOutcome lo = localize_log_ring(r, CenterSpec{{}, {4, 0}});
    CHECK(!lo.ring);
    CHECK(!lo.error.empty());
  }
  SUBCASE("an out-of-range generator is an error") {
    LocalizeOutcome lo = localize_log_ring(r, CenterSpec{{7}, {}});
    CHECK(!lo.ring);
    CHECK(!lo.error.empty());
  }
  SUBCASE("a non-face support is rejected with a witness") {
    LocalizeOutcome lo = localize_log_ring(r, CenterSpec{{0, 2}, {}});
    CHECK(!lo.ring);
    REQUIRE(lo.rejection);
    // the witness is a relation trapping generator 1 between 0 and 2
    Vec c = lo.rejection->combination;
    Int sum0 = 0, sum1 = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      sum0 += c[i] * quadric().gens.row(i)[0];
      sum1 += c[i] * quadric().gens.row(i)[1];
    }
    CHECK(sum0 == 0);
    CHECK(sum1 == 0);
    CHECK(c[1] > 0);
  }
  SUBCASE("localizing at a genuine face works") {
    LocalizeOutcome lo = localize_log_ring(r, CenterSpec{{0}, {}});
    REQUIRE(lo.ring);
    CHECK(lo.ring->localized);
    CHECK(lo.ring->monoid.units_basis.rows() == 1);
    REQUIRE(lo.ring->center_face);
    CHECK(lo.ring->center_face->gen_indices == std::vector<std::size_t>{0});
  }
}

TEST_CASE("log regularity needs a local ring") {
  Decision d = is_log_regular(make_log_ring(ring_rationals(), quadric()));
  CHECK(d.verdict == Verdict::Unsupported);
  require_verified(d);
}

TEST_CASE("the quadric cone is log regular at its singular point") {
  LocalizeOutcome lo =
      localize_log_ring(make_log_ring(ring_rationals(), quadric()), CenterSpec{{}, {}});
  REQUIRE(lo.ring);
  Decision d = is_log_regular(*lo.ring);
  CHECK(d.verdict == Verdict::Yes);
  require_verified(d);
  CHECK(count_rule(d.certificate, "laurent-recognition") == 1);
  CHECK(count_rule(d.certificate, "dim-equation") >= 1);

  // with the oracle the dimensions are recomputed from a presentation
  Decision with_oracle = is_log_regular(*lo.ring, true);
  CHECK(with_oracle.verdict == Verdict::Yes);
  CHECK(count_rule(with_oracle.certificate, "oracle-dim") == 2);
  require_verified(with_oracle);
}

TEST_CASE("log regularity at a facet of the quadric") {
  LocalizeOutcome lo =
      localize_log_ring(make_log_ring(ring_rationals(), quadric()), CenterSpec{{0}, {}});
  REQUIRE(lo.ring);
  Decision d = is_log_regular(*lo.ring, true);
  CHECK(d.verdict == Verdict::Yes);
  require_verified(d);
}

TEST_CASE("a non root closed monoid is outside the hypotheses") {
  LocalizeOutcome lo =
      localize_log_ring(make_log_ring(ring_rationals(), two_three()), CenterSpec{{}, {}});
  REQUIRE(lo.ring);
  Decision d = is_log_regular(*lo.ring);
  CHECK(d.verdict == Verdict::Unsupported);
  CHECK(count_rule(d.certificate, "saturation-witness") == 1);
  require_verified(d);
}

TEST_CASE("a non-regular local base ring is not log regular") {
  Decision d = is_log_regular(make_log_ring(ring_integers_mod(4), trivial_monoid()));
  CHECK(d.verdict == Verdict::No);
  require_verified(d);
  // the certificate records the failed flag as a checkable fact
  bool saw_flag = false;
  for (const CertStep& s : d.certificate.steps)
    if (s.rule == "ring-flag" && s.data["value"] == Json(false)) saw_flag = true;
  CHECK(saw_flag);
}

TEST_CASE("a field with a trivial monoid is log regular") {
  Decision d = is_log_regular(make_log_ring(ring_prime_field(5), trivial_monoid()));
  CHECK(d.verdict == Verdict::Yes);
  require_verified(d);
}

TEST_CASE("full pipeline on global data") {
  SUBCASE("quadric over the rationals at the origin") {
    Decision d = main_theorem_check(make_log_ring(ring_rationals(), quadric()),
                                    CenterSpec{{}, {}});
    CHECK(d.verdict == Verdict::Yes);
    require_verified(d);
  }
  SUBCASE("quadric over the integers at (2)") {
    Decision d = main_theorem_check(make_log_ring(ring_integers(), quadric()),
                                    CenterSpec{{}, {2, 0}});
    CHECK(d.verdict == Verdict::Yes);
    require_verified(d);
    CHECK(count_rule(d.certificate, "base-prime") >= 1);
  }
  SUBCASE("quadric over the integers at the zero prime") {
    Decision d = main_theorem_check(make_log_ring(ring_integers(), quadric()),
                                    CenterSpec{{}, {}});
    CHECK(d.verdict == Verdict::Yes);
    require_verified(d);
  }
  SUBCASE("at a facet instead of the singular point") {
    Decision d = main_theorem_check(make_log_ring(ring_rationals(), quadric()),
                                    CenterSpec{{0}, {}});
    CHECK(d.verdict == Verdict::Yes);
    require_verified(d);
  }
  SUBCASE("a regular non-domain base is allowed: mod 6 at (2)") {
    Decision d = main_theorem_check(make_log_ring(ring_integers_mod(6), quadric()),
                                    CenterSpec{{}, {2, 0}});
    CHECK(d.verdict == Verdict::Yes);
    require_verified(d);
  }
  SUBCASE("a regular product base is allowed even though it is not a domain") {
    // globally not very solid, yet log regular at every monomial center
    LogRingDescriptor r = make_log_ring(ring_product_of_fields(2), free2());
    CHECK(is_very_solid(r).verdict == Verdict::No);
    Decision d = main_theorem_check(r, CenterSpec{{}, {0, 1}});
    CHECK(d.verdict == Verdict::Yes);
    require_verified(d);
  }
  SUBCASE("a non-regular base is unsupported") {
    Decision d = main_theorem_check(make_log_ring(ring_integers_mod(4), quadric()),
                                    CenterSpec{{}, {2, 0}});
    CHECK(d.verdict == Verdict::Unsupported);
    require_verified(d);
  }
  SUBCASE("a non root closed monoid is unsupported with a witness") {
    Decision d = main_theorem_check(make_log_ring(ring_rationals(), two_three()),
                                    CenterSpec{{}, {}});
    CHECK(d.verdict == Verdict::Unsupported);
    CHECK(count_rule(d.certificate, "saturation-witness") == 1);
    require_verified(d);
  }
  SUBCASE("a non-face center is unsupported with a rejection witness") {
    Decision d = main_theorem_check(make_log_ring(ring_rationals(), quadric()),
                                    CenterSpec{{0, 2}, {}});
    CHECK(d.verdict == Verdict::Unsupported);
    CHECK(count_rule(d.certificate, "face-rejection") == 1);
    require_verified(d);
  }
  SUBCASE("an invalid base prime is unsupported") {
    Decision d = main_theorem_check(make_log_ring(ring_integers(), quadric()),
                                    CenterSpec{{}, {10, 0}});
    CHECK(d.verdict == Verdict::Unsupported);
    require_verified(d);
  }
  SUBCASE("the oracle cross-checks the dimension drop") {
    Decision d = main_theorem_check(make_log_ring(ring_rationals(), quadric()),
                                    CenterSpec{{}, {}}, true);
    CHECK(d.verdict == Verdict::Yes);
    CHECK(count_rule(d.certificate, "oracle-dim") == 2);
    require_verified(d);
  }
  SUBCASE("an exhausted oracle reports the budget, not a verdict") {
    Decision d = main_theorem_check(make_log_ring(ring_rationals(), twisted()),
                                    CenterSpec{{}, {}}, true, 3);
    CHECK(d.budget_exceeded);
    CHECK(d.verdict == Verdict::Unsupported);
  }
}

TEST_CASE("dimension bookkeeping") {
  SUBCASE("global quadric over the rationals") {
    DimensionReport rep = dimension_report(make_log_ring(ring_rationals(), quadric()),
                                           false, default_reduction_budget());
    CHECK(rep.dim_total == 2);
    CHECK(rep.dim_quotient == 0);
    CHECK(rep.dim_monoid == 2);
    CHECK(rep.balanced);
  }
  SUBCASE("global quadric over the integers") {
    DimensionReport rep = dimension_report(make_log_ring(ring_integers(), quadric()),
                                           false, default_reduction_budget());
    CHECK(rep.dim_total == 3);
    CHECK(rep.dim_quotient == 1);
    CHECK(rep.dim_monoid == 2);
  }
  SUBCASE("localized at the singular point over the integers at (2)") {
    LocalizeOutcome lo = localize_log_ring(make_log_ring(ring_integers(), quadric()),
                                           CenterSpec{{}, {2, 0}});
    REQUIRE(lo.ring);
    DimensionReport rep = dimension_report(*lo.ring, false, default_reduction_budget());
    CHECK(rep.dim_total == 3);
    CHECK(rep.dim_quotient == 1);  // the height of (2)
    CHECK(rep.dim_monoid == 2);
    CHECK(rep.balanced);
  }
  SUBCASE("localized at a facet: the monoid contributes one dimension") {
    LocalizeOutcome lo = localize_log_ring(make_log_ring(ring_rationals(), quadric()),
                                           CenterSpec{{0}, {}});
    REQUIRE(lo.ring);
    DimensionReport rep = dimension_report(*lo.ring, true, default_reduction_budget());
    CHECK(rep.dim_total == 1);
    CHECK(rep.dim_quotient == 0);
    CHECK(rep.dim_monoid == 1);
    CHECK(rep.balanced);

    // the report's steps form a verifiable certificate on their own
    Certificate c;
    c.verdict = "yes";
    c.subject = "dimension bookkeeping for the localized quadric";
    c.steps = rep.steps;
    VerifyResult v = verify_certificate(c);
    INFO(v.message);
    CHECK(v.ok);
  }
  SUBCASE("unit-bearing monoids count their unit rank") {
    DimensionReport rep = dimension_report(make_log_ring(ring_rationals(), unitful()),
                                           false, default_reduction_budget());
    CHECK(rep.dim_total == 2);     // rank of the group
    CHECK(rep.dim_quotient == 1);  // Laurent part from the unit lattice
    CHECK(rep.dim_monoid == 1);
    CHECK(rep.balanced);
  }
  SUBCASE("a tiny oracle budget is reported") {
    LocalizeOutcome lo = localize_log_ring(make_log_ring(ring_rationals(), twisted()),
                                           CenterSpec{{}, {}});
    REQUIRE(lo.ring);
    DimensionReport rep = dimension_report(*lo.ring, true, 3);
    CHECK(rep.budget_exceeded);
  }
}

TEST_CASE("polynomial centers over a field") {
  LogRingDescriptor r = make_log_ring(ring_rationals(), free2());
  PolyContext ctx = make_poly_context(ring_rationals(), 2);

  SUBCASE("a hyperplane center away from the origin") {
    // x - 1 contracts to the empty monomial prime: everything becomes a unit
    Polynomial p = poly_of(ctx, {{{1, 0}, 1}, {{0, 0}, -1}});
    LocalizeOutcome lo = localize_at_polynomial_prime(r, {p});
    REQUIRE(lo.ring);
    CHECK(lo.ring->monoid.units_basis.rows() == 2);
    REQUIRE(lo.ring->poly_prime);

    Decision d = is_log_regular(*lo.ring, true);
    CHECK(d.verdict == Verdict::Yes);
    require_verified(d);
    CHECK(count_rule(d.certificate, "oracle-dim") == 4);
  }
  SUBCASE("a maximal center mixing a monomial and a unit translate") {
    // (x, y - 1): the monomial part is the facet prime (x)
    Polynomial px = poly_of(ctx, {{{1, 0}, 1}});
    Polynomial py = poly_of(ctx, {{{0, 1}, 1}, {{0, 0}, -1}});
    LocalizeOutcome lo = localize_at_polynomial_prime(r, {px, py});
    REQUIRE(lo.ring);
    REQUIRE(lo.ring->center_face);
    CHECK(lo.ring->center_face->gen_indices == std::vector<std::size_t>{1});

    Decision d = is_log_regular(*lo.ring, true);
    CHECK(d.verdict == Verdict::Yes);
    require_verified(d);
  }
  SUBCASE("a single monomial generates a facet prime") {
    // (y) contracts to the prime over the face of the first generator
    Polynomial y = poly_of(ctx, {{{0, 1}, 1}});
    LocalizeOutcome lo = localize_at_polynomial_prime(r, {y});
    REQUIRE(lo.ring);
    REQUIRE(lo.ring->center_face);
    CHECK(lo.ring->center_face->gen_indices == std::vector<std::size_t>{0});
    CHECK(lo.ring->monoid.units_basis.rows() == 1);
  }
  SUBCASE("without the oracle a polynomial center is unsupported") {
    Polynomial p = poly_of(ctx, {{{1, 0}, 1}, {{0, 0}, -1}});
    LocalizeOutcome lo = localize_at_polynomial_prime(r, {p});
    REQUIRE(lo.ring);
    Decision d = is_log_regular(*lo.ring, false);
    CHECK(d.verdict == Verdict::Unsupported);
    require_verified(d);
  }
  SUBCASE("an ideal containing a unit is an error") {
    Polynomial one = poly_constant(ctx, ring_one(ctx.field));
    LocalizeOutcome lo = localize_at_polynomial_prime(r, {one});
    CHECK(!lo.ring);
    CHECK(!lo.error.empty());
  }
  SUBCASE("a non-field base is an error") {
    LogRingDescriptor rz = make_log_ring(ring_integers(), free2());
    Polynomial p = poly_of(ctx, {{{1, 0}, 1}});
    LocalizeOutcome lo = localize_at_polynomial_prime(rz, {p});
    CHECK(!lo.ring);
    CHECK(!lo.error.empty());
  }
  SUBCASE("a monomial part that is not a face is rejected") {
    LogRingDescriptor rq = make_log_ring(ring_rationals(), quadric());
    PolyContext ctx3 = make_poly_context(ring_rationals(), 3);
    // the middle generator alone: its vanishing traps the outer two
    Polynomial v = poly_of(ctx3, {{{0, 1, 0}, 1}});
    LocalizeOutcome lo = localize_at_polynomial_prime(rq, {v});
    CHECK(!lo.ring);
    CHECK(lo.rejection);
  }
}

TEST_CASE("the singular quadric localized away from the cone point is regular") {
  LogRingDescriptor r = make_log_ring(ring_rationals(), quadric());
  PolyContext ctx = make_poly_context(ring_rationals(), 3);
  // u - 1 generates a height one prime meeting no monomial prime, so the
  // contraction is empty and every monomial becomes invertible
  Polynomial p = poly_of(ctx, {{{1, 0, 0}, 1}, {{0, 0, 0}, -1}});
  LocalizeOutcome lo = localize_at_polynomial_prime(r, {p});
  REQUIRE(lo.ring);
  CHECK(lo.ring->center_face->gen_indices.size() == 3);
  Decision d = is_log_regular(*lo.ring, true);
  CHECK(d.verdict == Verdict::Yes);
  require_verified(d);
}
