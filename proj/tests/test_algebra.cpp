#include "affmon/algebra.hpp"

#include <doctest.h>

#include "affmon/monoid.hpp"
#include "affmon/spectrum.hpp"

using namespace affmon;

namespace {

IntegerMatrix rows_of(std::vector<Vec> rows, std::size_t cols) {
  IntegerMatrix m(0, cols);
  for (auto& r : rows) m.append_row(r);
  return m;
}

Scalar sc(const BaseRingDescriptor& a, long v) { return ring_from_int(a, Int(v)); }

AlgebraElement mono(const BaseRingDescriptor& a, Vec e, long c) {
  return alg_monomial(a, std::move(e), sc(a, c));
}

}  // namespace

TEST_CASE("monomial arithmetic expands binomials") {
  BaseRingDescriptor kQ = ring_rationals();
  AlgebraElement f = alg_add(kQ, mono(kQ, {1, 0}, 1), mono(kQ, {0, 1}, 1));
  AlgebraElement sq = alg_mul(kQ, f, f);

  AlgebraElement expected = alg_add(
      kQ, alg_add(kQ, mono(kQ, {2, 0}, 1), mono(kQ, {1, 1}, 2)), mono(kQ, {0, 2}, 1));
  CHECK(sq == expected);
  CHECK(alg_to_string(kQ, sq) == "1*e^(0,2) + 2*e^(1,1) + 1*e^(2,0)");

  // over F_2 the cross term disappears entirely
  BaseRingDescriptor f2 = ring_prime_field(2);
  AlgebraElement g = alg_add(f2, mono(f2, {1, 0}, 1), mono(f2, {0, 1}, 1));
  AlgebraElement gsq = alg_mul(f2, g, g);
  CHECK(gsq.terms.size() == 2);
  CHECK(gsq == alg_add(f2, mono(f2, {2, 0}, 1), mono(f2, {0, 2}, 1)));
}

TEST_CASE("cancellation deletes terms instead of keeping zeros") {
  BaseRingDescriptor kQ = ring_rationals();
  AlgebraElement f = mono(kQ, {1, 2}, 3);
  AlgebraElement g = mono(kQ, {1, 2}, -3);
  AlgebraElement s = alg_add(kQ, f, g);
  CHECK(alg_is_zero(s));
  CHECK(s.terms.empty());

  AlgebraElement partial =
      alg_add(kQ, alg_add(kQ, f, mono(kQ, {0, 0}, 5)), g);
  CHECK(partial.terms.size() == 1);
  CHECK(partial == mono(kQ, {0, 0}, 5));

  CHECK(alg_sub(kQ, f, f) == alg_zero());
  CHECK(alg_is_zero(alg_scale(kQ, ring_zero(kQ), f)));
  CHECK(alg_to_string(kQ, alg_zero()) == "0");
}

TEST_CASE("quotient by a monomial prime is multiplicative") {
  // quadric cone monoid; prime at the face spanned by generator 0
  AffineMonoid q = make_affine_monoid(rows_of({{2, 0}, {1, 1}, {0, 2}}, 2), 2);
  PrimeCheck pc = prime_from_face_gens(q, {0});
  REQUIRE(pc.prime);
  const MonoidPrime& p = *pc.prime;

  BaseRingDescriptor kQ = ring_rationals();
  std::vector<AlgebraElement> pool;
  for (std::size_t i = 0; i < q.gens.rows(); ++i) pool.push_back(mono(kQ, q.gens.row(i), 1));
  pool.push_back(alg_add(kQ, pool[0], alg_scale(kQ, sc(kQ, 2), pool[1])));
  pool.push_back(alg_sub(kQ, pool[2], pool[1]));
  pool.push_back(alg_one(kQ, 2));

  for (const AlgebraElement& f : pool) {
    for (const AlgebraElement& g : pool) {
      AlgebraElement lhs = alg_normal_form(alg_mul(kQ, f, g), p);
      AlgebraElement rhs = alg_normal_form(
          alg_mul(kQ, alg_normal_form(f, p), alg_normal_form(g, p)), p);
      CHECK(lhs == rhs);
      // additivity as well
      CHECK(alg_normal_form(alg_add(kQ, f, g), p) ==
            alg_add(kQ, alg_normal_form(f, p), alg_normal_form(g, p)));
    }
  }
}

TEST_CASE("normal form keeps exactly the face terms") {
  AffineMonoid q = make_affine_monoid(rows_of({{2, 0}, {1, 1}, {0, 2}}, 2), 2);
  PrimeCheck pc = prime_from_face_gens(q, {0});
  REQUIRE(pc.prime);

  BaseRingDescriptor kQ = ring_rationals();
  // (2,0) spans the face, (1,1) and (0,2) fall into the prime
  AlgebraElement f = alg_add(
      kQ, alg_add(kQ, mono(kQ, {2, 0}, 7), mono(kQ, {1, 1}, -4)), mono(kQ, {0, 2}, 9));
  AlgebraElement nf = alg_normal_form(f, *pc.prime);
  CHECK(nf == mono(kQ, {2, 0}, 7));

  // the constant term always survives: 0 is never in a prime
  AlgebraElement g = alg_add(kQ, alg_one(kQ, 2), mono(kQ, {4, 2}, 3));
  CHECK(alg_normal_form(g, *pc.prime) == alg_one(kQ, 2));

  // at the maximal monomial prime only constants remain
  PrimeCheck max = prime_from_face_gens(q, {});
  REQUIRE(max.prime);
  CHECK(alg_normal_form(f, *max.prime) == alg_zero());
  CHECK(alg_normal_form(g, *max.prime) == alg_one(kQ, 2));
}

TEST_CASE("product rings multiply componentwise in the algebra") {
  BaseRingDescriptor qq = ring_product_of_fields(2);
  Scalar e0{{Rat(1), Rat(0)}};
  Scalar e1{{Rat(0), Rat(1)}};
  AlgebraElement f = alg_monomial(qq, {1}, e0);
  AlgebraElement g = alg_monomial(qq, {1}, e1);
  // idempotents with disjoint support annihilate each other
  CHECK(alg_is_zero(alg_mul(qq, f, g)));
  CHECK(alg_mul(qq, f, f) == alg_monomial(qq, {2}, e0));
}
