#include <doctest.h>

#include <set>

#include "affmon/monoid.hpp"

using namespace affmon;

namespace {

IntegerMatrix rows_of(std::size_t cols, std::initializer_list<std::initializer_list<long>> rows) {
  IntegerMatrix m(0, cols);
  for (const auto& r : rows) {
    Vec v;
    for (long x : r) v.push_back(Int(x));
    m.append_row(v);
  }
  return m;
}

Vec vec(std::initializer_list<long> vals) {
  Vec v;
  for (long x : vals) v.push_back(Int(x));
  return v;
}

Vec combine(const IntegerMatrix& gens, const Vec& coeff) {
  Vec out(gens.cols(), Int(0));
  for (std::size_t i = 0; i < gens.rows(); ++i)
    if (coeff[i] != 0) out = add(out, scaled(coeff[i], gens.row(i)));
  return out;
}

bool coeffs_nonnegative(const Vec& c) {
  for (const Int& x : c)
    if (x < 0) return false;
  return true;
}

// Exact membership oracle for monoids with componentwise nonnegative
// generators: every partial sum of a decomposition of x stays in the box
// [0, x], so reachability inside the box decides membership.
bool box_reachable(const IntegerMatrix& gens, const Vec& x) {
  for (const Int& xi : x)
    if (xi < 0) return false;
  std::set<Vec, VecLess> seen;
  std::vector<Vec> frontier{Vec(x.size(), Int(0))};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    Vec cur = frontier.back();
    frontier.pop_back();
    if (cur == x) return true;
    for (std::size_t i = 0; i < gens.rows(); ++i) {
      Vec nxt = add(cur, gens.row(i));
      bool inside = true;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (nxt[j] > x[j]) inside = false;
      if (inside && seen.insert(nxt).second) frontier.push_back(nxt);
    }
  }
  return false;
}

}  // namespace

TEST_CASE("construction drops zero and duplicate generators, keeps order") {
  AffineMonoid q = make_affine_monoid(rows_of(2, {{0, 0}, {1, 0}, {1, 0}, {0, 1}}), 2);
  CHECK(q.gens == rows_of(2, {{1, 0}, {0, 1}}));
  CHECK(q.is_reduced());
  CHECK(q.gp_rank() == 2);
}

TEST_CASE("the trivial monoid accepts zero and nothing else") {
  AffineMonoid q = make_affine_monoid(IntegerMatrix(0, 2), 2);
  CHECK(q.is_trivial());
  MembershipResult zero = membership(q, vec({0, 0}));
  CHECK(zero.member);
  CHECK(zero.coefficients.empty());
  MembershipResult other = membership(q, vec({1, 2}));
  CHECK(!other.member);
  CHECK(other.refusal == MembershipResult::Refusal::OutsideGroup);
}

TEST_CASE("membership in the quadric monoid") {
  AffineMonoid q = make_affine_monoid(rows_of(2, {{1, 0}, {1, 1}, {1, 2}}), 2);
  CHECK(q.is_reduced());
  CHECK(q.unit_gen_indices.empty());

  MembershipResult yes = membership(q, vec({2, 2}));
  CHECK(yes.member);
  CHECK(coeffs_nonnegative(yes.coefficients));
  CHECK(combine(q.gens, yes.coefficients) == vec({2, 2}));
  // Search order finds the decomposition (1,0) + (1,2) rather than 2(1,1).
  CHECK(yes.coefficients == vec({1, 0, 1}));

  CHECK(membership(q, vec({1, 1})).member);
  CHECK(membership(q, vec({0, 0})).member);
  MembershipResult out = membership(q, vec({1, 3}));
  CHECK(!out.member);
  CHECK(out.refusal == MembershipResult::Refusal::OutsideCone);
  MembershipResult neg = membership(q, vec({0, -1}));
  CHECK(!neg.member);
  CHECK(neg.refusal == MembershipResult::Refusal::OutsideCone);
}

TEST_CASE("membership in the numerical monoid generated by 2 and 3") {
  AffineMonoid q = make_affine_monoid(rows_of(1, {{2}, {3}}), 1);
  MembershipResult one = membership(q, vec({1}));
  CHECK(!one.member);
  CHECK(one.refusal == MembershipResult::Refusal::SearchExhausted);
  CHECK(one.states_explored >= 1);

  for (long n : {0, 2, 3, 4, 5, 6, 7, 11}) {
    MembershipResult r = membership(q, vec({n}));
    CHECK(r.member);
    CHECK(combine(q.gens, r.coefficients) == vec({n}));
  }
}

TEST_CASE("membership with units mixes inverse words into the certificate") {
  AffineMonoid q = make_affine_monoid(rows_of(2, {{1, 0}, {-1, 0}, {0, 1}}), 2);
  CHECK(!q.is_reduced());
  CHECK(q.units_basis == rows_of(2, {{1, 0}}));
  CHECK(q.unit_gen_indices == std::vector<std::size_t>{0, 1});

  MembershipResult r = membership(q, vec({-3, 2}));
  CHECK(r.member);
  CHECK(coeffs_nonnegative(r.coefficients));
  CHECK(combine(q.gens, r.coefficients) == vec({-3, 2}));
}

TEST_CASE("numerical monoid 2,3 is not root closed and saturates to N") {
  AffineMonoid q = make_affine_monoid(rows_of(1, {{2}, {3}}), 1);
  SaturationResult s = root_closed_and_saturate(q);
  CHECK(!s.root_closed);
  CHECK(s.witness_x == vec({1}));
  CHECK(s.witness_n == 2);
  CHECK(s.saturation.gens == rows_of(1, {{1}}));
  CHECK(!membership(q, s.witness_x).member);
  CHECK(membership(q, scaled(s.witness_n, s.witness_x)).member);
}

TEST_CASE("the quadric monoid is root closed with saturation equal to itself") {
  AffineMonoid q = make_affine_monoid(rows_of(2, {{1, 0}, {1, 1}, {1, 2}}), 2);
  SaturationResult s = root_closed_and_saturate(q);
  CHECK(s.root_closed);
  CHECK(s.saturation.gens == q.gens);
}

TEST_CASE("degree bounded monomial curves stay root closed") {
  AffineMonoid q = make_affine_monoid(rows_of(2, {{1, 0}, {1, 1}, {1, 2}, {1, 3}}), 2);
  SaturationResult s = root_closed_and_saturate(q);
  CHECK(s.root_closed);
}

TEST_CASE("root closedness can fail inside the unit lattice of the saturation") {
  // Every Hilbert basis element of cone cap gp lies in Q here, yet (1,0)
  // generates the saturation's unit lattice, is not in Q, and doubles into Q.
  AffineMonoid q = make_affine_monoid(rows_of(2, {{2, 0}, {-2, 0}, {1, 1}, {2, 1}}), 2);
  SaturationResult s = root_closed_and_saturate(q);
  CHECK(!s.root_closed);
  CHECK(s.witness_x == vec({1, 0}));
  CHECK(s.witness_n == 2);
  CHECK(!membership(q, vec({1, 0})).member);
  CHECK(membership(q, vec({2, 0})).member);
}

TEST_CASE("localizing the plane monoid at one axis") {
  AffineMonoid q = make_affine_monoid(rows_of(2, {{1, 0}, {0, 1}}), 2);
  AffineMonoid loc = localize_at_face_gens(q, {0});
  CHECK(!loc.is_reduced());
  CHECK(loc.units_basis == rows_of(2, {{1, 0}}));
  CHECK(membership(loc, vec({-5, 3})).member);
  CHECK(!membership(loc, vec({0, -1})).member);

  AffineMonoid all = localize_at_face_gens(q, {0, 1});
  CHECK(all.units_basis.rows() == 2);
  MembershipResult r = membership(all, vec({-3, -4}));
  CHECK(r.member);
  CHECK(combine(all.gens, r.coefficients) == vec({-3, -4}));
}

TEST_CASE("reduction modulo units recovers a copy of N") {
  AffineMonoid q = make_affine_monoid(rows_of(2, {{1, 0}, {-1, 0}, {0, 1}}), 2);
  ReducedMonoidResult r = reduced_monoid(q);
  REQUIRE(r.ok);
  CHECK(r.monoid.gens == rows_of(1, {{1}}));
  CHECK(r.monoid.is_reduced());
  CHECK(r.project(vec({5, 7})) == vec({7}));
  CHECK(r.project(vec({-2, 0})) == vec({0}));
}

TEST_CASE("reducing an already reduced monoid is the identity") {
  AffineMonoid q = make_affine_monoid(rows_of(2, {{1, 0}, {0, 1}}), 2);
  ReducedMonoidResult r = reduced_monoid(q);
  REQUIRE(r.ok);
  CHECK(r.monoid.gens == q.gens);
  CHECK(r.project(vec({3, 4})) == vec({3, 4}));
}

TEST_CASE("reduction survives units sitting inside a finer group") {
  // gp is generated by (1,1) and (0,2); the unit lattice 2Z x 0 is pure in
  // it, so the quotient is torsion free even though the units use entry 2.
  AffineMonoid q = make_affine_monoid(rows_of(2, {{2, 0}, {-2, 0}, {1, 1}}), 2);
  ReducedMonoidResult r = reduced_monoid(q);
  REQUIRE(r.ok);
  REQUIRE(r.monoid.gens.rows() == 1);
  Int g = r.monoid.gens.at(0, 0);
  CHECK((g == 1 || g == -1));
}

TEST_CASE("reduction reports torsion when the unit lattice is not pure") {
  AffineMonoid q =
      make_affine_monoid(rows_of(3, {{2, 0, 0}, {-2, 0, 0}, {1, 1, 1}, {2, 1, 1}}), 3);
  ReducedMonoidResult r = reduced_monoid(q);
  CHECK(!r.ok);
  CHECK(r.torsion == std::vector<Int>{Int(2)});
}

TEST_CASE("presenting the quadric relation recovers a quadric monoid") {
  PresentedMonoid p;
  p.n = 3;
  p.relations.push_back({vec({1, 0, 1}), vec({0, 2, 0})});
  FromPresentationResult r = from_presentation(p);
  CHECK(r.torsion_free);
  REQUIRE(r.monoid.gens.rows() == 3);
  CHECK(r.monoid.gp_rank() == 2);
  // The defining relation holds between the generator images.
  Vec a = r.generator_images.row(0);
  Vec b = r.generator_images.row(1);
  Vec c = r.generator_images.row(2);
  CHECK(add(a, c) == scaled(Int(2), b));
  SaturationResult s = root_closed_and_saturate(r.monoid);
  CHECK(s.root_closed);
  CHECK(s.saturation.gens.rows() == 3);
}

TEST_CASE("a relation free presentation gives the free monoid") {
  PresentedMonoid p;
  p.n = 2;
  FromPresentationResult r = from_presentation(p);
  CHECK(r.torsion_free);
  CHECK(r.monoid.gens == rows_of(2, {{1, 0}, {0, 1}}));
}

TEST_CASE("torsion in a presentation is discarded and flagged") {
  PresentedMonoid p;
  p.n = 1;
  p.relations.push_back({vec({2}), vec({0})});
  FromPresentationResult r = from_presentation(p);
  CHECK(!r.torsion_free);
  CHECK(r.discarded_torsion == std::vector<Int>{Int(2)});
  CHECK(r.monoid.is_trivial());
}

TEST_CASE("membership agrees with box reachability on nonnegative monoids") {
  Splitmix rng(0xA1B2C3D4E5F60718ull);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t d = 2 + rng.below(2);
    std::size_t n = 2 + rng.below(3);
    IntegerMatrix gens(0, d);
    for (std::size_t i = 0; i < n; ++i) {
      Vec g(d);
      for (std::size_t j = 0; j < d; ++j) g[j] = Int(rng.range(0, 4));
      gens.append_row(g);
    }
    AffineMonoid q = make_affine_monoid(gens, d);
    for (int s = 0; s < 4; ++s) {
      Vec x(d);
      for (std::size_t j = 0; j < d; ++j) x[j] = Int(rng.range(0, 8));
      MembershipResult r = membership(q, x);
      CHECK(r.member == box_reachable(q.gens, x));
      if (r.member) {
        CHECK(coeffs_nonnegative(r.coefficients));
        CHECK(combine(q.gens, r.coefficients) == x);
      }
    }
  }
}

TEST_CASE("membership accepts every sampled generator combination") {
  Splitmix rng(0x5151515151515151ull);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t d = 2 + rng.below(2);
    std::size_t n = 2 + rng.below(3);
    IntegerMatrix gens(0, d);
    for (std::size_t i = 0; i < n; ++i) {
      Vec g(d);
      for (std::size_t j = 0; j < d; ++j) g[j] = Int(rng.range(-3, 4));
      gens.append_row(g);
    }
    AffineMonoid q = make_affine_monoid(gens, d);
    Vec coeff(q.gens.rows());
    for (std::size_t i = 0; i < q.gens.rows(); ++i) coeff[i] = Int(rng.range(0, 3));
    Vec x = combine(q.gens, coeff);
    MembershipResult r = membership(q, x);
    CHECK(r.member);
    CHECK(coeffs_nonnegative(r.coefficients));
    CHECK(combine(q.gens, r.coefficients) == x);
  }
}

TEST_CASE("saturations are root closed and contain the monoid") {
  Splitmix rng(0x00C0FFEE00C0FFEEull);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t d = 2;
    std::size_t n = 2 + rng.below(3);
    IntegerMatrix gens(0, d);
    for (std::size_t i = 0; i < n; ++i) {
      Vec g(d);
      for (std::size_t j = 0; j < d; ++j) g[j] = Int(rng.range(-2, 3));
      gens.append_row(g);
    }
    AffineMonoid q = make_affine_monoid(gens, d);
    SaturationResult s = root_closed_and_saturate(q);

    for (std::size_t i = 0; i < q.gens.rows(); ++i)
      CHECK(membership(s.saturation, q.gens.row(i)).member);
    CHECK(root_closed_and_saturate(s.saturation).root_closed);
    if (!s.root_closed) {
      CHECK(!membership(q, s.witness_x).member);
      CHECK(membership(q, scaled(s.witness_n, s.witness_x)).member);
      CHECK(membership(s.saturation, s.witness_x).member);
    } else {
      for (std::size_t i = 0; i < s.saturation.gens.rows(); ++i)
        CHECK(membership(q, s.saturation.gens.row(i)).member);
    }
  }
}

TEST_CASE("localizing a root closed monoid at a face keeps it root closed") {
  Splitmix rng(0xFACEFACEFACEFACEull);
  int faces_seen = 0;
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t d = 2;
    IntegerMatrix gens(0, d);
    std::size_t n = 2 + rng.below(2);
    for (std::size_t i = 0; i < n; ++i) {
      Vec g(d);
      for (std::size_t j = 0; j < d; ++j) g[j] = Int(rng.range(-2, 3));
      gens.append_row(g);
    }
    AffineMonoid q = root_closed_and_saturate(make_affine_monoid(gens, d)).saturation;
    if (q.is_trivial()) continue;

    std::vector<bool> mask(q.gens.rows(), false);
    std::vector<std::size_t> marked;
    for (std::size_t i = 0; i < q.gens.rows(); ++i)
      if (rng.below(2) == 0) {
        mask[i] = true;
        marked.push_back(i);
      }
    SupportSearch f = support_functional(q.gens, mask);
    if (!f.functional) continue;
    ++faces_seen;

    AffineMonoid loc = localize_at_face_gens(q, marked);
    for (std::size_t i : marked) {
      CHECK(in_row_lattice(loc.units_basis, q.gens.row(i)));
      CHECK(membership(loc, negated(q.gens.row(i))).member);
    }
    for (std::size_t i = 0; i < q.gens.rows(); ++i) CHECK(membership(loc, q.gens.row(i)).member);
    CHECK(root_closed_and_saturate(loc).root_closed);
  }
  CHECK(faces_seen >= 3);
}

TEST_CASE("reduction properties on random monoids") {
  Splitmix rng(0x7E577E577E577E57ull);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t d = 2;
    std::size_t n = 2 + rng.below(3);
    IntegerMatrix gens(0, d);
    for (std::size_t i = 0; i < n; ++i) {
      Vec g(d);
      for (std::size_t j = 0; j < d; ++j) g[j] = Int(rng.range(-2, 3));
      gens.append_row(g);
    }
    AffineMonoid q = make_affine_monoid(gens, d);
    ReducedMonoidResult r = reduced_monoid(q);
    if (root_closed_and_saturate(q).root_closed) CHECK(r.ok);
    if (!r.ok) continue;
    CHECK(r.monoid.is_reduced());
    for (std::size_t i = 0; i < q.gens.rows(); ++i)
      CHECK(membership(r.monoid, r.project(q.gens.row(i))).member);

    Vec coeff(q.gens.rows());
    for (std::size_t i = 0; i < q.gens.rows(); ++i) coeff[i] = Int(rng.range(0, 2));
    Vec x = combine(q.gens, coeff);
    CHECK(membership(r.monoid, r.project(x)).member);
  }
}

TEST_CASE("canonical unit representatives are coset invariants") {
  AffineMonoid q = make_affine_monoid(rows_of(3, {{2, 1, 0}, {-2, -1, 0}, {0, 3, 0}, {0, -3, 0},
                                                  {0, 0, 1}}),
                                      3);
  Splitmix rng(0xBEEF00D5ull);
  for (int s = 0; s < 20; ++s) {
    Vec x(3);
    for (std::size_t j = 0; j < 3; ++j) x[j] = Int(rng.range(-6, 6));
    Vec r1 = q.reduce_mod_units(x);
    CHECK(in_row_lattice(q.units_basis, sub(x, r1)));
    Vec shift = x;
    for (std::size_t u = 0; u < q.units_basis.rows(); ++u)
      shift = add(shift, scaled(Int(rng.range(-2, 2)), q.units_basis.row(u)));
    CHECK(q.reduce_mod_units(shift) == r1);
  }
}

TEST_CASE("presentation relations hold between the generator images") {
  Splitmix rng(0x1234ABCD5678EFull);
  for (int trial = 0; trial < 15; ++trial) {
    PresentedMonoid p;
    p.n = 2 + rng.below(2);
    std::size_t nrel = rng.below(3);
    for (std::size_t k = 0; k < nrel; ++k) {
      Vec u(p.n), v(p.n);
      for (std::size_t j = 0; j < p.n; ++j) {
        u[j] = Int(rng.range(0, 2));
        v[j] = Int(rng.range(0, 2));
      }
      p.relations.push_back({u, v});
    }
    FromPresentationResult r = from_presentation(p);
    CHECK(r.torsion_free == r.discarded_torsion.empty());
    for (const auto& [u, v] : p.relations)
      CHECK(mul_row(u, r.generator_images) == mul_row(v, r.generator_images));
    for (std::size_t i = 0; i < p.n; ++i)
      CHECK(membership(r.monoid, r.generator_images.row(i)).member);
  }
}
