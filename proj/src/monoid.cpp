#include "affmon/monoid.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "affmon/fourier_motzkin.hpp"

namespace affmon {

namespace {

// Nonnegative integer word over all generators expressing -gens[s], obtained
// by clearing denominators in a rational cone combination over the unit
// generators: N(-g) = sum m_u u gives -g = sum m_u u + (N-1) g.
Vec inverse_word(const IntegerMatrix& gens, const std::vector<std::size_t>& unit_idx,
                 std::size_t s) {
  const std::size_t d = gens.cols();
  std::vector<LinearConstraint> rows;
  for (std::size_t j = 0; j < d; ++j) {
    RatVec c(unit_idx.size());
    for (std::size_t u = 0; u < unit_idx.size(); ++u) c[u] = Rat(gens.at(unit_idx[u], j));
    rows.push_back(LinearConstraint::equal(std::move(c), Rat(-gens.at(s, j))));
  }
  for (std::size_t u = 0; u < unit_idx.size(); ++u) {
    RatVec c(unit_idx.size(), Rat(0));
    c[u] = Rat(1);
    rows.push_back(LinearConstraint::at_least(std::move(c), Rat(0)));
  }
  FmResult lp = fm_solve(unit_idx.size(), rows);
  assert(lp.feasible);

  Int n = 1;
  for (const Rat& t : lp.witness) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), t.get_den().get_mpz_t());
  Vec word(gens.rows(), Int(0));
  for (std::size_t u = 0; u < unit_idx.size(); ++u)
    word[unit_idx[u]] += lp.witness[u].get_num() * (n / lp.witness[u].get_den());
  word[s] += n - 1;

  Vec check(d, Int(0));
  for (std::size_t i = 0; i < gens.rows(); ++i)
    if (word[i] != 0) check = add(check, scaled(word[i], gens.row(i)));
  assert(check == negated(gens.row(s)));
  return word;
}

}  // namespace

Vec AffineMonoid::reduce_mod_units(Vec x) const {
  for (std::size_t r = 0; r < units_basis.rows(); ++r) {
    std::size_t p = 0;
    while (p < ambient && units_basis.at(r, p) == 0) ++p;
    assert(p < ambient);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x[p].get_mpz_t(), units_basis.at(r, p).get_mpz_t());
    if (q != 0) x = sub(x, scaled(q, units_basis.row(r)));
  }
  return x;
}

AffineMonoid make_affine_monoid(const IntegerMatrix& gens, std::size_t ambient) {
  assert(gens.rows() == 0 || gens.cols() == ambient);
  AffineMonoid q;
  q.ambient = ambient;
  q.gens = IntegerMatrix(0, ambient);
  std::set<Vec, VecLess> seen;
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    Vec g = gens.row(i);
    if (is_zero_vec(g)) continue;
    if (seen.insert(g).second) q.gens.append_row(g);
  }

  q.cone = dual_description(q.gens);
  q.gp_basis = hermite_normal_form(q.gens);

  // Units are exactly the generators on the minimal face: every facet normal
  // vanishes there, and the inverse word construction certifies -g in Q.
  IntegerMatrix unit_rows(0, ambient);
  for (std::size_t i = 0; i < q.gens.rows(); ++i) {
    bool on_lineality = true;
    for (std::size_t f = 0; f < q.cone.facet_normals.rows() && on_lineality; ++f)
      if (dot(q.cone.facet_normals.row(f), q.gens.row(i)) != 0) on_lineality = false;
    if (on_lineality) {
      q.unit_gen_indices.push_back(i);
      unit_rows.append_row(q.gens.row(i));
    }
  }
  q.units_basis = hermite_normal_form(unit_rows);

  q.positive_functional = Vec(ambient, Int(0));
  for (std::size_t f = 0; f < q.cone.facet_normals.rows(); ++f)
    q.positive_functional = add(q.positive_functional, q.cone.facet_normals.row(f));

  for (std::size_t s : q.unit_gen_indices)
    q.unit_inverse_words.push_back(inverse_word(q.gens, q.unit_gen_indices, s));
  return q;
}

AffineMonoid make_affine_monoid(const std::vector<Vec>& gens, std::size_t ambient) {
  return make_affine_monoid(IntegerMatrix::from_rows(gens, ambient), ambient);
}

MembershipResult membership(const AffineMonoid& q, const Vec& x) {
  assert(x.size() == q.ambient);
  MembershipResult res;
  if (!q.in_gp(x)) {
    res.refusal = MembershipResult::Refusal::OutsideGroup;
    return res;
  }
  if (!q.cone.contains(x)) {
    res.refusal = MembershipResult::Refusal::OutsideCone;
    return res;
  }

  std::vector<bool> is_unit(q.gens.rows(), false);
  for (std::size_t i : q.unit_gen_indices) is_unit[i] = true;

  // Depth-first search over remainders modulo units. Subtracting a non-unit
  // generator strictly decreases the positive functional, so the reachable
  // set is finite and the search is a complete decision procedure.
  std::set<Vec, VecLess> failed;
  std::vector<std::size_t> path;
  std::size_t states = 0;
  auto dfs = [&](auto&& self, const Vec& rep) -> bool {
    if (is_zero_vec(rep)) return true;
    if (failed.count(rep)) return false;
    ++states;
    for (std::size_t i = 0; i < q.gens.rows(); ++i) {
      if (is_unit[i]) continue;
      Vec raw = sub(rep, q.gens.row(i));
      if (!q.cone.contains(raw)) continue;
      if (self(self, q.reduce_mod_units(std::move(raw)))) {
        path.push_back(i);
        return true;
      }
    }
    failed.insert(rep);
    return false;
  };

  if (!dfs(dfs, q.reduce_mod_units(x))) {
    res.refusal = MembershipResult::Refusal::SearchExhausted;
    res.states_explored = states;
    return res;
  }

  Vec coeff(q.gens.rows(), Int(0));
  for (std::size_t i : path) coeff[i] += 1;
  Vec partial(q.ambient, Int(0));
  for (std::size_t i = 0; i < q.gens.rows(); ++i)
    if (coeff[i] != 0) partial = add(partial, scaled(coeff[i], q.gens.row(i)));

  // The remaining unit lives in the lattice of unit generators; negative
  // lattice coefficients turn into the stored inverse words.
  Vec rest = sub(x, partial);
  if (!is_zero_vec(rest)) {
    IntegerMatrix unit_gens(0, q.ambient);
    for (std::size_t i : q.unit_gen_indices) unit_gens.append_row(q.gens.row(i));
    auto a = solve_left(unit_gens, rest);
    assert(a);
    for (std::size_t u = 0; u < q.unit_gen_indices.size(); ++u) {
      if ((*a)[u] >= 0)
        coeff[q.unit_gen_indices[u]] += (*a)[u];
      else
        coeff = add(coeff, scaled(-(*a)[u], q.unit_inverse_words[u]));
    }
  }

  Vec check(q.ambient, Int(0));
  for (std::size_t i = 0; i < q.gens.rows(); ++i) {
    assert(coeff[i] >= 0);
    if (coeff[i] != 0) check = add(check, scaled(coeff[i], q.gens.row(i)));
  }
  assert(check == x);
  res.member = true;
  res.coefficients = std::move(coeff);
  res.states_explored = states;
  return res;
}

SaturationResult root_closed_and_saturate(const AffineMonoid& q) {
  SaturationResult res;
  HilbertBasisResult hb = hilbert_basis(q.cone, q.gp_basis);

  std::vector<Vec> sat_gens = hb.basis;
  for (std::size_t i = 0; i < hb.unit_lattice.rows(); ++i) {
    sat_gens.push_back(hb.unit_lattice.row(i));
    sat_gens.push_back(negated(hb.unit_lattice.row(i)));
  }
  res.saturation = make_affine_monoid(sat_gens, q.ambient);

  res.root_closed = true;
  for (const Vec& t : sat_gens) {
    if (membership(q, t).member) continue;
    res.root_closed = false;
    res.witness_x = t;
    break;
  }
  if (!res.root_closed) {
    // Some multiple lands in Q because the witness lies in cone(Q) cap gp(Q);
    // report the smallest.
    for (Int n = 2;; ++n) {
      if (membership(q, scaled(n, res.witness_x)).member) {
        res.witness_n = n;
        break;
      }
    }
  }
  return res;
}

AffineMonoid localize_at_face_gens(const AffineMonoid& q,
                                   const std::vector<std::size_t>& face_gen_indices) {
  std::vector<Vec> g = q.gens.row_list();
  for (std::size_t i : face_gen_indices) {
    assert(i < q.gens.rows());
    g.push_back(negated(q.gens.row(i)));
  }
  return make_affine_monoid(g, q.ambient);
}

Vec ReducedMonoidResult::project(const Vec& x) const {
  auto y = solve_left(gp_basis, x);
  assert(y);
  return quotient.project_free(*y);
}

ReducedMonoidResult reduced_monoid(const AffineMonoid& q) {
  ReducedMonoidResult r;
  if (q.is_reduced()) {
    r.ok = true;
    r.monoid = q;
    r.gp_basis = IntegerMatrix::identity(q.ambient);
    r.quotient = lattice_quotient(q.ambient, IntegerMatrix(0, q.ambient));
    return r;
  }

  r.gp_basis = q.gp_basis;
  IntegerMatrix units_in_gp(0, q.gp_rank());
  for (std::size_t i = 0; i < q.units_basis.rows(); ++i) {
    auto y = solve_left(q.gp_basis, q.units_basis.row(i));
    assert(y);
    units_in_gp.append_row(*y);
  }
  r.quotient = lattice_quotient(q.gp_rank(), units_in_gp);
  if (!r.quotient.torsion.empty()) {
    r.ok = false;
    r.torsion = r.quotient.torsion;
    return r;
  }

  r.ok = true;
  std::vector<Vec> img;
  for (std::size_t i = 0; i < q.gens.rows(); ++i) img.push_back(r.project(q.gens.row(i)));
  r.monoid = make_affine_monoid(img, r.quotient.free_rank);
  return r;
}

FromPresentationResult from_presentation(const PresentedMonoid& p) {
  IntegerMatrix rel(0, p.n);
  for (const auto& [u, v] : p.relations) {
    assert(u.size() == p.n && v.size() == p.n);
    rel.append_row(sub(u, v));
  }
  LatticeQuotient lq = lattice_quotient(p.n, rel);

  FromPresentationResult r;
  r.torsion_free = lq.torsion.empty();
  r.discarded_torsion = lq.torsion;
  r.generator_images = lq.free_projection;
  r.monoid = make_affine_monoid(lq.free_projection.row_list(), lq.free_rank);
  return r;
}

}  // namespace affmon
