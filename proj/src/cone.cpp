#include "affmon/cone.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <utility>

#include "affmon/fourier_motzkin.hpp"
#include "affmon/smith.hpp"

namespace affmon {

namespace {

// Nonzero primitive rows, deduplicated, first-seen order.
IntegerMatrix clean_rays(const IntegerMatrix& rays) {
  IntegerMatrix out(0, rays.cols());
  std::set<Vec, VecLess> seen;
  for (std::size_t i = 0; i < rays.rows(); ++i) {
    Vec r = primitive(rays.row(i));
    if (is_zero_vec(r)) continue;
    if (seen.insert(r).second) out.append_row(r);
  }
  return out;
}

// Rows of a at the indices where the functional vanishes on both p and q.
bool adjacent_rays(const IntegerMatrix& a, const std::vector<std::size_t>& processed,
                   const Vec& p, const Vec& q) {
  IntegerMatrix tight(0, a.cols());
  for (std::size_t j : processed) {
    Vec row = a.row(j);
    if (dot(row, p) == 0 && dot(row, q) == 0) tight.append_row(row);
  }
  // p, q span a 2-face exactly when the common tight rows cut a plane.
  return lattice_rank(tight) + 2 == a.cols();
}

std::vector<Vec> dedup_rays(const std::vector<Vec>& rays) {
  std::set<Vec, VecLess> seen;
  std::vector<Vec> out;
  for (const Vec& r : rays)
    if (seen.insert(r).second) out.push_back(r);
  return out;
}

// Extreme rays of {z : a z >= 0}. Requires rank(a) = cols so the cone is
// pointed; the cone need not be full-dimensional. Incremental double
// description processing rows in order.
std::vector<Vec> dd_pointed(const IntegerMatrix& a) {
  const std::size_t k = a.cols();
  if (k == 0) return {};
  assert(lattice_rank(a) == k);

  // Simplicial start from the first k independent rows.
  std::vector<std::size_t> base;
  IntegerMatrix bm(0, k);
  for (std::size_t i = 0; i < a.rows() && base.size() < k; ++i) {
    IntegerMatrix t = bm;
    t.append_row(a.row(i));
    if (lattice_rank(t) == base.size() + 1) {
      bm = std::move(t);
      base.push_back(i);
    }
  }
  assert(base.size() == k);

  std::vector<Vec> rays;
  for (std::size_t idx : base) {
    IntegerMatrix rest(0, k);
    for (std::size_t j : base)
      if (j != idx) rest.append_row(a.row(j));
    IntegerMatrix kb = kernel_basis(rest);
    assert(kb.rows() == 1);
    Vec v = kb.row(0);
    Int s = dot(a.row(idx), v);
    assert(s != 0);
    if (s < 0) v = negated(v);
    rays.push_back(std::move(v));
  }

  std::vector<bool> in_base(a.rows(), false);
  for (std::size_t b : base) in_base[b] = true;
  std::vector<std::size_t> processed = base;

  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (in_base[i]) continue;
    Vec arow = a.row(i);
    std::vector<Vec> pos, neg, next;
    for (Vec& r : rays) {
      Int s = dot(arow, r);
      if (s > 0)
        pos.push_back(std::move(r));
      else if (s < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    if (!neg.empty()) {
      for (const Vec& p : pos)
        for (const Vec& q : neg) {
          if (!adjacent_rays(a, processed, p, q)) continue;
          // (a.p) q - (a.q) p: positive combination landing on a = 0.
          Vec w = sub(scaled(dot(arow, p), q), scaled(dot(arow, q), p));
          next.push_back(primitive(w));
        }
      for (Vec& p : pos) next.push_back(std::move(p));
      rays = dedup_rays(next);
    } else {
      for (Vec& p : pos) next.push_back(std::move(p));
      rays = std::move(next);
    }
    processed.push_back(i);
  }
  return rays;
}

RatVec to_ratvec(const Vec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

IntegerMatrix sorted_rows(std::vector<Vec> rows, std::size_t cols) {
  std::sort(rows.begin(), rows.end(), VecLess{});
  IntegerMatrix m(0, cols);
  for (const Vec& r : rows) m.append_row(r);
  return m;
}

}  // namespace

bool RationalCone::in_span(const Vec& x) const { return in_row_lattice(span_lattice, x); }

bool RationalCone::contains(const Vec& x) const {
  if (!in_span(x)) return false;
  for (std::size_t i = 0; i < facet_normals.rows(); ++i)
    if (dot(facet_normals.row(i), x) < 0) return false;
  return true;
}

bool RationalCone::in_relative_interior(const Vec& x) const {
  if (!in_span(x)) return false;
  for (std::size_t i = 0; i < facet_normals.rows(); ++i)
    if (dot(facet_normals.row(i), x) <= 0) return false;
  return true;
}

RationalCone dual_description(const IntegerMatrix& rays) {
  RationalCone c;
  c.ambient = rays.cols();
  c.generators = clean_rays(rays);
  if (c.generators.rows() == 0) {
    c.span_lattice = IntegerMatrix(0, c.ambient);
    c.lineality_lattice = IntegerMatrix(0, c.ambient);
    c.facet_normals = IntegerMatrix(0, c.ambient);
    c.extreme_rays = IntegerMatrix(0, c.ambient);
    return c;
  }
  c.span_lattice = saturate_lattice(c.generators);
  const std::size_t k = c.span_lattice.rows();

  // Polar cone inside the span, in span-lattice coordinates: z stands for
  // the functional sum_j z_j w_j, constrained by gen_i . functional >= 0.
  IntegerMatrix pairing(c.generators.rows(), k);
  for (std::size_t i = 0; i < c.generators.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      pairing.at(i, j) = dot(c.generators.row(i), c.span_lattice.row(j));
  std::vector<Vec> polar = dd_pointed(pairing);

  std::vector<Vec> normals;
  normals.reserve(polar.size());
  for (const Vec& z : polar) normals.push_back(mul_row(z, c.span_lattice));
  c.facet_normals = sorted_rows(std::move(normals), c.ambient);

  c.lineality_lattice = lattice_intersection(c.span_lattice, kernel_basis(c.facet_normals));

  const std::size_t lin = c.lineality_lattice.rows();
  std::vector<Vec> ext;
  for (std::size_t g = 0; g < c.generators.rows(); ++g) {
    Vec gen = c.generators.row(g);
    IntegerMatrix tight(0, c.ambient);
    for (std::size_t i = 0; i < c.facet_normals.rows(); ++i)
      if (dot(c.facet_normals.row(i), gen) == 0) tight.append_row(c.facet_normals.row(i));
    // Minimal face holding gen is one ray above the lineality space.
    if (lattice_rank(tight) + lin + 1 == k) ext.push_back(std::move(gen));
  }
  c.extreme_rays = sorted_rows(dedup_rays(ext), c.ambient);
  return c;
}

RationalCone dual_description(const std::vector<Vec>& rays, std::size_t ambient) {
  return dual_description(IntegerMatrix::from_rows(rays, ambient));
}

SupportSearch support_functional(const IntegerMatrix& gens, const std::vector<bool>& marked) {
  assert(marked.size() == gens.rows());
  const std::size_t d = gens.cols();
  std::vector<LinearConstraint> rows;
  for (std::size_t i = 0; i < gens.rows(); ++i)
    if (marked[i]) rows.push_back(LinearConstraint::equal(to_ratvec(gens.row(i)), Rat(0)));
  for (std::size_t i = 0; i < gens.rows(); ++i)
    if (!marked[i]) rows.push_back(LinearConstraint::at_least(to_ratvec(gens.row(i)), Rat(1)));
  FmResult r = fm_solve(d, rows);
  SupportSearch out;
  if (r.feasible)
    out.functional = primitive_integer(r.witness);
  else
    out.farkas = std::move(r.farkas);
  return out;
}

std::vector<std::vector<std::size_t>> triangulate(const RationalCone& c) {
  assert(c.is_pointed());
  std::vector<Vec> rays = c.extreme_rays.row_list();
  if (rays.empty()) return {};

  auto tri = [&](auto&& self,
                 const std::vector<std::size_t>& idxs) -> std::set<std::vector<std::size_t>> {
    IntegerMatrix sub(0, c.ambient);
    for (std::size_t i : idxs) sub.append_row(rays[i]);
    if (idxs.size() == lattice_rank(sub)) return {idxs};

    RationalCone sc = dual_description(sub);
    std::set<std::vector<std::size_t>> out;
    const std::size_t pivot = idxs[0];
    for (std::size_t n = 0; n < sc.facet_normals.rows(); ++n) {
      Vec normal = sc.facet_normals.row(n);
      if (dot(normal, rays[pivot]) == 0) continue;  // facet holds the pivot
      std::vector<std::size_t> facet;
      for (std::size_t i : idxs)
        if (dot(normal, rays[i]) == 0) facet.push_back(i);
      for (std::vector<std::size_t> simplex : self(self, facet)) {
        simplex.push_back(pivot);
        std::sort(simplex.begin(), simplex.end());
        out.insert(std::move(simplex));
      }
    }
    return out;
  };

  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> simplices = tri(tri, all);
  return {simplices.begin(), simplices.end()};
}

std::vector<Vec> parallelepiped_points(const IntegerMatrix& simplex_rays) {
  const std::size_t m = simplex_rays.rows();
  assert(simplex_rays.cols() == m);
  SmithDecomposition sd = smith_normal_form(simplex_rays);
  assert(sd.rank() == m);

  std::vector<long> div(m);
  Int total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    assert(sd.elementary_divisors[i].fits_slong_p());
    div[i] = sd.elementary_divisors[i].get_si();
    total *= sd.elementary_divisors[i];
  }
  assert(total.fits_slong_p());
  const long long count = total.get_si();
  IntegerMatrix vinv = unimodular_inverse(sd.right);

  std::vector<Vec> out;
#pragma omp parallel
  {
    std::vector<Vec> local;
#pragma omp for schedule(static) nowait
    for (long long idx = 1; idx < count; ++idx) {
      // Residue coordinates r of the quotient lattice, mixed radix.
      Vec r(m);
      long long rest = idx;
      for (std::size_t j = 0; j < m; ++j) {
        r[j] = Int(static_cast<long>(rest % div[j]));
        rest /= div[j];
      }
      // A representative of the class, folded into the half-open
      // parallelepiped by subtracting the floor of its ray coordinates.
      Vec x0 = mul_row(r, vinv);
      Vec xv = mul_row(x0, sd.right);
      RatVec z(m);
      for (std::size_t j = 0; j < m; ++j) z[j] = Rat(xv[j]) / Rat(sd.elementary_divisors[j]);
      RatVec t(m, Rat(0));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t[j] += z[i] * sd.left.at(i, j);
      Vec p = x0;
      for (std::size_t i = 0; i < m; ++i) {
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), t[i].get_num().get_mpz_t(), t[i].get_den().get_mpz_t());
        if (fl != 0) p = sub(p, scaled(fl, simplex_rays.row(i)));
      }
      if (!is_zero_vec(p)) local.push_back(std::move(p));
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end(), VecLess{});
  return out;
}

std::vector<Vec> minimalize_candidates(const std::vector<Vec>& candidates,
                                       const IntegerMatrix& facet_normals) {
  const std::size_t n = candidates.size();
  std::vector<char> keep(n, 1);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == static_cast<std::size_t>(i)) continue;
      Vec diff = sub(candidates[i], candidates[j]);
      bool inside = true;
      for (std::size_t f = 0; f < facet_normals.rows() && inside; ++f)
        if (dot(facet_normals.row(f), diff) < 0) inside = false;
      if (inside) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) out.push_back(candidates[i]);
  return out;
}

HilbertBasisResult hilbert_basis(const RationalCone& c, const IntegerMatrix& lattice) {
  HilbertBasisResult res;
  res.unit_lattice = lattice_intersection(lattice, c.lineality_lattice);
  if (lattice.rows() == 0 || c.generators.rows() == 0) return res;
  assert(lattice.cols() == c.ambient);

  // Everything happens inside lattice cap span, then modulo the unit lattice.
  // The lattice must span the cone for these coordinates to exist.
  const IntegerMatrix m = lattice_intersection(lattice, c.span_lattice);
  const std::size_t k = m.rows();
  assert(k == c.dim());

  IntegerMatrix units_in_m(0, k);
  for (std::size_t i = 0; i < res.unit_lattice.rows(); ++i) {
    auto y = solve_left(m, res.unit_lattice.row(i));
    assert(y);
    units_in_m.append_row(*y);
  }
  LatticeQuotient lq = lattice_quotient(k, units_in_m);
  assert(lq.torsion.empty());

  std::vector<Vec> zs;
  for (std::size_t i = 0; i < c.generators.rows(); ++i) {
    // Generators are primitive, so possibly outside the lattice; only their
    // directions matter for the projected cone.
    auto y = solve_left_rational(m, c.generators.row(i));
    assert(y);
    RatVec z(lq.free_rank, Rat(0));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < lq.free_rank; ++b) z[b] += (*y)[a] * lq.free_projection.at(a, b);
    Vec zi = primitive_integer(z);
    if (!is_zero_vec(zi)) zs.push_back(std::move(zi));
  }
  if (zs.empty()) return res;

  RationalCone sharp = dual_description(zs, lq.free_rank);
  assert(sharp.is_pointed());
  assert(sharp.dim() == lq.free_rank);

  std::set<Vec, VecLess> cands;
  for (std::size_t i = 0; i < sharp.extreme_rays.rows(); ++i)
    cands.insert(sharp.extreme_rays.row(i));
  for (const std::vector<std::size_t>& simplex : triangulate(sharp)) {
    IntegerMatrix rays(0, lq.free_rank);
    for (std::size_t i : simplex) rays.append_row(sharp.extreme_rays.row(i));
    for (Vec& p : parallelepiped_points(rays)) cands.insert(std::move(p));
  }
  std::vector<Vec> sorted_cands(cands.begin(), cands.end());
  std::vector<Vec> minimal = minimalize_candidates(sorted_cands, sharp.facet_normals);

  for (const Vec& h : minimal) {
    Vec y = mul_row(h, lq.free_section);
    res.basis.push_back(mul_row(y, m));
  }
  std::sort(res.basis.begin(), res.basis.end(), VecLess{});
  return res;
}

}  // namespace affmon
