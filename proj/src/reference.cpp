#include <algorithm>
#include <cassert>
#include <map>
#include <utility>

#include "affmon/cone.hpp"
#include "affmon/fourier_motzkin.hpp"
#include "affmon/smith.hpp"

namespace affmon::reference {

std::vector<Vec> parallelepiped_points_serial(const IntegerMatrix& simplex_rays) {
  const std::size_t m = simplex_rays.rows();
  assert(simplex_rays.cols() == m);
  SmithDecomposition sd = smith_normal_form(simplex_rays);
  assert(sd.rank() == m);

  std::vector<long> div(m);
  Int total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    div[i] = sd.elementary_divisors[i].get_si();
    total *= sd.elementary_divisors[i];
  }
  assert(total.fits_slong_p());
  const long long count = total.get_si();
  IntegerMatrix vinv = unimodular_inverse(sd.right);

  std::vector<Vec> out;
  for (long long idx = 1; idx < count; ++idx) {
    Vec r(m);
    long long rest = idx;
    for (std::size_t j = 0; j < m; ++j) {
      r[j] = Int(static_cast<long>(rest % div[j]));
      rest /= div[j];
    }
    Vec x0 = mul_row(r, vinv);
    RatVec t = *solve_left_rational(simplex_rays, x0);
    Vec p = x0;
    for (std::size_t i = 0; i < m; ++i) {
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), t[i].get_num().get_mpz_t(), t[i].get_den().get_mpz_t());
      if (fl != 0) p = sub(p, scaled(fl, simplex_rays.row(i)));
    }
    if (!is_zero_vec(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), VecLess{});
  return out;
}

std::vector<Vec> minimalize_candidates_serial(const std::vector<Vec>& candidates,
                                              const IntegerMatrix& facet_normals) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool irreducible = true;
    for (std::size_t j = 0; j < candidates.size() && irreducible; ++j) {
      if (j == i) continue;
      Vec diff = sub(candidates[i], candidates[j]);
      bool inside = true;
      for (std::size_t f = 0; f < facet_normals.rows() && inside; ++f)
        if (dot(facet_normals.row(f), diff) < 0) inside = false;
      if (inside) irreducible = false;
    }
    if (irreducible) out.push_back(candidates[i]);
  }
  return out;
}

IntegerMatrix dual_description_fm(const IntegerMatrix& rays) {
  const std::size_t n = rays.rows();
  const std::size_t d = rays.cols();
  const std::size_t nvars = n + d;

  // x = sum t_i ray_i with t >= 0; eliminating t leaves a description in x.
  std::vector<LinearConstraint> rows;
  for (std::size_t j = 0; j < d; ++j) {
    RatVec c(nvars, Rat(0));
    for (std::size_t i = 0; i < n; ++i) c[i] = Rat(rays.at(i, j));
    c[n + j] = Rat(-1);
    rows.push_back(LinearConstraint::equal(std::move(c), Rat(0)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVec c(nvars, Rat(0));
    c[i] = Rat(1);
    rows.push_back(LinearConstraint::at_least(std::move(c), Rat(0)));
  }
  std::vector<std::size_t> kill(n);
  for (std::size_t i = 0; i < n; ++i) kill[i] = i;
  std::vector<LinearConstraint> projected = fm_eliminate(nvars, std::move(rows), kill);

  const std::size_t k = lattice_rank(rays);
  std::map<std::vector<std::size_t>, Vec> by_tight_set;
  for (const LinearConstraint& row : projected) {
    if (row.kind != LinearConstraint::Kind::AtLeast) continue;
    assert(row.rhs == 0);
    RatVec xpart(row.coeffs.begin() + static_cast<std::ptrdiff_t>(n), row.coeffs.end());
    Vec normal = primitive_integer(xpart);
    if (is_zero_vec(normal)) continue;

    std::vector<std::size_t> tight;
    IntegerMatrix tight_rows(0, d);
    bool valid = true;
    for (std::size_t i = 0; i < n && valid; ++i) {
      Int s = dot(normal, rays.row(i));
      if (s < 0) valid = false;
      if (s == 0) {
        tight.push_back(i);
        tight_rows.append_row(rays.row(i));
      }
    }
    assert(valid);
    // Facets are the valid inequalities tight on a rank k-1 set of rays.
    if (lattice_rank(tight_rows) + 1 != k) continue;
    by_tight_set.emplace(std::move(tight), std::move(normal));
  }

  std::vector<Vec> normals;
  normals.reserve(by_tight_set.size());
  for (auto& [tight, normal] : by_tight_set) normals.push_back(std::move(normal));
  std::sort(normals.begin(), normals.end(), VecLess{});
  IntegerMatrix out(0, d);
  for (const Vec& v : normals) out.append_row(v);
  return out;
}

}  // namespace affmon::reference
