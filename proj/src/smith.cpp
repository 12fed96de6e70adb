#include "affmon/smith.hpp"

#include <cassert>
#include <cstdlib>

namespace affmon {

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const Int& d : elementary_divisors)
    if (d != 0) ++r;
  return r;
}

namespace {

// Smallest absolute value among nonzero entries of the submatrix starting at
// (s, s); row-major tie-break. Returns false if the submatrix is zero.
bool locate_pivot(const IntegerMatrix& d, std::size_t s, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = s; i < d.rows(); ++i)
    for (std::size_t j = s; j < d.cols(); ++j) {
      const Int& v = d.at(i, j);
      if (v == 0) continue;
      Int a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

bool row_col_cleared(const IntegerMatrix& d, std::size_t s) {
  for (std::size_t i = s + 1; i < d.rows(); ++i)
    if (d.at(i, s) != 0) return false;
  for (std::size_t j = s + 1; j < d.cols(); ++j)
    if (d.at(s, j) != 0) return false;
  return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  SmithDecomposition s;
  s.left = IntegerMatrix::identity(m.rows());
  s.right = IntegerMatrix::identity(m.cols());
  s.diagonal = m;
  IntegerMatrix& d = s.diagonal;
  std::size_t nmin = std::min(m.rows(), m.cols());

  for (std::size_t k = 0; k < nmin; ++k) {
    std::size_t pi, pj;
    if (!locate_pivot(d, k, pi, pj)) break;  // rest is zero
    for (;;) {
      locate_pivot(d, k, pi, pj);
      d.swap_rows(k, pi);
      s.left.swap_rows(k, pi);
      d.swap_cols(k, pj);
      s.right.swap_cols(k, pj);
      bool reduced_any = false;
      for (std::size_t i = k + 1; i < d.rows(); ++i) {
        if (d.at(i, k) == 0) continue;
        Int q = d.at(i, k) / d.at(k, k);
        if (q != 0) {
          d.add_row_multiple(i, k, -q);
          s.left.add_row_multiple(i, k, -q);
        }
        if (d.at(i, k) != 0) reduced_any = true;  // remainder left, pivot will shrink
      }
      for (std::size_t j = k + 1; j < d.cols(); ++j) {
        if (d.at(k, j) == 0) continue;
        Int q = d.at(k, j) / d.at(k, k);
        if (q != 0) {
          d.add_col_multiple(j, k, -q);
          s.right.add_col_multiple(j, k, -q);
        }
        if (d.at(k, j) != 0) reduced_any = true;
      }
      if (reduced_any) continue;
      if (!row_col_cleared(d, k)) continue;
      // Make the pivot divide every entry to its lower right; if not, fold
      // the offending row in and keep reducing.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < d.rows() && divides_all; ++i)
        for (std::size_t j = k + 1; j < d.cols() && divides_all; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            d.add_row_multiple(k, i, 1);
            s.left.add_row_multiple(k, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (d.at(k, k) < 0) {
      d.negate_row(k);
      s.left.negate_row(k);
    }
  }

  s.elementary_divisors.resize(nmin);
  for (std::size_t k = 0; k < nmin; ++k) s.elementary_divisors[k] = d.at(k, k);
  return s;
}

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
  if (m.cols() == 0) return IntegerMatrix(0, 0);
  if (m.rows() == 0) return IntegerMatrix::identity(m.cols());
  SmithDecomposition s = smith_normal_form(m);
  std::size_t r = s.rank();
  IntegerMatrix basis(0, m.cols());
  for (std::size_t j = r; j < m.cols(); ++j) basis.append_row(s.right.col(j));
  return hermite_normal_form(basis);
}

Vec LatticeQuotient::project_free(const Vec& x) const {
  assert(x.size() == ambient_rank);
  return mul_row(x, free_projection);
}

Vec LatticeQuotient::project_torsion(const Vec& x) const {
  assert(x.size() == ambient_rank);
  Vec t = mul_row(x, torsion_projection);
  for (std::size_t i = 0; i < t.size(); ++i) {
    mpz_mod(t[i].get_mpz_t(), t[i].get_mpz_t(), torsion[i].get_mpz_t());
  }
  return t;
}

LatticeQuotient lattice_quotient(std::size_t ambient_rank, const IntegerMatrix& sublattice_basis) {
  assert(sublattice_basis.rows() == 0 || sublattice_basis.cols() == ambient_rank);
  LatticeQuotient q;
  q.ambient_rank = ambient_rank;
  q.sublattice = sublattice_basis;

  IntegerMatrix b = sublattice_basis;
  if (b.rows() == 0) b = IntegerMatrix(0, ambient_rank);
  SmithDecomposition s = smith_normal_form(b);
  std::size_t r = s.rank();
  q.free_rank = ambient_rank - r;

  // In the coordinates y = x * V the sublattice becomes the span of
  // d_i * e_i, so position i is a free coordinate when d_i is absent or 0,
  // and a torsion coordinate when d_i > 1.
  std::size_t nmin = std::min(b.rows(), ambient_rank);
  std::vector<std::size_t> free_pos, tor_pos;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    if (i >= nmin || s.elementary_divisors[i] == 0)
      free_pos.push_back(i);
    else if (s.elementary_divisors[i] > 1) {
      tor_pos.push_back(i);
      q.torsion.push_back(s.elementary_divisors[i]);
    }
  }
  assert(free_pos.size() == q.free_rank);

  q.free_projection = IntegerMatrix(ambient_rank, q.free_rank);
  for (std::size_t j = 0; j < free_pos.size(); ++j)
    for (std::size_t i = 0; i < ambient_rank; ++i)
      q.free_projection.at(i, j) = s.right.at(i, free_pos[j]);
  q.torsion_projection = IntegerMatrix(ambient_rank, tor_pos.size());
  for (std::size_t j = 0; j < tor_pos.size(); ++j)
    for (std::size_t i = 0; i < ambient_rank; ++i)
      q.torsion_projection.at(i, j) = s.right.at(i, tor_pos[j]);

  // Rows of V^-1 at the free positions map free coordinates back to ambient
  // representatives: (V^-1)_i * V = e_i.
  IntegerMatrix vinv = unimodular_inverse(s.right);
  q.free_section = IntegerMatrix(q.free_rank, ambient_rank);
  for (std::size_t j = 0; j < free_pos.size(); ++j)
    for (std::size_t i = 0; i < ambient_rank; ++i)
      q.free_section.at(j, i) = vinv.at(free_pos[j], i);
  return q;
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  std::size_t rows = h.rows(), cols = h.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Clear the column below pivot_row with row gcd steps.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = pivot_row; i < rows; ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == rows || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
      }
      if (best == rows) break;  // column zero from pivot_row down
      h.swap_rows(pivot_row, best);
      bool clean = true;
      for (std::size_t i = pivot_row + 1; i < rows; ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = h.at(i, col) / h.at(pivot_row, col);
        h.add_row_multiple(i, pivot_row, -q);
        if (h.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(pivot_row, col) == 0) continue;
    if (h.at(pivot_row, col) < 0) h.negate_row(pivot_row);
    // Reduce the entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(pivot_row, col).get_mpz_t());
      if (q != 0) h.add_row_multiple(i, pivot_row, -q);
    }
    ++pivot_row;
  }
  IntegerMatrix out(0, cols);
  for (std::size_t i = 0; i < pivot_row; ++i) out.append_row(h.row(i));
  return out;
}

std::size_t lattice_rank(const IntegerMatrix& m) { return hermite_normal_form(m).rows(); }

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  assert(m.rows() == m.cols());
  // U M V = I (all divisors 1 for a unimodular input), so M^-1 = V U.
  SmithDecomposition s = smith_normal_form(m);
  assert(s.rank() == m.rows());
  for (const Int& d : s.elementary_divisors) assert(d == 1);
  return s.right * s.left;
}

std::optional<Vec> solve_left(const IntegerMatrix& m, const Vec& x) {
  assert(x.size() == m.cols());
  // y M = x  <=>  z D = x V with z = y U^-1, via U M V = D.
  SmithDecomposition s = smith_normal_form(m);
  Vec xv = mul_row(x, s.right);
  std::size_t nmin = std::min(m.rows(), m.cols());
  Vec z(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j < nmin && s.elementary_divisors[j] != 0) {
      if (xv[j] % s.elementary_divisors[j] != 0) return std::nullopt;
      z[j] = xv[j] / s.elementary_divisors[j];
    } else if (xv[j] != 0) {
      return std::nullopt;
    }
  }
  return mul_row(z, s.left);
}

bool in_row_lattice(const IntegerMatrix& m, const Vec& x) { return solve_left(m, x).has_value(); }

std::optional<RatVec> solve_left_rational(const IntegerMatrix& m, const Vec& x) {
  assert(x.size() == m.cols());
  SmithDecomposition s = smith_normal_form(m);
  Vec xv = mul_row(x, s.right);
  std::size_t nmin = std::min(m.rows(), m.cols());
  RatVec z(m.rows(), Rat(0));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j < nmin && s.elementary_divisors[j] != 0)
      z[j] = Rat(xv[j]) / Rat(s.elementary_divisors[j]);
    else if (xv[j] != 0)
      return std::nullopt;
  }
  RatVec y(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) y[j] += z[i] * s.left.at(i, j);
  return y;
}

IntegerMatrix lattice_intersection(const IntegerMatrix& a, const IntegerMatrix& b) {
  std::size_t cols = std::max(a.cols(), b.cols());
  if (a.rows() == 0 || b.rows() == 0) return IntegerMatrix(0, cols);
  assert(a.cols() == b.cols());
  // Left kernel of [A; B]: rows (u | w) with u A + w B = 0, i.e. u A = -w B
  // runs over the intersection.
  IntegerMatrix stacked = vstack(a, b);
  IntegerMatrix lk = kernel_basis(stacked.transposed());
  IntegerMatrix result(0, cols);
  for (std::size_t i = 0; i < lk.rows(); ++i) {
    Vec u(a.rows());
    for (std::size_t j = 0; j < a.rows(); ++j) u[j] = lk.at(i, j);
    result.append_row(mul_row(u, a));
  }
  return hermite_normal_form(result);
}

IntegerMatrix saturate_lattice(const IntegerMatrix& m) {
  // The double integer kernel is the smallest saturated lattice containing
  // the row lattice.
  return hermite_normal_form(kernel_basis(kernel_basis(m)));
}

}  // namespace affmon
