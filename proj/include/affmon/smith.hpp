#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affmon/matrix.hpp"
#include "affmon/numeric.hpp"

namespace affmon {

/// U * M * V = D with U, V unimodular and D diagonal, the diagonal forming a
/// divisibility chain d1 | d2 | ... with nonnegative entries.
struct SmithDecomposition {
  IntegerMatrix left;              // U
  IntegerMatrix diagonal;          // D
  IntegerMatrix right;             // V
  std::vector<Int> elementary_divisors;  // length min(rows, cols)

  std::size_t rank() const;
};

/// Deterministic Smith normal form. Pivot rule: smallest absolute value in
/// the active submatrix, row-major tie-break.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Basis of the integer kernel {v : M v^T = 0}, one basis vector per row,
/// canonicalized by Hermite normal form. The kernel of an integer matrix is
/// automatically saturated in the ambient lattice.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

/// The quotient of Z^ambient_rank by the row lattice of a sublattice basis:
/// free rank, torsion invariants (elementary divisors > 1), and explicit
/// projections onto free and torsion coordinates.
struct LatticeQuotient {
  std::size_t ambient_rank = 0;
  IntegerMatrix sublattice;          // the input basis
  std::size_t free_rank = 0;
  std::vector<Int> torsion;          // invariants > 1
  IntegerMatrix free_projection;     // ambient_rank x free_rank
  IntegerMatrix torsion_projection;  // ambient_rank x torsion.size()
  /// Section of the free projection: free_rank x ambient_rank; each row is a
  /// preimage of the corresponding free coordinate vector.
  IntegerMatrix free_section;

  Vec project_free(const Vec& x) const;
  /// Torsion coordinates reduced into [0, invariant).
  Vec project_torsion(const Vec& x) const;
};

LatticeQuotient lattice_quotient(std::size_t ambient_rank, const IntegerMatrix& sublattice_basis);

/// Row-style Hermite normal form of the row lattice: pivots positive,
/// entries above a pivot reduced into [0, pivot), zero rows dropped. Two row
/// sets generate the same lattice iff their HNFs are equal.
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

std::size_t lattice_rank(const IntegerMatrix& m);

/// Exact inverse of a matrix with determinant +-1.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

/// Solve y * M = x over the integers.
std::optional<Vec> solve_left(const IntegerMatrix& m, const Vec& x);

/// Solve y * M = x over the rationals.
std::optional<RatVec> solve_left_rational(const IntegerMatrix& m, const Vec& x);

/// Whether x lies in the row lattice of m.
bool in_row_lattice(const IntegerMatrix& m, const Vec& x);

/// Basis (rows, HNF) of the intersection of two row lattices in the same
/// ambient lattice.
IntegerMatrix lattice_intersection(const IntegerMatrix& a, const IntegerMatrix& b);

/// Basis (rows, HNF) of the saturation of the row lattice: the set of ambient
/// vectors with a positive multiple inside the lattice.
IntegerMatrix saturate_lattice(const IntegerMatrix& m);

}  // namespace affmon
