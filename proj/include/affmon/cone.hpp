#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affmon/matrix.hpp"
#include "affmon/numeric.hpp"

namespace affmon {

/// Rational polyhedral cone with both descriptions. Facet normals live in the
/// linear span of the cone and describe it inside that span:
///   cone = {x in span : n . x >= 0 for every facet normal n}.
struct RationalCone {
  std::size_t ambient = 0;
  IntegerMatrix generators;         // primitive, deduplicated, input order
  IntegerMatrix span_lattice;       // HNF basis of span(cone) cap Z^ambient
  IntegerMatrix lineality_lattice;  // HNF basis of (cone cap -cone) cap Z^ambient
  IntegerMatrix facet_normals;      // primitive, irredundant, sorted
  IntegerMatrix extreme_rays;       // rays extreme modulo lineality, sorted

  std::size_t dim() const { return span_lattice.rows(); }
  std::size_t lineality_dim() const { return lineality_lattice.rows(); }
  bool is_pointed() const { return lineality_lattice.rows() == 0; }
  bool in_span(const Vec& x) const;
  bool contains(const Vec& x) const;
  bool in_relative_interior(const Vec& x) const;
};

/// Build the cone spanned by the given rays (rows) via incremental double
/// description on the polar side. Deterministic for fixed input order.
RationalCone dual_description(const IntegerMatrix& rays);
RationalCone dual_description(const std::vector<Vec>& rays, std::size_t ambient);

/// Search for a covector vanishing on the marked generators and strictly
/// positive on the rest. When none exists `farkas` holds multipliers for the
/// infeasible system (one per row: first the equalities in marked order, then
/// the strict rows in unmarked order).
struct SupportSearch {
  std::optional<Vec> functional;
  RatVec farkas;
};
SupportSearch support_functional(const IntegerMatrix& gens, const std::vector<bool>& marked);

/// Triangulate a pointed cone into simplicial subcones, each an index set
/// into extreme_rays of size dim(). Deterministic placing order.
std::vector<std::vector<std::size_t>> triangulate(const RationalCone& c);

/// Minimal generating set of the monoid cone cap L modulo its units, plus the
/// unit lattice lineality cap L. Requires every cone generator to lie in L.
struct HilbertBasisResult {
  std::vector<Vec> basis;      // sorted, canonical representatives
  IntegerMatrix unit_lattice;  // HNF basis of lineality cap L
};
HilbertBasisResult hilbert_basis(const RationalCone& c, const IntegerMatrix& lattice);

/// Lattice points of the half-open fundamental parallelepiped of a full-rank
/// square ray matrix, zero excluded, sorted. Parallel over residue classes.
std::vector<Vec> parallelepiped_points(const IntegerMatrix& simplex_rays);

/// Irreducible elements among candidates: keep c unless some other nonzero
/// candidate c' has c - c' in the cone cut out by the facet normals (a
/// full-dimensional pointed cone). Parallel over candidates.
std::vector<Vec> minimalize_candidates(const std::vector<Vec>& candidates,
                                       const IntegerMatrix& facet_normals);

namespace reference {

/// Serial counterparts of the parallel kernels, kept as test oracles.
std::vector<Vec> parallelepiped_points_serial(const IntegerMatrix& simplex_rays);
std::vector<Vec> minimalize_candidates_serial(const std::vector<Vec>& candidates,
                                              const IntegerMatrix& facet_normals);

/// Facet normals by Fourier-Motzkin elimination of the combination variables
/// from {x = sum t_i ray_i, t >= 0}; independent oracle for dual_description.
/// Rows may have components outside span(rays); compare by tight sets.
IntegerMatrix dual_description_fm(const IntegerMatrix& rays);

}  // namespace reference

}  // namespace affmon
