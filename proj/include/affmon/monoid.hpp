#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "affmon/cone.hpp"
#include "affmon/matrix.hpp"
#include "affmon/numeric.hpp"
#include "affmon/smith.hpp"

namespace affmon {

/// Finitely generated submonoid of Z^ambient. Generators keep their input
/// order (duplicates and the zero vector are dropped); the cone, the group
/// generated, the unit sublattice and a positive functional are cached at
/// construction and never change.
struct AffineMonoid {
  std::size_t ambient = 0;
  IntegerMatrix gens;
  RationalCone cone;
  IntegerMatrix gp_basis;     // HNF basis of the group generated by gens
  IntegerMatrix units_basis;  // HNF basis of the unit group Q cap -Q
  std::vector<std::size_t> unit_gen_indices;
  /// For unit generator g: nonnegative coefficients over all generators
  /// expressing -g, making inverses constructive.
  std::vector<Vec> unit_inverse_words;
  /// Sum of the facet normals: vanishes exactly on unit generators, strictly
  /// positive on the rest; drives termination of the membership search.
  Vec positive_functional;

  bool is_trivial() const { return gens.rows() == 0; }
  bool is_reduced() const { return units_basis.rows() == 0; }
  std::size_t gp_rank() const { return gp_basis.rows(); }
  bool in_gp(const Vec& x) const { return in_row_lattice(gp_basis, x); }
  /// Canonical representative of x modulo the unit lattice.
  Vec reduce_mod_units(Vec x) const;
};

AffineMonoid make_affine_monoid(const IntegerMatrix& gens, std::size_t ambient);
AffineMonoid make_affine_monoid(const std::vector<Vec>& gens, std::size_t ambient);

/// Total, terminating membership decision. YES carries nonnegative generator
/// coefficients reconstructing x; NO carries the reason: outside the group,
/// outside the cone, or a completed exhaustive search over the finitely many
/// reachable remainders.
struct MembershipResult {
  enum class Refusal { None, OutsideGroup, OutsideCone, SearchExhausted };
  bool member = false;
  Vec coefficients;
  Refusal refusal = Refusal::None;
  std::size_t states_explored = 0;
};
MembershipResult membership(const AffineMonoid& q, const Vec& x);

/// Saturation cone(Q) cap gp(Q) with the root-closedness verdict. When the
/// flag is false, witness_x lies in the saturation but not in Q while
/// witness_n * witness_x does.
struct SaturationResult {
  bool root_closed = false;
  AffineMonoid saturation;
  Vec witness_x;
  Int witness_n;
};
SaturationResult root_closed_and_saturate(const AffineMonoid& q);

/// Monoid generated by gens(Q) and the negatives of the listed generators
/// (the generators of a face); the units of the result are gp(face).
AffineMonoid localize_at_face_gens(const AffineMonoid& q,
                                   const std::vector<std::size_t>& face_gen_indices);

/// Q modulo its unit group, in coordinates of gp(Q)/gp(Q*). Fails with the
/// torsion invariants when the unit group is not pure inside gp(Q).
struct ReducedMonoidResult {
  bool ok = false;
  std::vector<Int> torsion;  // quotient torsion when !ok
  AffineMonoid monoid;       // Q_red, ambient rank = free rank of the quotient
  IntegerMatrix gp_basis;    // coordinates used for gp(Q)
  LatticeQuotient quotient;

  /// Image of an ambient vector of gp(Q) in Q_red coordinates.
  Vec project(const Vec& x) const;
};
ReducedMonoidResult reduced_monoid(const AffineMonoid& q);

/// Finite presentation: n generators, relations between formal nonnegative
/// combinations.
struct PresentedMonoid {
  std::size_t n = 0;
  std::vector<std::pair<Vec, Vec>> relations;
};

/// Universal cancellative torsion-free quotient of a presentation: the image
/// of the standard basis in (Z^n / relation lattice) / torsion. Torsion that
/// was discarded is reported.
struct FromPresentationResult {
  AffineMonoid monoid;
  IntegerMatrix generator_images;  // row i = image of the i-th formal generator
  bool torsion_free = true;
  std::vector<Int> discarded_torsion;
};
FromPresentationResult from_presentation(const PresentedMonoid& p);

}  // namespace affmon
