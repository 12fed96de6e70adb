#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affmon/monoid.hpp"
#include "affmon/numeric.hpp"

namespace affmon {

/// Face of an affine monoid, identified by the set of generators lying on it.
/// The functional vanishes exactly on those generators and is strictly
/// positive on the others; the improper face (the whole monoid) carries the
/// zero functional.
struct Face {
  std::vector<std::size_t> gen_indices;  // sorted
  Vec functional;
  std::size_t dim = 0;  // rank of the group generated by the face

  bool is_whole_monoid(const AffineMonoid& q) const {
    return gen_indices.size() == q.gens.rows();
  }
  bool operator==(const Face&) const = default;
};

bool face_leq(const Face& a, const Face& b);  // a subface of b (index inclusion)

/// Rejection witness: an integer combination of all generators summing to
/// zero whose coefficients are nonnegative off the proposed support with at
/// least one strictly positive, certifying that some outside generator is
/// forced into any face containing the support.
struct FaceRejection {
  Vec combination;
};

struct FaceCheck {
  std::optional<Face> face;
  std::optional<FaceRejection> rejection;
};

/// Decide whether the given generator index set is exactly the generator set
/// of a face, producing the supporting functional or a rejection witness.
FaceCheck face_from_support(const AffineMonoid& q, const std::vector<std::size_t>& support);

/// The full face lattice, canonically sorted by generator index set. Computed
/// by closing the facet supports of cone(Q) under intersection; every face of
/// the monoid arises this way and keeps the units inside it automatically.
std::vector<Face> enumerate_faces(const AffineMonoid& q);

/// Face lattice by exhaustive filtering of all generator subsets through
/// face_from_support; exponential, used to cross-check enumerate_faces.
std::vector<Face> brute_force_faces(const AffineMonoid& q);

/// The submonoid generated by the face's generators.
AffineMonoid face_submonoid(const AffineMonoid& q, const Face& f);

namespace reference {
std::vector<Face> brute_force_faces_serial(const AffineMonoid& q);
}

}  // namespace affmon
