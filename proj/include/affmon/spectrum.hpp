#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affmon/faces.hpp"
#include "affmon/monoid.hpp"

namespace affmon {

/// Prime ideal of an affine monoid: the complement of a face. Elements are
/// implicit; x in Q lies in the prime exactly when the face functional is
/// positive on x.
struct MonoidPrime {
  Face face;
};

bool in_prime(const MonoidPrime& p, const Vec& x);

/// The spectrum: all primes ordered by containment, with chain heights. The
/// order reverses face inclusion; the empty prime (face = everything) is the
/// unique minimal element and the complement of the unit face the maximal.
struct SpecPoset {
  std::vector<MonoidPrime> primes;   // sorted by face generator set
  std::vector<std::size_t> heights;  // longest chain below each prime
  std::size_t dim = 0;               // longest chain overall

  bool strictly_less(std::size_t i, std::size_t j) const;
  std::size_t minimal_index() const;
  std::size_t maximal_index() const;
};

SpecPoset primes(const AffineMonoid& q);

struct DimHeightResult {
  std::size_t dim_q = 0;
  std::size_t height = 0;
  std::size_t dim_localized = 0;
};

/// dim Q, the chain height of p, and the dimension of the localization at p.
DimHeightResult dim_and_height(const AffineMonoid& q, const MonoidPrime& p);

/// Monoid of differences q - f with f ranging over the complement face of p.
AffineMonoid localize(const AffineMonoid& q, const MonoidPrime& p);

/// Build the prime whose complement is the face generated by the given
/// generator indices; rejects sets that fail the face test.
struct PrimeCheck {
  std::optional<MonoidPrime> prime;
  std::optional<FaceRejection> rejection;
};
PrimeCheck prime_from_face_gens(const AffineMonoid& q, const std::vector<std::size_t>& face_gens);

}  // namespace affmon
