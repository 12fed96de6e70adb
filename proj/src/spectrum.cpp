#include "affmon/spectrum.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace affmon {

bool in_prime(const MonoidPrime& p, const Vec& x) { return dot(p.face.functional, x) > 0; }

bool SpecPoset::strictly_less(std::size_t i, std::size_t j) const {
  // Smaller prime = larger face.
  return primes[i].face.gen_indices != primes[j].face.gen_indices &&
         face_leq(primes[j].face, primes[i].face);
}

std::size_t SpecPoset::minimal_index() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < primes.size(); ++i)
    if (primes[i].face.gen_indices.size() > primes[best].face.gen_indices.size()) best = i;
  return best;
}

std::size_t SpecPoset::maximal_index() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < primes.size(); ++i)
    if (primes[i].face.gen_indices.size() < primes[best].face.gen_indices.size()) best = i;
  return best;
}

SpecPoset primes(const AffineMonoid& q) {
  SpecPoset sp;
  std::vector<Face> faces = enumerate_faces(q);
  for (Face& f : faces) sp.primes.push_back({std::move(f)});

  // Longest-chain heights: process primes small to large, i.e. faces large to
  // small.
  const std::size_t k = sp.primes.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sp.primes[a].face.gen_indices.size() > sp.primes[b].face.gen_indices.size();
  });
  sp.heights.assign(k, 0);
  for (std::size_t oi = 0; oi < k; ++oi) {
    std::size_t i = order[oi];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      std::size_t j = order[oj];
      if (sp.strictly_less(j, i)) sp.heights[i] = std::max(sp.heights[i], sp.heights[j] + 1);
    }
    sp.dim = std::max(sp.dim, sp.heights[i]);
  }
  return sp;
}

DimHeightResult dim_and_height(const AffineMonoid& q, const MonoidPrime& p) {
  SpecPoset sp = primes(q);
  DimHeightResult r;
  r.dim_q = sp.dim;
  bool found = false;
  for (std::size_t i = 0; i < sp.primes.size(); ++i)
    if (sp.primes[i].face.gen_indices == p.face.gen_indices) {
      r.height = sp.heights[i];
      found = true;
      break;
    }
  assert(found);
  (void)found;
  r.dim_localized = primes(localize(q, p)).dim;
  return r;
}

AffineMonoid localize(const AffineMonoid& q, const MonoidPrime& p) {
  return localize_at_face_gens(q, p.face.gen_indices);
}

PrimeCheck prime_from_face_gens(const AffineMonoid& q,
                                const std::vector<std::size_t>& face_gens) {
  FaceCheck c = face_from_support(q, face_gens);
  PrimeCheck out;
  if (c.face)
    out.prime = MonoidPrime{std::move(*c.face)};
  else
    out.rejection = std::move(c.rejection);
  return out;
}

}  // namespace affmon
