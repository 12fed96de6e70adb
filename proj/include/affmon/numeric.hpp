#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace affmon {

/// Exact arbitrary-precision integer. Everything in this library is exact;
/// there is no floating point anywhere.
using Int = mpz_class;

/// Exact rational, kept in lowest terms by GMP.
using Rat = mpq_class;

/// Row vector of exact integers: lattice points, monoid generators, linear
/// functionals and exponent vectors are all carried by this type.
using Vec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Int dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec negated(const Vec& a);
Vec scaled(const Int& c, const Vec& a);
bool is_zero_vec(const Vec& a);

/// gcd of all entries (nonnegative); 0 for the zero vector.
Int content(const Vec& a);

/// Divide out the content so the entries become coprime. Direction is kept;
/// the zero vector is returned unchanged.
Vec primitive(Vec a);

/// -1, 0 or 1 under lexicographic comparison.
int lex_compare(const Vec& a, const Vec& b);

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_compare(a, b) < 0; }
};

std::string to_string(const Vec& a);
std::string to_string(const RatVec& a);

/// Clear denominators and divide out the content: the unique primitive
/// integer vector pointing in the same direction. Zero stays zero.
Vec primitive_integer(const RatVec& a);

/// Deterministic 64-bit splitmix generator for reproducible sampling in
/// tests and randomized invariant checks.
class Splitmix {
 public:
  explicit Splitmix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi], both ends included.
  long range(long lo, long hi);

 private:
  std::uint64_t state_;
};

}  // namespace affmon
