#pragma once

#include <map>
#include <string>

#include "affmon/base_ring.hpp"
#include "affmon/certificate.hpp"
#include "affmon/numeric.hpp"
#include "affmon/spectrum.hpp"

namespace affmon {

/// Element of a monoid algebra over a base ring: finitely many exponent
/// vectors, each with a nonzero coefficient. Multiplication adds exponents.
struct AlgebraElement {
  std::map<Vec, Scalar, VecLess> terms;
  bool operator==(const AlgebraElement&) const = default;
};

AlgebraElement alg_zero();
AlgebraElement alg_monomial(const BaseRingDescriptor& a, Vec exp, Scalar coeff);
AlgebraElement alg_one(const BaseRingDescriptor& a, std::size_t ambient);
bool alg_is_zero(const AlgebraElement& x);
AlgebraElement alg_add(const BaseRingDescriptor& a, const AlgebraElement& x,
                       const AlgebraElement& y);
AlgebraElement alg_sub(const BaseRingDescriptor& a, const AlgebraElement& x,
                       const AlgebraElement& y);
AlgebraElement alg_mul(const BaseRingDescriptor& a, const AlgebraElement& x,
                       const AlgebraElement& y);
AlgebraElement alg_scale(const BaseRingDescriptor& a, const Scalar& s, const AlgebraElement& x);
std::string alg_to_string(const BaseRingDescriptor& a, const AlgebraElement& x);

/// Image under the quotient by a monomial prime: every term whose exponent
/// lies in the prime is deleted, the rest is a combination of face
/// monomials.
AlgebraElement alg_normal_form(const AlgebraElement& x, const MonoidPrime& p);

/// Certificate that the quotient by the monomial prime p is the algebra of
/// its complementary face: the face monomials survive as a basis, products
/// of generator pairs land on the right side, and the two reasoning steps
/// record why the induced map is injective and surjective.
Certificate face_quotient_iso(const BaseRingDescriptor& a, const AffineMonoid& q,
                              const MonoidPrime& p);

}  // namespace affmon
