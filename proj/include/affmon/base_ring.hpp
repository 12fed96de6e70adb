#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affmon/numeric.hpp"

namespace affmon {

/// Closed family of coefficient rings. Everything the decision pipeline
/// distinguishes (domain or not, regular or not, local or not, field fibers)
/// is read off the descriptor; elements are vectors of rationals normalized
/// per kind.
enum class RingKind { Rationals, PrimeField, Integers, ModN, ProductOfFields };

struct BaseRingDescriptor {
  RingKind kind = RingKind::Rationals;
  Int modulus = 0;          // p for PrimeField, n >= 2 for ModN
  std::size_t factors = 1;  // ProductOfFields: number of rational factors, >= 2

  bool is_domain() const;
  bool is_field() const;
  bool is_regular() const;
  bool is_local() const;
  std::size_t krull_dim() const;
  /// Component count of a scalar (factors for products, otherwise 1).
  std::size_t width() const;
  std::string name() const;
  bool operator==(const BaseRingDescriptor&) const = default;
};

BaseRingDescriptor ring_rationals();
BaseRingDescriptor ring_prime_field(const Int& p);
BaseRingDescriptor ring_integers();
BaseRingDescriptor ring_integers_mod(const Int& n);
BaseRingDescriptor ring_product_of_fields(std::size_t factors);

/// Ring element: one rational per component, kept canonical (residues in
/// [0, n) for modular kinds, integral for the integers).
struct Scalar {
  std::vector<Rat> c;
  bool operator==(const Scalar&) const = default;
};

Scalar ring_zero(const BaseRingDescriptor& a);
Scalar ring_one(const BaseRingDescriptor& a);
Scalar ring_from_int(const BaseRingDescriptor& a, const Int& v);
Scalar ring_normalize(const BaseRingDescriptor& a, Scalar x);
Scalar ring_add(const BaseRingDescriptor& a, const Scalar& x, const Scalar& y);
Scalar ring_sub(const BaseRingDescriptor& a, const Scalar& x, const Scalar& y);
Scalar ring_mul(const BaseRingDescriptor& a, const Scalar& x, const Scalar& y);
Scalar ring_neg(const BaseRingDescriptor& a, const Scalar& x);
bool ring_is_zero(const Scalar& x);
bool ring_is_unit(const BaseRingDescriptor& a, const Scalar& x);
std::optional<Scalar> ring_inverse(const BaseRingDescriptor& a, const Scalar& x);
std::string ring_to_string(const BaseRingDescriptor& a, const Scalar& x);

/// Nonzero pair with zero product, when the ring is not a domain.
std::optional<std::pair<Scalar, Scalar>> ring_zero_divisor_pair(const BaseRingDescriptor& a);

/// Prime of the base ring. Integers: p = 0 is the zero prime, otherwise a
/// prime number. ModN: a prime divisor of n. Products: the kernel of the
/// projection onto the given factor. Fields: only the zero prime.
struct BasePrimeSpec {
  Int p = 0;
  std::size_t factor = 0;
  bool operator==(const BasePrimeSpec&) const = default;
};

bool valid_base_prime(const BaseRingDescriptor& a, const BasePrimeSpec& q);
std::size_t base_prime_height(const BaseRingDescriptor& a, const BasePrimeSpec& q);
/// Fraction field of A/q: the coefficient field of the fiber.
BaseRingDescriptor residue_field(const BaseRingDescriptor& a, const BasePrimeSpec& q);
std::string base_prime_name(const BaseRingDescriptor& a, const BasePrimeSpec& q);

bool is_prime_int(const Int& n);
bool is_squarefree_int(const Int& n);

}  // namespace affmon
