#include "affmon/base_ring.hpp"

#include <cassert>

namespace affmon {

namespace {

bool is_prime_power(Int n) {
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      return n == 1;
    }
  return n > 1;
}

Rat reduce_mod(const BaseRingDescriptor& a, const Rat& x) {
  assert(x.get_den() == 1);
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_num().get_mpz_t(), a.modulus.get_mpz_t());
  return Rat(r);
}

}  // namespace

bool is_prime_int(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_squarefree_int(const Int& n) {
  assert(n >= 1);
  Int m = n;
  for (Int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      m /= d;
      if (m % d == 0) return false;
    }
  return true;
}

bool BaseRingDescriptor::is_domain() const {
  switch (kind) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
    case RingKind::Integers:
      return true;
    case RingKind::ModN:
      return is_prime_int(modulus);
    case RingKind::ProductOfFields:
      return factors == 1;
  }
  return false;
}

bool BaseRingDescriptor::is_field() const {
  switch (kind) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return true;
    case RingKind::Integers:
      return false;
    case RingKind::ModN:
      return is_prime_int(modulus);
    case RingKind::ProductOfFields:
      return factors == 1;
  }
  return false;
}

bool BaseRingDescriptor::is_regular() const {
  // Z/n is a product of Z/p^e; each factor is regular exactly when e = 1.
  if (kind == RingKind::ModN) return is_squarefree_int(modulus);
  return true;
}

bool BaseRingDescriptor::is_local() const {
  switch (kind) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return true;
    case RingKind::Integers:
      return false;
    case RingKind::ModN:
      return is_prime_power(modulus);
    case RingKind::ProductOfFields:
      return factors == 1;
  }
  return false;
}

std::size_t BaseRingDescriptor::krull_dim() const {
  return kind == RingKind::Integers ? 1 : 0;
}

std::size_t BaseRingDescriptor::width() const {
  return kind == RingKind::ProductOfFields ? factors : 1;
}

std::string BaseRingDescriptor::name() const {
  switch (kind) {
    case RingKind::Rationals:
      return "rationals";
    case RingKind::PrimeField:
      return "prime field F_" + modulus.get_str();
    case RingKind::Integers:
      return "integers";
    case RingKind::ModN:
      return "integers mod " + modulus.get_str();
    case RingKind::ProductOfFields:
      return "product of " + std::to_string(factors) + " rational fields";
  }
  return "";
}

BaseRingDescriptor ring_rationals() { return {RingKind::Rationals, 0, 1}; }

BaseRingDescriptor ring_prime_field(const Int& p) {
  assert(is_prime_int(p));
  return {RingKind::PrimeField, p, 1};
}

BaseRingDescriptor ring_integers() { return {RingKind::Integers, 0, 1}; }

BaseRingDescriptor ring_integers_mod(const Int& n) {
  assert(n >= 2);
  return {RingKind::ModN, n, 1};
}

BaseRingDescriptor ring_product_of_fields(std::size_t factors) {
  assert(factors >= 2);
  return {RingKind::ProductOfFields, 0, factors};
}

Scalar ring_zero(const BaseRingDescriptor& a) {
  return Scalar{std::vector<Rat>(a.width(), Rat(0))};
}

Scalar ring_one(const BaseRingDescriptor& a) {
  return Scalar{std::vector<Rat>(a.width(), Rat(1))};
}

Scalar ring_from_int(const BaseRingDescriptor& a, const Int& v) {
  return ring_normalize(a, Scalar{std::vector<Rat>(a.width(), Rat(v))});
}

Scalar ring_normalize(const BaseRingDescriptor& a, Scalar x) {
  assert(x.c.size() == a.width());
  if (a.kind == RingKind::PrimeField || a.kind == RingKind::ModN)
    x.c[0] = reduce_mod(a, x.c[0]);
  if (a.kind == RingKind::Integers) assert(x.c[0].get_den() == 1);
  return x;
}

Scalar ring_add(const BaseRingDescriptor& a, const Scalar& x, const Scalar& y) {
  Scalar out = x;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += y.c[i];
  return ring_normalize(a, std::move(out));
}

Scalar ring_sub(const BaseRingDescriptor& a, const Scalar& x, const Scalar& y) {
  Scalar out = x;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= y.c[i];
  return ring_normalize(a, std::move(out));
}

Scalar ring_mul(const BaseRingDescriptor& a, const Scalar& x, const Scalar& y) {
  Scalar out = x;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] *= y.c[i];
  return ring_normalize(a, std::move(out));
}

Scalar ring_neg(const BaseRingDescriptor& a, const Scalar& x) {
  Scalar out = x;
  for (Rat& v : out.c) v = -v;
  return ring_normalize(a, std::move(out));
}

bool ring_is_zero(const Scalar& x) {
  for (const Rat& v : x.c)
    if (v != 0) return false;
  return true;
}

bool ring_is_unit(const BaseRingDescriptor& a, const Scalar& x) {
  switch (a.kind) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return x.c[0] != 0;
    case RingKind::Integers:
      return x.c[0] == 1 || x.c[0] == -1;
    case RingKind::ModN: {
      Int g;
      mpz_gcd(g.get_mpz_t(), x.c[0].get_num().get_mpz_t(), a.modulus.get_mpz_t());
      return g == 1;
    }
    case RingKind::ProductOfFields:
      for (const Rat& v : x.c)
        if (v == 0) return false;
      return true;
  }
  return false;
}

std::optional<Scalar> ring_inverse(const BaseRingDescriptor& a, const Scalar& x) {
  if (!ring_is_unit(a, x)) return std::nullopt;
  Scalar out = ring_one(a);
  switch (a.kind) {
    case RingKind::Rationals:
      out.c[0] = Rat(1) / x.c[0];
      break;
    case RingKind::Integers:
      out.c[0] = x.c[0];
      break;
    case RingKind::PrimeField:
    case RingKind::ModN: {
      Int inv;
      int ok = mpz_invert(inv.get_mpz_t(), x.c[0].get_num().get_mpz_t(), a.modulus.get_mpz_t());
      assert(ok != 0);
      (void)ok;
      out.c[0] = Rat(inv);
      break;
    }
    case RingKind::ProductOfFields:
      for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = Rat(1) / x.c[i];
      break;
  }
  return ring_normalize(a, std::move(out));
}

std::string ring_to_string(const BaseRingDescriptor& a, const Scalar& x) {
  if (a.width() == 1) return x.c[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (i) s += ",";
    s += x.c[i].get_str();
  }
  return s + ")";
}

std::optional<std::pair<Scalar, Scalar>> ring_zero_divisor_pair(const BaseRingDescriptor& a) {
  if (a.is_domain()) return std::nullopt;
  if (a.kind == RingKind::ModN) {
    Int d = 2;
    while (a.modulus % d != 0) ++d;
    return std::pair{ring_from_int(a, d), ring_from_int(a, a.modulus / d)};
  }
  assert(a.kind == RingKind::ProductOfFields);
  Scalar e0 = ring_zero(a), e1 = ring_zero(a);
  e0.c[0] = Rat(1);
  e1.c[1] = Rat(1);
  return std::pair{e0, e1};
}

bool valid_base_prime(const BaseRingDescriptor& a, const BasePrimeSpec& q) {
  switch (a.kind) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return q.p == 0 && q.factor == 0;
    case RingKind::Integers:
      return q.factor == 0 && (q.p == 0 || is_prime_int(q.p));
    case RingKind::ModN:
      return q.factor == 0 && is_prime_int(q.p) && a.modulus % q.p == 0;
    case RingKind::ProductOfFields:
      return q.p == 0 && q.factor < a.factors;
  }
  return false;
}

std::size_t base_prime_height(const BaseRingDescriptor& a, const BasePrimeSpec& q) {
  assert(valid_base_prime(a, q));
  if (a.kind == RingKind::Integers && q.p != 0) return 1;
  return 0;
}

BaseRingDescriptor residue_field(const BaseRingDescriptor& a, const BasePrimeSpec& q) {
  assert(valid_base_prime(a, q));
  switch (a.kind) {
    case RingKind::Rationals:
    case RingKind::ProductOfFields:
      return ring_rationals();
    case RingKind::PrimeField:
      return a;
    case RingKind::Integers:
      return q.p == 0 ? ring_rationals() : ring_prime_field(q.p);
    case RingKind::ModN:
      return ring_prime_field(q.p);
  }
  return ring_rationals();
}

std::string base_prime_name(const BaseRingDescriptor& a, const BasePrimeSpec& q) {
  switch (a.kind) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return "(0)";
    case RingKind::Integers:
    case RingKind::ModN:
      return q.p == 0 ? "(0)" : "(" + q.p.get_str() + ")";
    case RingKind::ProductOfFields:
      return "kernel of projection onto factor " + std::to_string(q.factor);
  }
  return "";
}

}  // namespace affmon
