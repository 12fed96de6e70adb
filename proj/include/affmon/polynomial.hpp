#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "affmon/base_ring.hpp"
#include "affmon/numeric.hpp"

namespace affmon {

/// Monomial orders: graded reverse lexicographic with the declared variable
/// order, and the elimination order that removes variable 0 first (used for
/// lattice-ideal saturation).
enum class MonomialOrder { Grevlex, ElimFirst };

/// Three-way comparison of exponent vectors; positive means a is the larger
/// monomial.
int compare_monomials(MonomialOrder o, const Vec& a, const Vec& b);

struct Term {
  Vec exp;
  Scalar coeff;
  bool operator==(const Term&) const = default;
};

/// Terms kept strictly descending in the active order; the empty list is
/// zero. Coefficients are nonzero field elements.
struct Polynomial {
  std::vector<Term> terms;
  bool operator==(const Polynomial&) const = default;
};

/// Coefficient field (rationals or a prime field), variable count and order.
struct PolyContext {
  BaseRingDescriptor field;
  std::size_t nvars = 0;
  MonomialOrder order = MonomialOrder::Grevlex;
};

PolyContext make_poly_context(const BaseRingDescriptor& field, std::size_t nvars,
                              MonomialOrder order = MonomialOrder::Grevlex);

Polynomial poly_zero();
/// Canonicalize arbitrary terms: sort, combine, drop zero coefficients.
Polynomial poly_from_terms(const PolyContext& ctx, std::vector<Term> terms);
Polynomial poly_monomial(const PolyContext& ctx, Vec exp, Scalar coeff);
Polynomial poly_constant(const PolyContext& ctx, const Scalar& coeff);
Polynomial poly_variable(const PolyContext& ctx, std::size_t var);

bool poly_is_zero(const Polynomial& f);
const Term& poly_leading(const Polynomial& f);
Polynomial poly_add(const PolyContext& ctx, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const PolyContext& ctx, const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const PolyContext& ctx, const Polynomial& a);
Polynomial poly_mul(const PolyContext& ctx, const Polynomial& a, const Polynomial& b);
Polynomial poly_term_mul(const PolyContext& ctx, const Term& t, const Polynomial& a);
Polynomial poly_monic(const PolyContext& ctx, const Polynomial& a);

bool exp_divides(const Vec& a, const Vec& b);  // a | b componentwise
Vec exp_lcm(const Vec& a, const Vec& b);

std::string poly_to_string(const PolyContext& ctx, const Polynomial& f,
                           const std::vector<std::string>& var_names = {});

}  // namespace affmon
