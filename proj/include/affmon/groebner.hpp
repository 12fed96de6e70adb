#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affmon/faces.hpp"
#include "affmon/monoid.hpp"
#include "affmon/polynomial.hpp"
#include "affmon/spectrum.hpp"

namespace affmon {

/// Reduction-step budget shared by a chain of basis computations. Every
/// cancellation of a leading term counts as one step; once the budget runs
/// out all remaining work is abandoned and callers must treat the partial
/// output as unusable.
struct ReductionBudget {
  std::size_t remaining = 0;
  bool exceeded = false;

  bool step() {
    if (exceeded) return false;
    if (remaining == 0) {
      exceeded = true;
      return false;
    }
    --remaining;
    return true;
  }
};

/// Default budget: AFFMON_ORACLE_BUDGET from the environment when set to a
/// positive integer, otherwise one million reduction steps.
std::size_t default_reduction_budget();

struct GroebnerResult {
  std::vector<Polynomial> basis;  // reduced: monic, autoreduced, sorted
  bool budget_exceeded = false;
  std::size_t steps_used = 0;
};

/// Buchberger with the coprime-pair criterion, followed by autoreduction.
/// The reduced basis is unique for the context's order, so the output is
/// deterministic however pairs were scheduled.
GroebnerResult buchberger(const PolyContext& ctx, std::vector<Polynomial> gens,
                          std::size_t budget = default_reduction_budget());

/// Remainder of f on division by basis, deterministic (first divisor in
/// basis order wins). Each cancellation charges the budget; on exhaustion
/// the partial remainder is returned with budget.exceeded set.
Polynomial normal_form(const PolyContext& ctx, Polynomial f,
                       const std::vector<Polynomial>& basis, ReductionBudget& budget);

/// Defining ideal of the monoid algebra: the kernel of the surjection from
/// a polynomial ring with one variable per generator. Computed from a
/// lattice basis of the generator relations, saturated by the product of
/// all variables via an auxiliary eliminated variable.
struct ToricIdealResult {
  std::vector<Polynomial> basis;  // reduced grevlex basis, one var per generator
  bool budget_exceeded = false;
  std::size_t steps_used = 0;
};

ToricIdealResult toric_ideal(const BaseRingDescriptor& field, const AffineMonoid& q,
                             std::size_t budget = default_reduction_budget());

/// Krull dimension of ctx's polynomial ring modulo the ideal with the given
/// reduced basis: the largest set of variables meeting no leading-monomial
/// support. Returns -1 for the unit ideal.
long krull_dim_quotient(const PolyContext& ctx, const std::vector<Polynomial>& reduced_basis);

/// Pull a prime of the polynomial ring back along the presentation of the
/// monoid algebra. The variables surviving modulo the prime must span a
/// face; otherwise the rejection certificate explains why the contraction
/// is not monomial.
struct ContractionResult {
  std::optional<MonoidPrime> prime;
  std::optional<FaceRejection> rejection;
  std::vector<std::size_t> rejection_support;  // the non-face support, with rejection
  bool proper = true;            // false when the ideal contains a unit
  bool budget_exceeded = false;
};

ContractionResult contract_prime_to_monoid(const BaseRingDescriptor& field,
                                           const std::vector<Polynomial>& prime_gens,
                                           const AffineMonoid& q,
                                           std::size_t budget = default_reduction_budget());

}  // namespace affmon
