#pragma once

#include <cstddef>
#include <vector>

#include "affmon/numeric.hpp"

namespace affmon {

/// One row of a rational linear system: coeffs . x >= rhs or coeffs . x = rhs.
struct LinearConstraint {
  enum class Kind { Equal, AtLeast };
  RatVec coeffs;
  Rat rhs;
  Kind kind = Kind::AtLeast;

  static LinearConstraint equal(RatVec c, Rat r) { return {std::move(c), std::move(r), Kind::Equal}; }
  static LinearConstraint at_least(RatVec c, Rat r) {
    return {std::move(c), std::move(r), Kind::AtLeast};
  }
};

/// Outcome of exact Fourier-Motzkin elimination. When the system is feasible
/// a rational witness is produced; when it is not, `farkas` holds one
/// multiplier per input row (nonnegative on inequality rows) combining the
/// system into a contradiction 0 >= positive (or 0 = nonzero).
struct FmResult {
  bool feasible = false;
  RatVec witness;
  RatVec farkas;
};

/// Decide feasibility of the system over the rationals by eliminating every
/// variable, then back-substitute a witness or report Farkas multipliers.
/// Deterministic: variables are eliminated in index order.
FmResult fm_solve(std::size_t nvars, const std::vector<LinearConstraint>& rows);

/// Eliminate the listed variables only and return the projected system over
/// the remaining ones (rows keep full width; eliminated coordinates are 0).
/// Trivially satisfied and duplicate rows are dropped.
std::vector<LinearConstraint> fm_eliminate(std::size_t nvars, std::vector<LinearConstraint> rows,
                                           const std::vector<std::size_t>& eliminate);

/// Evaluate coeffs . x - rhs.
Rat constraint_slack(const LinearConstraint& c, const RatVec& x);

/// Whether x satisfies the row (slack >= 0, or = 0 for equalities).
bool satisfies(const LinearConstraint& c, const RatVec& x);

}  // namespace affmon
