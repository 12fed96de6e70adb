#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affmon/algebra.hpp"
#include "affmon/base_ring.hpp"
#include "affmon/certificate.hpp"
#include "affmon/groebner.hpp"
#include "affmon/monoid.hpp"
#include "affmon/spectrum.hpp"

namespace affmon {

/// Monoid algebra with its canonical monomial log structure, possibly
/// localized at a prime assembled from a face of the monoid, a prime of the
/// base ring and (over a field) extra polynomial generators.
struct LogRingDescriptor {
  BaseRingDescriptor base;
  AffineMonoid monoid;  // acting monoid; after localization its units grow
  bool localized = false;
  std::optional<AffineMonoid> global_monoid;  // the monoid before localization
  std::optional<Face> center_face;            // face the center cuts out
  std::optional<BasePrimeSpec> base_prime;
  std::optional<std::vector<Polynomial>> poly_prime;  // field bases only

  std::string name() const;
};

LogRingDescriptor make_log_ring(const BaseRingDescriptor& base, const AffineMonoid& q);

/// The base ring with everything outside q inverted, when that ring is
/// again in the descriptor family. The integers at a nonzero prime are the
/// one escape (still a regular local domain, handled structurally).
std::optional<BaseRingDescriptor> localize_base(const BaseRingDescriptor& a,
                                                const BasePrimeSpec& q);

/// Center for localization: generators of a face plus a base prime.
struct CenterSpec {
  std::vector<std::size_t> face_gens;
  BasePrimeSpec base_prime;
};

struct LocalizeOutcome {
  std::optional<LogRingDescriptor> ring;
  std::optional<FaceRejection> rejection;  // face generators span no face
  std::vector<std::size_t> rejection_support;  // the non-face support, with rejection
  std::string error;                       // nonempty when the spec is invalid
  bool budget_exceeded = false;
};

LocalizeOutcome localize_log_ring(const LogRingDescriptor& r, const CenterSpec& center);

/// The maximal monomial prime over the zero base prime: its face is the
/// unit face, so the support is the unit generators (empty on a reduced
/// monoid).
CenterSpec maximal_center(const AffineMonoid& q);

/// Localize at a prime given by polynomial generators in the presentation
/// variables (one per monoid generator). Its monomial part must cut out a
/// face; the base must be a field.
LocalizeOutcome localize_at_polynomial_prime(const LogRingDescriptor& r,
                                             const std::vector<Polynomial>& prime_gens,
                                             std::size_t budget = default_reduction_budget());

enum class Verdict { Yes, No, Unsupported };
std::string verdict_name(Verdict v);

struct Decision {
  Verdict verdict = Verdict::Unsupported;
  Certificate certificate;
  bool budget_exceeded = false;
  std::string note;  // one-line summary of what settled it
};

/// Exponents of the ideal carrying the log structure: everything outside
/// the unit group, the maximal monomial prime.
MonoidPrime log_structure_prime(const AffineMonoid& q);

Decision is_local_log(const LogRingDescriptor& r);

/// Does every monomial prime of the monoid stay prime in the algebra, with
/// monomial contraction and face quotients? Fails exactly on zero divisors
/// in the (effective) base.
Decision is_very_solid(const LogRingDescriptor& r, bool use_oracle = false,
                       std::size_t budget = default_reduction_budget());

Decision is_log_regular(const LogRingDescriptor& r, bool use_oracle = false,
                        std::size_t budget = default_reduction_budget());

/// Full pipeline on global data: base and monoid hypotheses, localization
/// at the center, then the regularity criteria for the localized ring.
Decision main_theorem_check(const LogRingDescriptor& r, const CenterSpec& center,
                            bool use_oracle = false,
                            std::size_t budget = default_reduction_budget());

/// Dimension bookkeeping: the localized algebra, its quotient modulo the
/// log ideal, and the acting monoid, with certificate steps. Oracle mode
/// recomputes polynomial-ring dimensions over the residue field.
struct DimensionReport {
  Int dim_total = 0;
  Int dim_quotient = 0;
  Int dim_monoid = 0;
  bool balanced = true;  // total == quotient + monoid
  bool budget_exceeded = false;
  std::vector<CertStep> steps;
};
DimensionReport dimension_report(const LogRingDescriptor& r, bool use_oracle,
                                 std::size_t budget = default_reduction_budget());

}  // namespace affmon
