#include "affmon/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>
#include <string>

#include "affmon/smith.hpp"

namespace affmon {

namespace {

const Vec& leading_exp(const Polynomial& f) { return poly_leading(f).exp; }

bool is_constant_monomial(const Vec& exp) {
  return std::all_of(exp.begin(), exp.end(), [](const Int& e) { return e == 0; });
}

struct PairEntry {
  Vec lcm;
  std::size_t i = 0, j = 0;
};

// Buchberger loop charging every reduction against the shared budget. The
// pair with the smallest lcm goes first; coprime leading monomials are
// skipped since their s-polynomial always reduces to zero.
std::vector<Polynomial> buchberger_core(const PolyContext& ctx, std::vector<Polynomial> gens,
                                        ReductionBudget& budget) {
  std::vector<Polynomial> basis;
  for (Polynomial& g : gens) {
    Polynomial h = poly_from_terms(ctx, std::move(g.terms));
    if (!poly_is_zero(h)) basis.push_back(poly_monic(ctx, h));
  }
  auto pair_less = [&ctx](const PairEntry& a, const PairEntry& b) {
    int c = compare_monomials(ctx.order, a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairEntry, decltype(pair_less)> pairs(pair_less);
  auto add_pairs_with = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      pairs.insert(PairEntry{exp_lcm(leading_exp(basis[i]), leading_exp(basis[k])), i, k});
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs_with(k);

  while (!pairs.empty() && !budget.exceeded) {
    PairEntry pr = *pairs.begin();
    pairs.erase(pairs.begin());
    const Vec& li = leading_exp(basis[pr.i]);
    const Vec& lj = leading_exp(basis[pr.j]);
    if (pr.lcm == add(li, lj)) continue;
    Term ti{sub(pr.lcm, li), ring_one(ctx.field)};
    Term tj{sub(pr.lcm, lj), ring_one(ctx.field)};
    Polynomial s = poly_sub(ctx, poly_term_mul(ctx, ti, basis[pr.i]),
                            poly_term_mul(ctx, tj, basis[pr.j]));
    Polynomial r = normal_form(ctx, std::move(s), basis, budget);
    if (budget.exceeded) break;
    if (!poly_is_zero(r)) {
      basis.push_back(poly_monic(ctx, r));
      add_pairs_with(basis.size() - 1);
    }
  }
  if (budget.exceeded) return basis;

  // Minimalize: leading monomials that another leading monomial divides are
  // redundant, and dropping them keeps the basis property. Sorting first
  // makes divisors appear before their multiples.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare_monomials(ctx.order, leading_exp(a), leading_exp(b)) < 0;
  });
  std::vector<Polynomial> minimal;
  for (Polynomial& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& k) {
      return exp_divides(leading_exp(k), leading_exp(g));
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  // Tail reduction leaves every leading monomial fixed, so one pass over the
  // list (reducing against all the others, updated in place) reaches the
  // reduced basis, which is unique for this order.
  for (std::size_t i = 0; i < minimal.size() && !budget.exceeded; ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = poly_monic(ctx, normal_form(ctx, std::move(minimal[i]), others, budget));
  }
  return minimal;
}

Polynomial strip_first_var(const PolyContext& target, const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.terms.size());
  for (const Term& t : f.terms)
    terms.push_back(Term{Vec(t.exp.begin() + 1, t.exp.end()), t.coeff});
  return poly_from_terms(target, std::move(terms));
}

}  // namespace

std::size_t default_reduction_budget() {
  if (const char* env = std::getenv("AFFMON_ORACLE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

Polynomial normal_form(const PolyContext& ctx, Polynomial f,
                       const std::vector<Polynomial>& basis, ReductionBudget& budget) {
  std::vector<Term> remainder;
  Polynomial p = std::move(f);
  while (!poly_is_zero(p)) {
    const Term lt = poly_leading(p);
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (poly_is_zero(g)) continue;
      const Term& lg = poly_leading(g);
      if (!exp_divides(lg.exp, lt.exp)) continue;
      if (!budget.step()) return poly_from_terms(ctx, std::move(remainder));
      std::optional<Scalar> lg_inv = ring_inverse(ctx.field, lg.coeff);
      assert(lg_inv);  // nonzero in a field
      Term q{sub(lt.exp, lg.exp), ring_mul(ctx.field, lt.coeff, *lg_inv)};
      p = poly_sub(ctx, p, poly_term_mul(ctx, q, g));
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      p.terms.erase(p.terms.begin());
    }
  }
  return poly_from_terms(ctx, std::move(remainder));
}

GroebnerResult buchberger(const PolyContext& ctx, std::vector<Polynomial> gens,
                          std::size_t budget) {
  ReductionBudget b{budget};
  GroebnerResult out;
  out.basis = buchberger_core(ctx, std::move(gens), b);
  out.budget_exceeded = b.exceeded;
  out.steps_used = budget - b.remaining;
  if (out.budget_exceeded) out.basis.clear();
  return out;
}

ToricIdealResult toric_ideal(const BaseRingDescriptor& field, const AffineMonoid& q,
                             std::size_t budget) {
  const std::size_t n = q.gens.rows();
  ReductionBudget b{budget};

  // Relations among the generators form the kernel lattice of the generator
  // matrix; its binomials generate the ideal only up to saturation by the
  // product of the variables.
  IntegerMatrix relations = kernel_basis(q.gens.transposed());
  PolyContext aux = make_poly_context(field, n + 1, MonomialOrder::ElimFirst);
  std::vector<Polynomial> gens;
  for (const Vec& v : relations.row_list()) {
    Vec plus(n + 1, 0), minus(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] > 0) plus[i + 1] = v[i];
      if (v[i] < 0) minus[i + 1] = -v[i];
    }
    gens.push_back(poly_sub(aux, poly_monomial(aux, std::move(plus), ring_one(field)),
                            poly_monomial(aux, std::move(minus), ring_one(field))));
  }
  // t * x_1 ... x_n - 1 realizes the saturation; eliminating t afterwards
  // cuts the result back to the original variables.
  gens.push_back(poly_sub(aux, poly_monomial(aux, Vec(n + 1, 1), ring_one(field)),
                          poly_constant(aux, ring_one(field))));

  std::vector<Polynomial> saturated = buchberger_core(aux, std::move(gens), b);
  if (b.exceeded) return ToricIdealResult{{}, true, budget - b.remaining};

  PolyContext main = make_poly_context(field, n, MonomialOrder::Grevlex);
  std::vector<Polynomial> eliminated;
  for (const Polynomial& g : saturated) {
    bool uses_aux = std::any_of(g.terms.begin(), g.terms.end(),
                                [](const Term& t) { return t.exp[0] > 0; });
    if (!uses_aux) eliminated.push_back(strip_first_var(main, g));
  }
  std::vector<Polynomial> reduced = buchberger_core(main, std::move(eliminated), b);
  if (b.exceeded) return ToricIdealResult{{}, true, budget - b.remaining};
  return ToricIdealResult{std::move(reduced), false, budget - b.remaining};
}

long krull_dim_quotient(const PolyContext& ctx, const std::vector<Polynomial>& reduced_basis) {
  std::vector<unsigned long> supports;
  for (const Polynomial& g : reduced_basis) {
    assert(!poly_is_zero(g));
    const Vec& lm = leading_exp(g);
    if (is_constant_monomial(lm)) return -1;
    unsigned long mask = 0;
    for (std::size_t i = 0; i < lm.size(); ++i)
      if (lm[i] > 0) mask |= 1ul << i;
    supports.push_back(mask);
  }
  const std::size_t n = ctx.nvars;
  assert(n < 24);
  long best = 0;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool independent = std::none_of(supports.begin(), supports.end(), [&](unsigned long s) {
      return (s & ~mask) == 0;
    });
    if (independent) best = std::max(best, static_cast<long>(__builtin_popcountl(mask)));
  }
  return best;
}

ContractionResult contract_prime_to_monoid(const BaseRingDescriptor& field,
                                           const std::vector<Polynomial>& prime_gens,
                                           const AffineMonoid& q, std::size_t budget) {
  const std::size_t n = q.gens.rows();
  PolyContext ctx = make_poly_context(field, n, MonomialOrder::Grevlex);
  ContractionResult out;
  ReductionBudget b{budget};

  // The prime is read in the presentation ring, so the defining ideal of
  // the algebra joins the given generators before contracting.
  ToricIdealResult toric = toric_ideal(field, q, budget);
  if (toric.budget_exceeded) {
    out.budget_exceeded = true;
    return out;
  }
  std::vector<Polynomial> joined = toric.basis;
  for (const Polynomial& g : prime_gens) {
    assert(poly_is_zero(g) || poly_leading(g).exp.size() == n);
    joined.push_back(g);
  }
  std::vector<Polynomial> gb = buchberger_core(ctx, std::move(joined), b);
  if (b.exceeded) {
    out.budget_exceeded = true;
    return out;
  }
  for (const Polynomial& g : gb) {
    if (is_constant_monomial(leading_exp(g))) {
      out.proper = false;
      return out;
    }
  }

  // Variables surviving modulo the ideal are exactly the monomials outside
  // the prime; they must span a face for the contraction to be monomial.
  std::vector<std::size_t> surviving;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial xi = poly_variable(ctx, i);
    Polynomial r = normal_form(ctx, std::move(xi), gb, b);
    if (b.exceeded) {
      out.budget_exceeded = true;
      return out;
    }
    if (!poly_is_zero(r)) surviving.push_back(i);
  }
  PrimeCheck pc = prime_from_face_gens(q, surviving);
  if (pc.prime) {
    out.prime = std::move(pc.prime);
  } else {
    out.rejection = std::move(pc.rejection);
    out.rejection_support = std::move(surviving);
  }
  return out;
}

}  // namespace affmon
