#include "affmon/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <sstream>

namespace affmon {

namespace {

// Total degree comparison, ties broken by the reverse-lex rule: the last
// nonzero entry of a - b being negative makes a the larger monomial.
int grevlex_compare_from(const Vec& a, const Vec& b, std::size_t from) {
  assert(a.size() == b.size());
  Int da = 0, db = 0;
  for (std::size_t i = from; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > from;) {
    Int d = a[i] - b[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare_monomials(MonomialOrder o, const Vec& a, const Vec& b) {
  if (o == MonomialOrder::ElimFirst) {
    assert(!a.empty() && !b.empty());
    if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
    return grevlex_compare_from(a, b, 1);
  }
  return grevlex_compare_from(a, b, 0);
}

PolyContext make_poly_context(const BaseRingDescriptor& field, std::size_t nvars,
                              MonomialOrder order) {
  assert(field.kind == RingKind::Rationals || field.kind == RingKind::PrimeField);
  return PolyContext{field, nvars, order};
}

Polynomial poly_zero() { return Polynomial{}; }

Polynomial poly_from_terms(const PolyContext& ctx, std::vector<Term> terms) {
  std::map<Vec, Scalar, VecLess> acc;
  for (auto& t : terms) {
    assert(t.exp.size() == ctx.nvars);
    for (const Int& e : t.exp) assert(e >= 0);
    auto [it, inserted] = acc.try_emplace(t.exp, t.coeff);
    if (!inserted) it->second = ring_add(ctx.field, it->second, t.coeff);
  }
  Polynomial out;
  for (auto& [exp, coeff] : acc) {
    Scalar c = ring_normalize(ctx.field, coeff);
    if (!ring_is_zero(c)) out.terms.push_back(Term{exp, std::move(c)});
  }
  std::sort(out.terms.begin(), out.terms.end(), [&](const Term& x, const Term& y) {
    return compare_monomials(ctx.order, x.exp, y.exp) > 0;
  });
  return out;
}

Polynomial poly_monomial(const PolyContext& ctx, Vec exp, Scalar coeff) {
  return poly_from_terms(ctx, {Term{std::move(exp), std::move(coeff)}});
}

Polynomial poly_constant(const PolyContext& ctx, const Scalar& coeff) {
  return poly_monomial(ctx, Vec(ctx.nvars, 0), coeff);
}

Polynomial poly_variable(const PolyContext& ctx, std::size_t var) {
  assert(var < ctx.nvars);
  Vec exp(ctx.nvars, 0);
  exp[var] = 1;
  return poly_monomial(ctx, std::move(exp), ring_one(ctx.field));
}

bool poly_is_zero(const Polynomial& f) { return f.terms.empty(); }

const Term& poly_leading(const Polynomial& f) {
  assert(!f.terms.empty());
  return f.terms.front();
}

Polynomial poly_add(const PolyContext& ctx, const Polynomial& a, const Polynomial& b) {
  std::vector<Term> terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return poly_from_terms(ctx, std::move(terms));
}

Polynomial poly_neg(const PolyContext& ctx, const Polynomial& a) {
  Polynomial out = a;
  for (Term& t : out.terms) t.coeff = ring_neg(ctx.field, t.coeff);
  return out;
}

Polynomial poly_sub(const PolyContext& ctx, const Polynomial& a, const Polynomial& b) {
  return poly_add(ctx, a, poly_neg(ctx, b));
}

Polynomial poly_term_mul(const PolyContext& ctx, const Term& t, const Polynomial& a) {
  std::vector<Term> terms;
  terms.reserve(a.terms.size());
  for (const Term& s : a.terms)
    terms.push_back(Term{add(s.exp, t.exp), ring_mul(ctx.field, s.coeff, t.coeff)});
  return poly_from_terms(ctx, std::move(terms));
}

Polynomial poly_mul(const PolyContext& ctx, const Polynomial& a, const Polynomial& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms.size() * b.terms.size());
  for (const Term& s : a.terms)
    for (const Term& t : b.terms)
      terms.push_back(Term{add(s.exp, t.exp), ring_mul(ctx.field, s.coeff, t.coeff)});
  return poly_from_terms(ctx, std::move(terms));
}

Polynomial poly_monic(const PolyContext& ctx, const Polynomial& a) {
  if (poly_is_zero(a)) return a;
  std::optional<Scalar> lead_inv = ring_inverse(ctx.field, poly_leading(a).coeff);
  assert(lead_inv);  // nonzero in a field
  Scalar inv = *std::move(lead_inv);
  Polynomial out = a;
  for (Term& t : out.terms) t.coeff = ring_mul(ctx.field, t.coeff, inv);
  return out;
}

bool exp_divides(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Vec exp_lcm(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

std::string poly_to_string(const PolyContext& ctx, const Polynomial& f,
                           const std::vector<std::string>& var_names) {
  if (poly_is_zero(f)) return "0";
  auto var_name = [&](std::size_t i) {
    if (i < var_names.size()) return var_names[i];
    return "x" + std::to_string(i);
  };
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    std::string c = ring_to_string(ctx.field, t.coeff);
    bool is_one = c == "1";
    bool constant = std::all_of(t.exp.begin(), t.exp.end(), [](const Int& e) { return e == 0; });
    if (!is_one || constant) {
      os << c;
      wrote = true;
    }
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (wrote) os << "*";
      os << var_name(i);
      if (t.exp[i] > 1) os << "^" << t.exp[i].get_str();
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace affmon
