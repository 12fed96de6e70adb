#include "affmon/fourier_motzkin.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace affmon {

namespace {

using Kind = LinearConstraint::Kind;

// Working row: a . x (kind) b, derived from the input system as
// sum_i mult[i] * input_i with mult[i] >= 0 on AtLeast inputs.
struct WorkRow {
  RatVec a;
  Rat b;
  Kind kind;
  RatVec mult;
};

bool zero_coeffs(const WorkRow& r) {
  for (const Rat& c : r.a)
    if (c != 0) return false;
  return true;
}

// Scale by a positive rational so (a, b) becomes a primitive integer vector;
// equalities additionally get a positive leading coefficient. Multipliers are
// scaled along so the derivation stays valid.
void normalize_row(WorkRow& r) {
  Int lcm = 1;
  for (const Rat& c : r.a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.b.get_den().get_mpz_t());
  Int content = 0;
  for (const Rat& c : r.a) {
    Int scaled = c.get_num() * (lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  Int rb = r.b.get_num() * (lcm / r.b.get_den());
  mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), rb.get_mpz_t());
  if (content == 0) content = 1;
  Rat scale = Rat(lcm) / Rat(content);
  if (r.kind == Kind::Equal) {
    for (const Rat& c : r.a) {
      if (c == 0) continue;
      if (c < 0) scale = -scale;
      break;
    }
  }
  for (Rat& c : r.a) c *= scale;
  r.b *= scale;
  for (Rat& m : r.mult) m *= scale;
}

std::string row_key(const WorkRow& r) {
  std::string key = r.kind == Kind::Equal ? "=" : ">";
  for (const Rat& c : r.a) {
    key += c.get_str();
    key += ',';
  }
  key += ';';
  key += r.b.get_str();
  return key;
}

// Drops tautologies and duplicates; returns a contradictory row if one of the
// fully-eliminated rows is unsatisfiable.
std::optional<WorkRow> sweep(std::vector<WorkRow>& rows) {
  std::vector<WorkRow> kept;
  std::map<std::string, bool> seen;
  for (WorkRow& r : rows) {
    if (zero_coeffs(r)) {
      const bool bad = r.kind == Kind::Equal ? r.b != 0 : r.b > 0;
      if (bad) return std::move(r);
      continue;
    }
    normalize_row(r);
    std::string key = row_key(r);
    if (seen.count(key)) continue;
    seen[key] = true;
    kept.push_back(std::move(r));
  }
  rows = std::move(kept);
  return std::nullopt;
}

// Record of one eliminated variable, kept for back-substitution.
struct Elimination {
  std::size_t var = 0;
  std::optional<WorkRow> pivot;   // equality used to solve for var
  std::vector<WorkRow> lower;     // a[var] > 0
  std::vector<WorkRow> upper;     // a[var] < 0
};

struct Engine {
  std::vector<WorkRow> rows;
  std::vector<Elimination> trail;
  std::optional<WorkRow> contradiction;

  void eliminate(std::size_t var) {
    if (contradiction) return;
    Elimination rec;
    rec.var = var;

    std::size_t eq_pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].kind == Kind::Equal && rows[i].a[var] != 0) {
        eq_pivot = i;
        break;
      }
    }

    std::vector<WorkRow> next;
    if (eq_pivot < rows.size()) {
      WorkRow pivot = std::move(rows[eq_pivot]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == eq_pivot) continue;
        WorkRow r = std::move(rows[i]);
        if (r.a[var] != 0) {
          Rat f = r.a[var] / pivot.a[var];
          for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] -= f * pivot.a[j];
          r.b -= f * pivot.b;
          for (std::size_t j = 0; j < r.mult.size(); ++j) r.mult[j] -= f * pivot.mult[j];
          r.a[var] = 0;
        }
        next.push_back(std::move(r));
      }
      rec.pivot = std::move(pivot);
    } else {
      std::vector<WorkRow> zero;
      for (WorkRow& r : rows) {
        if (r.a[var] > 0)
          rec.lower.push_back(std::move(r));
        else if (r.a[var] < 0)
          rec.upper.push_back(std::move(r));
        else
          zero.push_back(std::move(r));
      }
      next = std::move(zero);
      for (const WorkRow& p : rec.lower) {
        for (const WorkRow& q : rec.upper) {
          // alpha, beta > 0 cancel var; nonnegative combination keeps AtLeast.
          Rat alpha = -q.a[var];
          Rat beta = p.a[var];
          WorkRow r;
          r.kind = Kind::AtLeast;
          r.a.resize(p.a.size());
          for (std::size_t j = 0; j < p.a.size(); ++j) r.a[j] = alpha * p.a[j] + beta * q.a[j];
          r.b = alpha * p.b + beta * q.b;
          r.mult.resize(p.mult.size());
          for (std::size_t j = 0; j < p.mult.size(); ++j)
            r.mult[j] = alpha * p.mult[j] + beta * q.mult[j];
          r.a[var] = 0;
          next.push_back(std::move(r));
        }
      }
    }

    rows = std::move(next);
    contradiction = sweep(rows);
    trail.push_back(std::move(rec));
  }
};

Rat eval_rest(const WorkRow& r, std::size_t var, const RatVec& x) {
  Rat s = 0;
  for (std::size_t j = 0; j < r.a.size(); ++j) {
    if (j == var) continue;
    s += r.a[j] * x[j];
  }
  return s;
}

}  // namespace

FmResult fm_solve(std::size_t nvars, const std::vector<LinearConstraint>& input) {
  Engine eng;
  eng.rows.reserve(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    WorkRow r;
    r.a = input[i].coeffs;
    r.a.resize(nvars, Rat(0));
    r.b = input[i].rhs;
    r.kind = input[i].kind;
    r.mult.assign(input.size(), Rat(0));
    r.mult[i] = 1;
    eng.rows.push_back(std::move(r));
  }
  eng.contradiction = sweep(eng.rows);
  for (std::size_t v = 0; v < nvars && !eng.contradiction; ++v) eng.eliminate(v);

  FmResult res;
  if (eng.contradiction) {
    res.feasible = false;
    res.farkas = std::move(eng.contradiction->mult);
    res.farkas.resize(input.size(), Rat(0));
    return res;
  }

  res.feasible = true;
  RatVec x(nvars, Rat(0));
  for (auto it = eng.trail.rbegin(); it != eng.trail.rend(); ++it) {
    const Elimination& rec = *it;
    if (rec.pivot) {
      const WorkRow& p = *rec.pivot;
      x[rec.var] = (p.b - eval_rest(p, rec.var, x)) / p.a[rec.var];
      continue;
    }
    std::optional<Rat> lo, hi;
    for (const WorkRow& r : rec.lower) {
      Rat bound = (r.b - eval_rest(r, rec.var, x)) / r.a[rec.var];
      if (!lo || bound > *lo) lo = bound;
    }
    for (const WorkRow& r : rec.upper) {
      Rat bound = (r.b - eval_rest(r, rec.var, x)) / r.a[rec.var];
      if (!hi || bound < *hi) hi = bound;
    }
    if (lo && hi)
      x[rec.var] = (*lo + *hi) / 2;
    else if (lo)
      x[rec.var] = *lo;
    else if (hi)
      x[rec.var] = *hi;
  }
  res.witness = std::move(x);
  return res;
}

std::vector<LinearConstraint> fm_eliminate(std::size_t nvars, std::vector<LinearConstraint> rows,
                                           const std::vector<std::size_t>& eliminate) {
  Engine eng;
  eng.rows.reserve(rows.size());
  for (LinearConstraint& c : rows) {
    WorkRow r;
    r.a = std::move(c.coeffs);
    r.a.resize(nvars, Rat(0));
    r.b = std::move(c.rhs);
    r.kind = c.kind;
    eng.rows.push_back(std::move(r));
  }
  eng.contradiction = sweep(eng.rows);
  for (std::size_t v : eliminate) {
    if (eng.contradiction) break;
    eng.eliminate(v);
  }
  std::vector<LinearConstraint> out;
  if (eng.contradiction) {
    // Infeasible projection: report the single contradictory constant row.
    WorkRow& r = *eng.contradiction;
    out.push_back({RatVec(nvars, Rat(0)), std::move(r.b), r.kind});
    return out;
  }
  out.reserve(eng.rows.size());
  for (WorkRow& r : eng.rows) out.push_back({std::move(r.a), std::move(r.b), r.kind});
  return out;
}

Rat constraint_slack(const LinearConstraint& c, const RatVec& x) {
  Rat s = -c.rhs;
  for (std::size_t j = 0; j < c.coeffs.size() && j < x.size(); ++j) s += c.coeffs[j] * x[j];
  return s;
}

bool satisfies(const LinearConstraint& c, const RatVec& x) {
  Rat s = constraint_slack(c, x);
  return c.kind == LinearConstraint::Kind::Equal ? s == 0 : s >= 0;
}

}  // namespace affmon
