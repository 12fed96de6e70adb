#include "affmon/faces.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "affmon/cone.hpp"
#include "affmon/smith.hpp"

namespace affmon {

namespace {

std::size_t support_rank(const AffineMonoid& q, const std::vector<std::size_t>& idxs) {
  IntegerMatrix m(0, q.ambient);
  for (std::size_t i : idxs) m.append_row(q.gens.row(i));
  return lattice_rank(m);
}

Face face_from_indices(const AffineMonoid& q, std::vector<std::size_t> idxs, Vec functional) {
  Face f;
  f.dim = support_rank(q, idxs);
  f.gen_indices = std::move(idxs);
  f.functional = std::move(functional);
  return f;
}

bool face_order(const Face& a, const Face& b) { return a.gen_indices < b.gen_indices; }

std::vector<std::size_t> mask_indices(unsigned long mask, std::size_t n) {
  std::vector<std::size_t> idxs;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1ul << i)) idxs.push_back(i);
  return idxs;
}

}  // namespace

bool face_leq(const Face& a, const Face& b) {
  return std::includes(b.gen_indices.begin(), b.gen_indices.end(), a.gen_indices.begin(),
                       a.gen_indices.end());
}

FaceCheck face_from_support(const AffineMonoid& q, const std::vector<std::size_t>& support) {
  std::vector<std::size_t> idxs = support;
  std::sort(idxs.begin(), idxs.end());
  idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());
  for (std::size_t i : idxs) assert(i < q.gens.rows());

  std::vector<bool> marked(q.gens.rows(), false);
  for (std::size_t i : idxs) marked[i] = true;

  SupportSearch s = support_functional(q.gens, marked);
  FaceCheck out;
  if (s.functional) {
    out.face = face_from_indices(q, std::move(idxs), std::move(*s.functional));
    return out;
  }

  // Farkas multipliers are ordered marked-then-unmarked; scatter them back to
  // generator positions and clear denominators.
  RatVec comb(q.gens.rows(), Rat(0));
  std::size_t at = 0;
  for (std::size_t i = 0; i < q.gens.rows(); ++i)
    if (marked[i]) comb[i] = s.farkas[at++];
  for (std::size_t i = 0; i < q.gens.rows(); ++i)
    if (!marked[i]) comb[i] = s.farkas[at++];
  assert(at == s.farkas.size());

  Int lcm = 1;
  for (const Rat& c : comb) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Vec w(comb.size());
  for (std::size_t i = 0; i < comb.size(); ++i)
    w[i] = comb[i].get_num() * (lcm / comb[i].get_den());
  Int g = content(w);
  if (g > 1)
    for (Int& x : w) x /= g;

  Vec total(q.ambient, Int(0));
  bool outside_positive = false;
  for (std::size_t i = 0; i < q.gens.rows(); ++i) {
    if (!marked[i]) {
      assert(w[i] >= 0);
      if (w[i] > 0) outside_positive = true;
    }
    if (w[i] != 0) total = add(total, scaled(w[i], q.gens.row(i)));
  }
  assert(is_zero_vec(total));
  assert(outside_positive);
  out.rejection = FaceRejection{std::move(w)};
  return out;
}

std::vector<Face> enumerate_faces(const AffineMonoid& q) {
  const std::size_t n = q.gens.rows();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;

  // Tight generator sets of the facets; every face is an intersection of
  // facets, so closing under these meets yields the whole lattice.
  std::vector<std::vector<std::size_t>> facet_support;
  for (std::size_t f = 0; f < q.cone.facet_normals.rows(); ++f) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (dot(q.cone.facet_normals.row(f), q.gens.row(i)) == 0) s.push_back(i);
    facet_support.push_back(std::move(s));
  }

  std::set<std::vector<std::size_t>> closed;
  std::vector<std::vector<std::size_t>> todo{all};
  closed.insert(all);
  while (!todo.empty()) {
    std::vector<std::size_t> cur = std::move(todo.back());
    todo.pop_back();
    for (const auto& fs : facet_support) {
      std::vector<std::size_t> meet;
      std::set_intersection(cur.begin(), cur.end(), fs.begin(), fs.end(),
                            std::back_inserter(meet));
      if (closed.insert(meet).second) todo.push_back(std::move(meet));
    }
  }

  std::vector<Face> out;
  for (const auto& s : closed) {
    Vec lambda(q.ambient, Int(0));
    for (std::size_t f = 0; f < facet_support.size(); ++f)
      if (std::includes(facet_support[f].begin(), facet_support[f].end(), s.begin(), s.end()))
        lambda = add(lambda, q.cone.facet_normals.row(f));
    out.push_back(face_from_indices(q, s, std::move(lambda)));
  }
  std::sort(out.begin(), out.end(), face_order);
  return out;
}

std::vector<Face> brute_force_faces(const AffineMonoid& q) {
  const std::size_t n = q.gens.rows();
  assert(n <= 20);
  const unsigned long total = 1ul << n;
  std::vector<Face> out;

#pragma omp parallel
  {
    std::vector<Face> local;
#pragma omp for schedule(dynamic, 8) nowait
    for (unsigned long mask = 0; mask < total; ++mask) {
      FaceCheck c = face_from_support(q, mask_indices(mask, n));
      if (c.face) local.push_back(std::move(*c.face));
    }
#pragma omp critical
    out.insert(out.end(), std::make_move_iterator(local.begin()),
               std::make_move_iterator(local.end()));
  }

  std::sort(out.begin(), out.end(), face_order);
  return out;
}

AffineMonoid face_submonoid(const AffineMonoid& q, const Face& f) {
  IntegerMatrix m(0, q.ambient);
  for (std::size_t i : f.gen_indices) m.append_row(q.gens.row(i));
  return make_affine_monoid(m, q.ambient);
}

namespace reference {
std::vector<Face> brute_force_faces_serial(const AffineMonoid& q) {
  const std::size_t n = q.gens.rows();
  assert(n <= 20);
  std::vector<Face> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    FaceCheck c = face_from_support(q, mask_indices(mask, n));
    if (c.face) out.push_back(std::move(*c.face));
  }
  std::sort(out.begin(), out.end(), face_order);
  return out;
}
}  // namespace reference

}  // namespace affmon
