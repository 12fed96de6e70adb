#include "affmon/numeric.hpp"

#include <cassert>
#include <sstream>

namespace affmon {

Int dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec negated(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec scaled(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero_vec(const Vec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

Int content(const Vec& a) {
  Int g = 0;
  for (const Int& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Vec primitive(Vec a) {
  Int g = content(a);
  if (g > 1)
    for (Int& x : a) x /= g;
  return a;
}

int lex_compare(const Vec& a, const Vec& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

std::string to_string(const Vec& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const RatVec& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

Vec primitive_integer(const RatVec& a) {
  Int l = 1;
  for (const Rat& q : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  Vec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat s = a[i] * l;
    assert(s.get_den() == 1);
    v[i] = s.get_num();
  }
  return primitive(std::move(v));
}

std::uint64_t Splitmix::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Splitmix::below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

long Splitmix::range(long lo, long hi) {
  assert(lo <= hi);
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace affmon
