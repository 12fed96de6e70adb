#include "affmon/matrix.hpp"

#include <cassert>
#include <sstream>

namespace affmon {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols_if_empty) {
  if (rows.empty()) return IntegerMatrix(0, cols_if_empty);
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec IntegerMatrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec IntegerMatrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Vec> IntegerMatrix::row_list() const {
  std::vector<Vec> rs;
  rs.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rs.push_back(row(i));
  return rs;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntegerMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntegerMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntegerMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntegerMatrix::append_row(const Vec& v) {
  assert(rows_ == 0 || v.size() == cols_);
  if (rows_ == 0) cols_ = v.size();
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool IntegerMatrix::is_zero() const {
  for (const Int& x : data_)
    if (x != 0) return false;
  return true;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
  }
  os << ']';
  return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  assert(a.cols() == b.rows());
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Vec mul_row(const Vec& x, const IntegerMatrix& m) {
  assert(x.size() == m.rows());
  Vec r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += x[i] * m.at(i, j);
  }
  return r;
}

Vec mul_col(const IntegerMatrix& m, const Vec& x) {
  assert(x.size() == m.cols());
  Vec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

Int determinant(const IntegerMatrix& m) {
  assert(m.rows() == m.cols());
  std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntegerMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = v;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  assert(a.cols() == b.cols());
  IntegerMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

}  // namespace affmon
