#pragma once

/*
 * Dense exact matrices over an ExactRing.
 *
 * Storage is row-major. The column-major coordinate order used for the
 * structure matrix is provided by vectorize_column_major rather than by the
 * storage layout.
 */

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "compmat/rings.hpp"

namespace compmat {

template <ExactRing R>
class Matrix {
 public:
  using value_type = typename R::value_type;

  explicit Matrix(R ring = R{}, std::size_t rows = 0, std::size_t cols = 0)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

  static Matrix identity(const R& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  static Matrix from_rows(const R& ring, const std::vector<std::vector<value_type>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(ring, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_integers(const R& ring, const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<value_type>> conv;
    for (const auto& row : rows) {
      auto& out = conv.emplace_back();
      for (long long v : row) out.push_back(ring.from_integer(Integer(v)));
    }
    return from_rows(ring, conv);
  }

  const R& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<value_type> column(std::size_t j) const {
    std::vector<value_type> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!ring_.is_zero(v)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const value_type& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) = (*this)(dst, j) + factor * (*this)(src, j);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const value_type& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) = (*this)(i, dst) + factor * (*this)(i, src);
  }
  void scale_row(std::size_t i, const value_type& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = factor * (*this)(i, j);
  }
  void scale_col(std::size_t j, const value_type& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = factor * (*this)(i, j);
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_shape(b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = c.data_[k] + b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_shape(b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = c.data_[k] - b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix c = a;
    for (auto& v : c.data_) v = -v;
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.ring_ == b.ring_)) throw DomainError("matrix ring mismatch");
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix c(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& aik = a(i, k);
        if (a.ring_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator*(const value_type& s, const Matrix& a) {
    Matrix c = a;
    for (auto& v : c.data_) v = s * v;
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Matrix-vector product.
  std::vector<value_type> apply(std::span<const value_type> v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector shape mismatch");
    std::vector<value_type> out(rows_, ring_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << ring_.format((*this)(i, j));
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  void check_shape(const Matrix& b) const {
    if (!(ring_ == b.ring_)) throw DomainError("matrix ring mismatch");
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DomainError("matrix shape mismatch");
  }

  R ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

/// A^k by repeated multiplication.
template <ExactRing R>
Matrix<R> matrix_power(const Matrix<R>& a, std::size_t k) {
  if (!a.is_square()) throw DomainError("power of a non-square matrix");
  Matrix<R> p = Matrix<R>::identity(a.ring(), a.rows());
  for (std::size_t i = 0; i < k; ++i) p = p * a;
  return p;
}

/// [A^0, A^1, ..., A^(count-1)].
template <ExactRing R>
std::vector<Matrix<R>> matrix_powers(const Matrix<R>& a, std::size_t count) {
  std::vector<Matrix<R>> out;
  if (count == 0) return out;
  out.push_back(Matrix<R>::identity(a.ring(), a.rows()));
  for (std::size_t k = 1; k < count; ++k) out.push_back(out.back() * a);
  return out;
}

/// Coordinates in the basic matrices E^{11}, E^{21}, ..., E^{n1}, E^{12}, ...:
/// ordered first by column, then by row.
template <ExactRing R>
std::vector<typename R::value_type> vectorize_column_major(const Matrix<R>& a) {
  std::vector<typename R::value_type> v;
  v.reserve(a.rows() * a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) v.push_back(a(i, j));
  return v;
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
/// Every division is exact, so it runs over any integral domain.
template <ExactRing R>
typename R::value_type det_fraction_free(const Matrix<R>& a) {
  const R& ring = a.ring();
  if (!a.is_square()) throw DomainError("determinant of a non-square matrix");
  if (!ring.is_domain()) {
    throw DomainError("fraction-free determinant needs an integral domain, got " + ring.descriptor().name());
  }
  const std::size_t n = a.rows();
  if (n == 0) return ring.one();
  Matrix<R> m = a;
  bool negate = false;
  typename R::value_type prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && ring.is_zero(m(p, k))) ++p;
    if (p == n) return ring.zero();
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = ring.divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = ring.zero();
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Reduced row echelon form over a field; pivots[r] is the pivot column of row r.
template <ExactRing R>
struct RowEchelon {
  Matrix<R> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

template <ExactRing R>
RowEchelon<R> rref(const Matrix<R>& a) {
  const R& ring = a.ring();
  if (!ring.is_field()) throw DomainError("row reduction needs a field, got " + ring.descriptor().name());
  Matrix<R> m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && ring.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    m.scale_row(r, ring.inverse(m(r, c)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && !ring.is_zero(m(i, c))) m.add_row_multiple(i, r, -m(i, c));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactRing R>
std::size_t rank(const Matrix<R>& a) {
  return rref(a).rank();
}

/// Basis of {x : A x = 0} over a field; empty iff A is injective.
template <ExactRing R>
std::vector<std::vector<typename R::value_type>> solve_kernel(const Matrix<R>& a) {
  const R& ring = a.ring();
  if (!ring.is_field()) throw DomainError("kernel computation needs a field, got " + ring.descriptor().name());
  const RowEchelon<R> e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<typename R::value_type>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename R::value_type> v(a.cols(), ring.zero());
    v[free] = ring.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Matrix whose columns are the given vectors.
template <ExactRing R>
Matrix<R> from_columns(const R& ring, const std::vector<std::vector<typename R::value_type>>& cols,
                       std::size_t height) {
  Matrix<R> m(ring, height, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != height) throw DomainError("column length mismatch");
    for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

}  // namespace compmat
