#ifndef ALTKIT_MATRIX_HPP
#define ALTKIT_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "altkit/error.hpp"
#include "altkit/scalar.hpp"

namespace altkit {

template <class S>
using Vector = std::vector<S>;

// Small dense row-major matrix. Sizes here never exceed a few dozen, so
// everything is plain Gaussian elimination.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, ScalarTraits<S>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarTraits<S>::one();
    return m;
  }

  static Matrix diagonal(std::span<const S> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  // Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vector<S>>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != m.rows_) throw DimensionError("ragged column list");
      for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector<S> column(std::size_t c) const {
    Vector<S> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Vector<S> row(std::size_t r) const {
    return Vector<S>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vector<S> apply(std::span<const S> x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    Vector<S> y(rows_, ScalarTraits<S>::zero());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!ScalarTraits<S>::is_zero(x[c], 0.0)) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (ScalarTraits<S>::is_zero(aik, 0.0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum size mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum size mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, ScalarTraits<S>::magnitude(x));
    return m;
  }

  template <class T>
  Matrix<T> cast() const {
    Matrix<T> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = scalar_cast<T>((*this)(r, c));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

// Entries with magnitude at or below this are treated as zero pivots.
template <class S>
double pivot_threshold(const Matrix<S>& m, double eps) {
  if constexpr (ScalarTraits<S>::exact) return 0.0;
  return eps * std::max(1.0, m.max_abs());
}

template <class S>
struct RowEchelon {
  Matrix<S> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form. Rational mode picks the first nonzero pivot;
// float mode uses partial pivoting and flushes sub-threshold entries.
template <class S>
RowEchelon<S> rref(Matrix<S> m, double eps = kDefaultEps) {
  const double tol = pivot_threshold(m, eps);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    double best_mag = tol;
    for (std::size_t r = row; r < m.rows(); ++r) {
      double mag = ScalarTraits<S>::magnitude(m(r, col));
      if constexpr (ScalarTraits<S>::exact) {
        if (!ScalarTraits<S>::is_zero(m(r, col), 0.0)) {
          best = r;
          break;
        }
      } else {
        if (mag > best_mag) {
          best = r;
          best_mag = mag;
        }
      }
    }
    if (best == m.rows()) {
      if constexpr (!ScalarTraits<S>::exact)
        for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = 0.0;
      continue;
    }
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
    S inv = ScalarTraits<S>::one() / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || ScalarTraits<S>::is_zero(m(r, col), 0.0)) continue;
      S factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
      m(r, col) = ScalarTraits<S>::zero();
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class S>
std::size_t rank(const Matrix<S>& m, double eps = kDefaultEps) {
  return rref(m, eps).pivots.size();
}

// Basis of {x : m x = 0}, one vector per free column, with a 1 in that column.
template <class S>
std::vector<Vector<S>> null_space(const Matrix<S>& m, double eps = kDefaultEps) {
  auto [red, pivots] = rref(m, eps);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector<S>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<S> v(m.cols(), ScalarTraits<S>::zero());
    v[free] = ScalarTraits<S>::one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Row-reduced basis for the span of the given vectors (all of length n).
template <class S>
std::vector<Vector<S>> span_basis(const std::vector<Vector<S>>& vectors, std::size_t n,
                                  double eps = kDefaultEps) {
  if (vectors.empty()) return {};
  Matrix<S> m(vectors.size(), n);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != n) throw DimensionError("span_basis: vector length mismatch");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = vectors[r][c];
  }
  auto [red, pivots] = rref(std::move(m), eps);
  std::vector<Vector<S>> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) basis.push_back(red.row(r));
  return basis;
}

// True when v lies in the span of basis.
template <class S>
bool in_span(const std::vector<Vector<S>>& basis, const Vector<S>& v, double eps = kDefaultEps) {
  auto rows = basis;
  std::size_t before = span_basis(rows, v.size(), eps).size();
  rows.push_back(v);
  return span_basis(rows, v.size(), eps).size() == before;
}

template <class S>
S determinant(Matrix<S> m, double eps = kDefaultEps) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const double tol = pivot_threshold(m, eps);
  const std::size_t n = m.rows();
  S det = ScalarTraits<S>::one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    double best_mag = tol;
    for (std::size_t r = col; r < n; ++r) {
      if constexpr (ScalarTraits<S>::exact) {
        if (!ScalarTraits<S>::is_zero(m(r, col), 0.0)) {
          best = r;
          break;
        }
      } else {
        double mag = ScalarTraits<S>::magnitude(m(r, col));
        if (mag > best_mag) {
          best = r;
          best_mag = mag;
        }
      }
    }
    if (best == n) return ScalarTraits<S>::zero();
    if (best != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(best, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (ScalarTraits<S>::is_zero(m(r, col), 0.0)) continue;
      S factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m, double eps = kDefaultEps) {
  if (!m.square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<S> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = ScalarTraits<S>::one();
  }
  auto [red, pivots] = rref(std::move(aug), eps);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<S> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

template <class S>
bool is_zero_vector(std::span<const S> v, double eps) {
  if constexpr (ScalarTraits<S>::exact) {
    return std::all_of(v.begin(), v.end(), [](const S& x) { return sgn(x) == 0; });
  } else {
    double sq = 0.0;
    for (double x : v) sq += x * x;
    return std::sqrt(sq) <= eps;
  }
}

template <class S>
double norm(std::span<const S> v) {
  double sq = 0.0;
  for (const auto& x : v) {
    double d = ScalarTraits<S>::to_double(x);
    sq += d * d;
  }
  return std::sqrt(sq);
}

template <class S>
bool matrices_equal(const Matrix<S>& a, const Matrix<S>& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!ScalarTraits<S>::is_zero(a(r, c) - b(r, c), eps)) return false;
  return true;
}

}  // namespace altkit

#endif  // ALTKIT_MATRIX_HPP
