#pragma once

#include <cstddef>
#include <vector>

#include "quadra/errors.hpp"
#include "quadra/rational.hpp"

namespace quadra {

// Dense row-major matrix; small sizes only.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product shape");
    Matrix m(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == S(0)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) m(i, j) += x(i, k) * y(k, j);
      }
    return m;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
    std::vector<S> out(rows_, S(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> a_;
};

using RatMatrix = Matrix<Rational>;

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

const char* to_string(Definiteness d);

struct PsdReport {
  Definiteness verdict;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
};

// Exact LDL^T with symmetric (diagonal) pivoting. A symmetric matrix is PSD
// iff every pivot is >= 0 and a zero remaining diagonal forces a zero row.
PsdReport psd_analysis(const RatMatrix& m);

// Solve A x = b exactly; A square and nonsingular.
std::vector<Rational> solve(const RatMatrix& a, const std::vector<Rational>& b);

}  // namespace quadra
