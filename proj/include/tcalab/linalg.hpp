#pragma once

#include "tcalab/errors.hpp"
#include "tcalab/rational.hpp"

#include <string>
#include <vector>

namespace tcalab {

// Dense matrix of exact rationals. Empty (0 x n, n x 0) shapes are valid.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw Error(Errc::InvalidInput, "matrix shape mismatch in product");
    Matrix z(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        const Rational& v = x(i, k);
        if (v == 0) continue;
        for (int j = 0; j < y.c_; ++j) z(i, j) += v * y(k, j);
      }
    return z;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw Error(Errc::InvalidInput, "matrix shape mismatch in difference");
    Matrix z = x;
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
    return z;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

// Rank by fraction-free (Bareiss) elimination after clearing denominators row by row.
inline int rank(const Matrix& m) {
  const int R = m.rows(), C = m.cols();
  std::vector<std::vector<BigInt>> A(R, std::vector<BigInt>(C));
  for (int i = 0; i < R; ++i) {
    BigInt l = 1;
    for (int j = 0; j < C; ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
    for (int j = 0; j < C; ++j) A[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
  }
  int r = 0;
  BigInt prev = 1;
  for (int c = 0; c < C && r < R; ++c) {
    int p = r;
    while (p < R && A[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(A[p], A[r]);
    for (int i = r + 1; i < R; ++i) {
      for (int j = c + 1; j < C; ++j) A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) / prev;
      A[i][c] = 0;
    }
    prev = A[r][c];
    ++r;
  }
  return r;
}

// Rank by plain rational Gaussian elimination; kept as an independent check of rank().
inline int rank_rational(Matrix m) {
  const int R = m.rows(), C = m.cols();
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = r;
    while (p < R && m(p, c) == 0) ++p;
    if (p == R) continue;
    for (int j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
    for (int i = r + 1; i < R; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (int j = c; j < C; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

// Basis of {x : m x = 0}, from the reduced row echelon form.
inline std::vector<std::vector<Rational>> nullspace(Matrix m) {
  const int R = m.rows(), C = m.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = r;
    while (p < R && m(p, c) == 0) ++p;
    if (p == R) continue;
    for (int j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = Rational(1) / m(r, c);
    for (int j = 0; j < C; ++j) m(r, j) *= inv;
    for (int i = 0; i < R; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (int j = 0; j < C; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(C, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(C);
    v[f] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m(static_cast<int>(k), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tcalab
