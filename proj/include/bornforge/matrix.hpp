#pragma once

// Dense exact matrices and the Gaussian-elimination kernel: rank, kernel,
// linear solves, inverses and Sylvester signatures.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bornforge/rational.hpp"

namespace bornforge {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ContractError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix diagonal(const std::vector<Rational>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix column(const std::vector<Rational>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }
  /// Standard basis column e_i (0-based) in dimension n.
  static Matrix unit(std::size_t n, std::size_t i) {
    Matrix m(n, 1);
    m(i, 0) = 1;
    return m;
  }
  /// Columns side by side; all must share a row count.
  static Matrix from_columns(const std::vector<Matrix>& cols, std::size_t rows_if_empty = 0) {
    if (cols.empty()) return Matrix(rows_if_empty, 0);
    std::size_t r = cols.front().rows();
    std::size_t c = 0;
    for (const auto& m : cols) {
      if (m.rows() != r) throw ContractError("from_columns: row mismatch");
      c += m.cols();
    }
    Matrix out(r, c);
    std::size_t at = 0;
    for (const auto& m : cols)
      for (std::size_t j = 0; j < m.cols(); ++j, ++at)
        for (std::size_t i = 0; i < r; ++i) out(i, at) = m(i, j);
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Element access for column vectors.
  Rational& operator[](std::size_t i) { return data_[i]; }
  const Rational& operator[](std::size_t i) const { return data_[i]; }

  const std::vector<Rational>& data() const { return data_; }

  Matrix col(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }
  void set_col(std::size_t j, const Matrix& c) {
    if (c.rows() != rows_ || c.cols() != 1) throw ContractError("set_col: shape mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c(i, 0);
  }
  Matrix row(std::size_t i) const {
    Matrix r(1, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
    return r;
  }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ContractError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ContractError("set_block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return sgn(r) == 0; });
  }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }
  bool is_antisymmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  Rational trace() const {
    if (!is_square()) throw ContractError("trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ContractError("matrix product: inner dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    Rational tmp;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (sgn(b(k, j)) == 0) continue;
          tmp = aik * b(k, j);
          c(i, j) += tmp;
        }
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << to_string(m(i, j));
    }
    return os << ']';
  }

 private:
  void check_same(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ContractError(std::string("matrix ") + op + ": shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// a·b − b·a
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Pivots on the first nonzero entry of each column;
/// no tolerance is involved anywhere.
inline RowEchelon rref(Matrix a) {
  RowEchelon out;
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

inline std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

/// Exact basis of {x : A·x = 0}, one column vector per free variable. Empty iff A
/// is injective.
inline std::vector<Matrix> kernel(const Matrix& a) {
  RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Matrix v(a.cols(), 1);
    v(f, 0) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r], 0) = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Kernel basis packed as the columns of one matrix.
inline Matrix kernel_matrix(const Matrix& a) { return Matrix::from_columns(kernel(a), a.cols()); }

/// Some x with A·x = b, free variables set to zero; nullopt when inconsistent.
/// b may carry several right-hand sides as columns.
inline std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ContractError("solve_linear: A and b row counts differ");
  Matrix aug(a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  RowEchelon e = rref(std::move(aug));
  for (auto p : e.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  return x;
}

inline Rational determinant(Matrix a) {
  if (!a.is_square()) throw ContractError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  Rational det = 1, factor;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      factor = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

inline bool is_invertible(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

/// Raised when an inverse is requested for a singular matrix.
class SingularMatrixError : public ContractError {
 public:
  using ContractError::ContractError;
};

inline Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw ContractError("inverse of non-square matrix");
  auto x = solve_linear(a, Matrix::identity(a.rows()));
  if (!x || rank(a) != a.rows()) throw SingularMatrixError("matrix is singular");
  return *x;
}

/// Inertia of a symmetric form.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Signature& s) {
    return os << '(' << s.positive << ',' << s.negative << ',' << s.zero << ')';
  }
};

/// Sylvester signature by symmetric congruence reduction S -> P^T S P.
inline Signature signature_of_symmetric(const Matrix& s) {
  if (!s.is_symmetric()) throw ContractError("signature_of_symmetric: matrix is not symmetric");
  Matrix a = s;
  const std::size_t n = a.rows();
  Signature sig;
  // Simultaneous row/column operations keep the matrix symmetric.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
  };
  auto swap_index = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, p)) == 0) ++p;
    if (p == n) {
      // No usable diagonal entry: create one from an off-diagonal pair.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (sgn(a(i, j)) != 0) {
            add_multiple(i, j, 1);  // a(i,i) becomes 2 a(i,j) + a(j,j) = 2 a(i,j)
            p = i;
            found = true;
          }
      if (!found) {
        sig.zero += n - k;
        return sig;
      }
    }
    if (p != k) swap_index(p, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      Rational f = -a(i, k) / a(k, k);
      add_multiple(i, k, f);
    }
    if (sgn(a(k, k)) > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

/// Independent columns of `a` spanning its column space (first-pivot choice).
inline Matrix column_space(const Matrix& a) {
  RowEchelon e = rref(a);
  std::vector<Matrix> cols;
  for (auto p : e.pivots) cols.push_back(a.col(p));
  return Matrix::from_columns(cols, a.rows());
}

/// True iff column vector v lies in the column span of `basis`.
inline bool in_span(const Matrix& basis, const Matrix& v) {
  if (v.is_zero()) return true;
  if (basis.cols() == 0) return false;
  return rank(Matrix::from_columns({basis, v})) == rank(basis);
}

}  // namespace bornforge
