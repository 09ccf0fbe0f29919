#pragma once

// Finite-dimensional Lie algebras over Q given by exact structure constants,
// plus the structural queries the rest of the library leans on.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bornforge/matrix.hpp"

namespace bornforge {

/// Raised when data that parsed fine describes an invalid object
/// (failing Jacobi identity, degenerate metric, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One nonzero structure constant: [e_i, e_j] has coefficient `coeff` on e_k.
/// Indices are 0-based.
struct BracketTerm {
  std::size_t i, j, k;
  Rational coeff;
};

struct JacobiResult {
  bool holds = true;
  /// First failing basis triple, 1-based, when `holds` is false.
  std::optional<std::array<std::size_t, 3>> witness;
};

class LieAlgebra {
 public:
  /// Abelian algebra of the given dimension.
  explicit LieAlgebra(std::size_t dim, std::string name = {})
      : dim_(dim), c_(dim * dim * dim), name_(std::move(name)) {
    if (dim == 0) throw ContractError("Lie algebra dimension must be at least 1");
  }

  /// Builds from bracket terms with i != j; [e_j, e_i] is filled in by
  /// antisymmetry. Throws ValidationError naming the failing triple when the
  /// Jacobi identity does not hold.
  static LieAlgebra from_brackets(std::size_t dim, const std::vector<BracketTerm>& terms,
                                  std::string name = {}) {
    LieAlgebra l = unchecked(dim, terms, std::move(name));
    l.validate();
    return l;
  }

  /// Same as from_brackets without the Jacobi check. Used to inspect
  /// candidate bracket tables; every other entry point validates.
  static LieAlgebra unchecked(std::size_t dim, const std::vector<BracketTerm>& terms,
                              std::string name = {}) {
    LieAlgebra l(dim, std::move(name));
    for (const auto& t : terms) {
      if (t.i >= dim || t.j >= dim || t.k >= dim) throw ContractError("bracket index out of range");
      if (t.i == t.j) {
        if (!is_zero(t.coeff)) throw ContractError("[e_i, e_i] must vanish");
        continue;
      }
      l.c_[l.at(t.i, t.j, t.k)] += t.coeff;
      l.c_[l.at(t.j, t.i, t.k)] -= t.coeff;
    }
    return l;
  }

  /// From the brackets of basis vectors: columns[i*dim+j] = [e_i, e_j].
  static LieAlgebra from_bracket_columns(std::size_t dim, const std::vector<Matrix>& columns,
                                         std::string name = {}, bool validate = true) {
    LieAlgebra l(dim, std::move(name));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) l.c_[l.at(i, j, k)] = columns[i * dim + j][k];
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (l.c_[l.at(i, j, k)] != -l.c_[l.at(j, i, k)])
            throw ContractError("bracket table is not antisymmetric");
    if (validate) l.validate();
    return l;
  }

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// c_{ij}^k, 0-based.
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[at(i, j, k)]; }

  /// [e_i, e_j] as a column vector.
  Matrix bracket_basis(std::size_t i, std::size_t j) const {
    Matrix v(dim_, 1);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c_[at(i, j, k)];
    return v;
  }

  Matrix bracket(const Matrix& x, const Matrix& y) const {
    if (x.rows() != dim_ || y.rows() != dim_) throw ContractError("bracket: vector dimension mismatch");
    Matrix v(dim_, 1);
    Rational xy;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (i == j || is_zero(y[j])) continue;
        xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!is_zero(c_[at(i, j, k)])) v[k] += xy * c_[at(i, j, k)];
      }
    }
    return v;
  }

  /// Matrix of ad(e_i) = [e_i, .].
  Matrix ad(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c_[at(i, j, k)];
    return m;
  }
  Matrix ad(const Matrix& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (!is_zero(x[i])) m += x[i] * ad(i);
    return m;
  }

  bool is_abelian() const {
    for (const auto& c : c_)
      if (!is_zero(c)) return false;
    return true;
  }

  /// Nonzero structure constants with i < j.
  std::vector<BracketTerm> terms() const {
    std::vector<BracketTerm> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (!is_zero(c_[at(i, j, k)])) out.push_back({i, j, k, c_[at(i, j, k)]});
    return out;
  }

  /// Structure constants in the basis given by the columns of the invertible
  /// matrix `p` (new e'_i = p e_i in old coordinates).
  LieAlgebra change_basis(const Matrix& p) const {
    if (p.rows() != dim_ || !is_invertible(p)) throw ContractError("change_basis: need an invertible matrix");
    Matrix pinv = inverse(p);
    std::vector<Matrix> cols(dim_ * dim_, Matrix(dim_, 1));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        Matrix v = pinv * bracket(p.col(i), p.col(j));
        cols[i * dim_ + j] = v;
        cols[j * dim_ + i] = -v;
      }
    return from_bracket_columns(dim_, cols, name_, false);
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  std::size_t at(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }
  void validate() const;

  std::size_t dim_;
  std::vector<Rational> c_;
  std::string name_;
};

/// Checks Jacobi on all basis triples i < j < k.
inline JacobiResult check_jacobi(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Matrix ei = Matrix::unit(n, i), ej = Matrix::unit(n, j), ek = Matrix::unit(n, k);
        Matrix s = l.bracket(l.bracket_basis(i, j), ek) + l.bracket(l.bracket_basis(j, k), ei) +
                   l.bracket(l.bracket_basis(k, i), ej);
        if (!s.is_zero()) return {false, std::array<std::size_t, 3>{i + 1, j + 1, k + 1}};
      }
  return {};
}

inline void LieAlgebra::validate() const {
  auto r = check_jacobi(*this);
  if (!r.holds) {
    const auto& w = *r.witness;
    throw ValidationError("Jacobi identity fails on (e" + std::to_string(w[0]) + ", e" + std::to_string(w[1]) +
                          ", e" + std::to_string(w[2]) + ")");
  }
}

/// A linear subspace given by independent column vectors.
class Subspace {
 public:
  Subspace() = default;
  /// Keeps an independent subset of the given spanning columns.
  explicit Subspace(const Matrix& spanning) : basis_(column_space(spanning)), ambient_(spanning.rows()) {}
  static Subspace span(const std::vector<Matrix>& vectors, std::size_t ambient) {
    return Subspace(Matrix::from_columns(vectors, ambient));
  }
  static Subspace whole(std::size_t n) { return Subspace(Matrix::identity(n)); }

  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient_dim() const { return ambient_; }
  const Matrix& basis() const { return basis_; }
  Matrix vector(std::size_t i) const { return basis_.col(i); }

  bool contains(const Matrix& v) const { return in_span(basis_, v); }
  bool contains(const Subspace& s) const {
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (!contains(s.vector(i))) return false;
    return true;
  }

 private:
  Matrix basis_;
  std::size_t ambient_ = 0;
};

/// {X : [X, e_i] = 0 for all i}, the kernel of the stacked adjoint maps.
inline Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Matrix stacked(n * n, n);
  // Row block i holds the map X -> [X, e_i] = -ad(e_i) X.
  for (std::size_t i = 0; i < n; ++i) stacked.set_block(i * n, 0, -l.ad(i));
  return Subspace(kernel_matrix(stacked));
}

/// [A, B] for subspaces A, B.
inline Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  std::vector<Matrix> vs;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) vs.push_back(l.bracket(a.vector(i), b.vector(j)));
  return Subspace::span(vs, l.dim());
}

inline Subspace derived_algebra(const LieAlgebra& l) {
  auto g = Subspace::whole(l.dim());
  return bracket_span(l, g, g);
}

/// g, [g,g], [g,[g,g]], ... down to the first repeated term (zero for
/// nilpotent algebras).
inline std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
  std::vector<Subspace> series{Subspace::whole(l.dim())};
  const auto g = series.front();
  while (true) {
    Subspace next = bracket_span(l, g, series.back());
    bool stalled = next.dim() == series.back().dim();
    series.push_back(std::move(next));
    if (series.back().dim() == 0 || stalled) break;
  }
  return series;
}

/// Nilpotency step: the s with g^{s+1} = 0 (1 for abelian algebras);
/// nullopt when the algebra is not nilpotent.
inline std::optional<std::size_t> nil_step(const LieAlgebra& l) {
  auto s = lower_central_series(l);
  if (s.back().dim() != 0) return std::nullopt;
  return s.size() - 1;
}

/// Length of the derived series g, [g,g], [[g,g],[g,g]], ...; nullopt when
/// the algebra is not solvable.
inline std::optional<std::size_t> derived_length(const LieAlgebra& l) {
  Subspace cur = Subspace::whole(l.dim());
  std::size_t len = 0;
  while (cur.dim() != 0) {
    Subspace next = bracket_span(l, cur, cur);
    if (next.dim() == cur.dim()) return std::nullopt;
    cur = std::move(next);
    ++len;
  }
  return len;
}

/// Basis of Der(g) = {D : D[X,Y] = [DX,Y] + [X,DY]}, obtained as the kernel of
/// the linear constraint system in the n^2 entries of D (row-major).
inline std::vector<Matrix> derivations(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  auto var = [n](std::size_t row, std::size_t col) { return row * n + col; };
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> eq(n * n);
        // D[e_i,e_j] component k: sum_l c_ij^l D_kl
        for (std::size_t m = 0; m < n; ++m) eq[var(k, m)] += l.constant(i, j, m);
        // -[D e_i, e_j]_k = -sum_m D_mi c_mj^k
        for (std::size_t m = 0; m < n; ++m) eq[var(m, i)] -= l.constant(m, j, k);
        // -[e_i, D e_j]_k = -sum_m D_mj c_im^k
        for (std::size_t m = 0; m < n; ++m) eq[var(m, j)] -= l.constant(i, m, k);
        bool nonzero = false;
        for (const auto& c : eq) nonzero = nonzero || !is_zero(c);
        if (nonzero) rows.push_back(std::move(eq));
      }
  Matrix system(rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) system(r, c) = rows[r][c];
  std::vector<Matrix> out;
  for (const auto& v : kernel(system)) {
    Matrix d(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d(a, b) = v[var(a, b)];
    out.push_back(std::move(d));
  }
  return out;
}

inline std::size_t dim_der(const LieAlgebra& l) { return derivations(l).size(); }

inline bool is_derivation(const LieAlgebra& l, const Matrix& d) {
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix ei = Matrix::unit(n, i), ej = Matrix::unit(n, j);
      if (d * l.bracket_basis(i, j) != l.bracket(d * ei, ej) + l.bracket(ei, d * ej)) return false;
    }
  return true;
}

/// Killing form K(x, y) = tr(ad x ∘ ad y) as a Gram matrix.
inline Matrix killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad(i));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

/// [S, S] ⊆ S.
inline bool is_subalgebra(const LieAlgebra& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim()) throw ContractError("is_subalgebra: subspace lives in another space");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(l.bracket(s.vector(i), s.vector(j)))) return false;
  return true;
}

/// [S, S] = 0.
inline bool is_abelian_subalgebra(const LieAlgebra& l, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!l.bracket(s.vector(i), s.vector(j)).is_zero()) return false;
  return true;
}

/// Structure constants of a subalgebra in the basis held by `s`.
inline LieAlgebra restrict_to(const LieAlgebra& l, const Subspace& s, std::string name = {}) {
  if (!is_subalgebra(l, s)) throw ValidationError("restrict_to: subspace is not a subalgebra");
  const std::size_t k = s.dim();
  std::vector<Matrix> cols(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto coords = solve_linear(s.basis(), l.bracket(s.vector(i), s.vector(j)));
      cols[i * k + j] = *coords;
    }
  return LieAlgebra::from_bracket_columns(k, cols, std::move(name));
}

/// Block-diagonal brackets on L1 ⊕ L2 (L1 basis first).
inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name = {}) {
  std::vector<BracketTerm> terms;
  for (const auto& t : a.terms()) terms.push_back(t);
  for (const auto& t : b.terms()) terms.push_back({t.i + a.dim(), t.j + a.dim(), t.k + a.dim(), t.coeff});
  return LieAlgebra::from_brackets(a.dim() + b.dim(), terms, std::move(name));
}

/// Heisenberg algebra [e1, e2] = e3.
inline LieAlgebra heisenberg3() { return LieAlgebra::from_brackets(3, {{0, 1, 2, 1}}, "heis3"); }

}  // namespace bornforge
