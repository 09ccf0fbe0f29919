#pragma once

// Left-invariant pseudo-Riemannian geometry on a Lie algebra: bilinear forms,
// recursion operators, adjoints, the Levi-Civita connection, curvature and the
// flat / Einstein / Ricci-soliton classifiers.
//
// Conventions: forms act by a(X,Y) = Xᵀ G Y. Endomorphism matrices act on
// column vectors. R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]} Z and
// ric(X,Y) = tr(Z ↦ R(Z,X)Y).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bornforge/exterior.hpp"
#include "bornforge/lie_algebra.hpp"

namespace bornforge {

enum class FormKind { symmetric, antisymmetric };

/// Gram matrix of a symmetric or antisymmetric bilinear form.
class BilinearForm {
 public:
  BilinearForm() = default;
  BilinearForm(Matrix gram, FormKind kind) : gram_(std::move(gram)), kind_(kind) {
    if (!gram_.is_square()) throw ContractError("bilinear form needs a square Gram matrix");
    if (kind_ == FormKind::symmetric && !gram_.is_symmetric())
      throw ContractError("Gram matrix is not symmetric");
    if (kind_ == FormKind::antisymmetric && !gram_.is_antisymmetric())
      throw ContractError("Gram matrix is not antisymmetric");
  }
  static BilinearForm symmetric(Matrix g) { return {std::move(g), FormKind::symmetric}; }
  static BilinearForm antisymmetric(Matrix g) { return {std::move(g), FormKind::antisymmetric}; }

  const Matrix& gram() const { return gram_; }
  FormKind kind() const { return kind_; }
  std::size_t dim() const { return gram_.rows(); }
  bool nondegenerate() const { return is_invertible(gram_); }

  Rational operator()(const Matrix& x, const Matrix& y) const { return (x.transpose() * gram_ * y)(0, 0); }

  /// The pulled-back form (x, y) ↦ a(Tx, Ty).
  BilinearForm pullback(const Matrix& t) const { return {t.transpose() * gram_ * t, kind_}; }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  Matrix gram_;
  FormKind kind_ = FormKind::symmetric;
};

/// Symmetric bilinear form e^i⊙e^j = e^i⊗e^j + e^j⊗e^i helper for literals.
inline Matrix sym_pair(std::size_t n, std::size_t i, std::size_t j, const Rational& c = 1) {
  Matrix m(n, n);
  m(i, j) += c;
  m(j, i) += c;
  return m;
}

/// 2-form Σ_{i<j} ω_{ij} e^{ij} with ω_{ij} = ω(e_i, e_j).
inline KForm to_kform(const BilinearForm& omega) {
  if (omega.kind() != FormKind::antisymmetric) throw ContractError("to_kform expects a two-form");
  KForm f(2, omega.dim());
  for (std::size_t i = 0; i < omega.dim(); ++i)
    for (std::size_t j = i + 1; j < omega.dim(); ++j) f.add({i, j}, omega.gram()(i, j));
  return f;
}

inline BilinearForm from_kform(const KForm& f) {
  if (f.degree != 2) throw ContractError("from_kform expects degree 2");
  Matrix g(f.ambient_dim, f.ambient_dim);
  for (const auto& [idx, c] : f.coeffs) {
    g(idx[0], idx[1]) = c;
    g(idx[1], idx[0]) = -c;
  }
  return BilinearForm::antisymmetric(g);
}

/// The unique A with a(A·,·) = b(·,·), i.e. Aᵀ G_a = G_b.
inline Matrix recursion_operator(const BilinearForm& a, const BilinearForm& b) {
  if (a.dim() != b.dim()) throw ContractError("recursion_operator: dimension mismatch");
  if (!a.nondegenerate()) throw ValidationError("recursion base degenerate");
  return (b.gram() * inverse(a.gram())).transpose();
}

/// f* with h(f·,·) = h(·,f*·): f* = G⁻¹ fᵀ G.
inline Matrix adjoint(const Matrix& f, const BilinearForm& h) {
  if (h.kind() != FormKind::symmetric) throw ContractError("adjoint needs a symmetric form");
  if (!h.nondegenerate()) throw ValidationError("adjoint: metric is degenerate");
  return inverse(h.gram()) * f.transpose() * h.gram();
}

inline Matrix sym_part(const Matrix& f, const BilinearForm& h) { return frac(1, 2) * (f + adjoint(f, h)); }
inline Matrix antisym_part(const Matrix& f, const BilinearForm& h) { return frac(1, 2) * (f - adjoint(f, h)); }

/// Left-invariant affine connection: gamma[i] is the matrix of ∇_{e_i}
/// (column j holds ∇_{e_i} e_j).
struct Connection {
  std::vector<Matrix> gamma;

  std::size_t dim() const { return gamma.size(); }
  /// ∇_X as a matrix.
  Matrix along(const Matrix& x) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!is_zero(x[i])) m += x[i] * gamma[i];
    return m;
  }
  Matrix apply(const Matrix& x, const Matrix& y) const { return along(x) * y; }
  friend bool operator==(const Connection&, const Connection&) = default;
};

/// Koszul formula 2h(∇_u v, w) = h([u,v],w) − h(v,[u,w]) − h(u,[v,w]).
inline Connection levi_civita(const LieAlgebra& l, const BilinearForm& h) {
  const std::size_t n = l.dim();
  if (h.dim() != n) throw ContractError("levi_civita: metric dimension mismatch");
  if (h.kind() != FormKind::symmetric) throw ContractError("levi_civita needs a symmetric form");
  if (!h.nondegenerate()) throw ValidationError("levi_civita: metric is degenerate");
  const Matrix ginv = inverse(h.gram());
  // hb(i,j,k) = h([e_i,e_j], e_k)
  std::vector<Rational> hb(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix v = h.gram() * l.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) hb[(i * n + j) * n + k] = v[k];
    }
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return hb[(i * n + j) * n + k]; };
  Connection c;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix lowered(n, n);  // column j: h(∇_{e_i} e_j, e_k) over k
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        lowered(k, j) = frac(1, 2) * (at(i, j, k) - at(i, k, j) - at(j, k, i));
    c.gamma.push_back(ginv * lowered);
  }
  return c;
}

/// Torsion T(X,Y) = ∇_X Y − ∇_Y X − [X,Y] vanishes on all basis pairs.
inline bool is_torsion_free(const LieAlgebra& l, const Connection& c) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      if (c.gamma[i].col(j) - c.gamma[j].col(i) != l.bracket_basis(i, j)) return false;
  return true;
}

/// ∇h = 0: every ∇_{e_i} is h-antisymmetric.
inline bool is_metric(const Connection& c, const BilinearForm& h) {
  for (const auto& g : c.gamma)
    if (!(g.transpose() * h.gram() + h.gram() * g).is_zero()) return false;
  return true;
}

/// Curvature endomorphisms R(e_i, e_j), stored at index i*n + j.
struct Curvature {
  std::size_t n = 0;
  std::vector<Matrix> r;

  const Matrix& operator()(std::size_t i, std::size_t j) const { return r[i * n + j]; }
  bool is_zero() const {
    for (const auto& m : r)
      if (!m.is_zero()) return false;
    return true;
  }
};

inline Curvature curvature(const LieAlgebra& l, const Connection& c) {
  const std::size_t n = l.dim();
  Curvature out{n, std::vector<Matrix>(n * n, Matrix(n, n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix rij = commutator(c.gamma[i], c.gamma[j]) - c.along(l.bracket_basis(i, j));
      out.r[j * n + i] = -rij;
      out.r[i * n + j] = std::move(rij);
    }
  return out;
}

/// R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0 on all basis triples.
inline bool satisfies_first_bianchi(const Curvature& r) {
  const std::size_t n = r.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(r(i, j).col(k) + r(j, k).col(i) + r(k, i).col(j)).is_zero()) return false;
  return true;
}

/// Ricci Gram matrix ric(e_a, e_b) = Σ_z [R(e_z, e_a) e_b]_z.
inline Matrix ricci_gram(const Curvature& r) {
  const std::size_t n = r.n;
  Matrix ric(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t z = 0; z < n; ++z) ric(a, b) += r(z, a)(z, b);
  return ric;
}

inline BilinearForm ricci(const LieAlgebra& l, const BilinearForm& h) {
  return BilinearForm::symmetric(ricci_gram(curvature(l, levi_civita(l, h))));
}

/// Ric with h(Ric X, Y) = ric(X, Y): Ric = G⁻¹ · ric.
inline Matrix ricci_endomorphism(const LieAlgebra& l, const BilinearForm& h) {
  return inverse(h.gram()) * ricci(l, h).gram();
}

inline bool is_flat(const LieAlgebra& l, const BilinearForm& h) {
  return curvature(l, levi_civita(l, h)).is_zero();
}

/// λ with Ric = λ·Id, if any (λ = 0 counts: Ricci-flat metrics are Einstein).
inline std::optional<Rational> is_einstein(const LieAlgebra& l, const BilinearForm& h) {
  Matrix ric = ricci_endomorphism(l, h);
  Rational lambda = ric(0, 0);
  if (ric == lambda * Matrix::identity(l.dim())) return lambda;
  return std::nullopt;
}

struct RicciSoliton {
  Rational lambda;
  Matrix derivation;
  /// True when several (λ, D) pairs solve the system; the one returned sets
  /// the free parameters to zero.
  bool unique = true;
};

/// Solves Ric = λ·Id + D with D in the span of a derivation basis.
inline std::optional<RicciSoliton> is_ricci_soliton(const LieAlgebra& l, const BilinearForm& h) {
  const std::size_t n = l.dim();
  Matrix ric = ricci_endomorphism(l, h);
  auto der = derivations(l);
  // Unknowns: derivation coefficients first, λ last (so λ is free before D).
  Matrix system(n * n, der.size() + 1);
  Matrix rhs(n * n, 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t row = a * n + b;
      for (std::size_t k = 0; k < der.size(); ++k) system(row, k) = der[k](a, b);
      system(row, der.size()) = a == b ? 1 : 0;
      rhs[row] = ric(a, b);
    }
  auto x = solve_linear(system, rhs);
  if (!x) return std::nullopt;
  RicciSoliton s;
  s.lambda = (*x)[der.size()];
  s.derivation = ric - s.lambda * Matrix::identity(n);
  s.unique = rank(system) == system.cols();
  return s;
}

enum class CurvatureClass { flat, einstein, ricci_soliton, non_flat };

inline std::string to_string(CurvatureClass c) {
  switch (c) {
    case CurvatureClass::flat: return "Flat";
    case CurvatureClass::einstein: return "Einstein";
    case CurvatureClass::ricci_soliton: return "Ricci soliton";
    case CurvatureClass::non_flat: return "Non-flat";
  }
  return "?";
}

/// First label that applies in the chain flat ⇒ Einstein ⇒ soliton.
inline CurvatureClass classify_curvature(const LieAlgebra& l, const BilinearForm& h) {
  if (is_flat(l, h)) return CurvatureClass::flat;
  if (is_einstein(l, h)) return CurvatureClass::einstein;
  if (is_ricci_soliton(l, h)) return CurvatureClass::ricci_soliton;
  return CurvatureClass::non_flat;
}

/// ∇f = 0: every ∇_{e_i} commutes with f.
inline bool nabla_parallel(const Connection& c, const Matrix& f) {
  if (!f.is_square() || f.rows() != c.dim()) throw ContractError("nabla_parallel: dimension mismatch");
  for (const auto& g : c.gamma)
    if (!commutator(g, f).is_zero()) return false;
  return true;
}

/// N_J(e_i, e_j) = [Je_i,Je_j] − J[Je_i,e_j] − J[e_i,Je_j] − [e_i,e_j], stored
/// as columns at index i*n + j.
inline std::vector<Matrix> nijenhuis(const LieAlgebra& l, const Matrix& j) {
  const std::size_t n = l.dim();
  if (j.rows() != n || !j.is_square()) throw ContractError("nijenhuis: dimension mismatch");
  if (j * j != -Matrix::identity(n)) throw ValidationError("not an almost complex structure");
  std::vector<Matrix> out(n * n, Matrix(n, 1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix x = Matrix::unit(n, a), y = Matrix::unit(n, b);
      Matrix jx = j * x, jy = j * y;
      Matrix v = l.bracket(jx, jy) - j * l.bracket(jx, y) - j * l.bracket(x, jy) - l.bracket(x, y);
      out[b * n + a] = -v;
      out[a * n + b] = std::move(v);
    }
  return out;
}

inline bool nijenhuis_vanishes(const LieAlgebra& l, const Matrix& j) {
  for (const auto& v : nijenhuis(l, j))
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace bornforge
