#pragma once

// Bicross products g+ ⋈ g− of two metric Lie algebras and the Born structures
// they carry, the integrability criterion in terms of the two representations,
// the converse decomposition, flat-seed constructions and the six-dimensional
// families.
//
// Basis convention: the product has basis (f_1..f_n, e_1..e_n) where f_i is
// the native basis of g+ and e_a that of g−. φ(e_a) is an n×n matrix acting
// on g+ coordinates (column j holds φ(e_a) f_j); likewise ρ(f_i) on g−.
// Then [f_i, e_a] = −φ(e_a) f_i + ρ(f_i) e_a and J = [[0, −Q⁻¹], [Q, 0]].

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bornforge/born.hpp"
#include "bornforge/geometry.hpp"
#include "bornforge/groebner.hpp"
#include "bornforge/lie_algebra.hpp"

namespace bornforge {

/// Linear map source → End(V), stored on the source basis.
struct Representation {
  std::vector<Matrix> images;

  static Representation zero(std::size_t source_dim, std::size_t target_dim) {
    return {std::vector<Matrix>(source_dim, Matrix(target_dim, target_dim))};
  }
  std::size_t source_dim() const { return images.size(); }
  /// Image of a source vector given in coordinates.
  Matrix operator()(const Matrix& x) const {
    std::size_t m = images.empty() ? 0 : images.front().rows();
    Matrix out(m, m);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (!bornforge::is_zero(x[i])) out += x[i] * images[i];
    return out;
  }
  const Matrix& operator[](std::size_t i) const { return images[i]; }
  bool is_zero() const {
    for (const auto& m : images)
      if (!m.is_zero()) return false;
    return true;
  }
};

/// ρ([X,Y]) = [ρ(X), ρ(Y)] on basis pairs; returns the first failing pair
/// (0-based) if any.
inline std::optional<std::pair<std::size_t, std::size_t>> representation_defect(const LieAlgebra& source,
                                                                                const Representation& r) {
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = i + 1; j < source.dim(); ++j)
      if (r(source.bracket_basis(i, j)) != commutator(r[i], r[j])) return std::make_pair(i, j);
  return std::nullopt;
}

struct BicrossData {
  LieAlgebra g_plus{1};
  LieAlgebra g_minus{1};
  BilinearForm h_minus;
  Matrix Q;  // g+ → g−
  Representation phi;  // g− → End(g+)
  Representation rho;  // g+ → End(g−)

  std::size_t n() const { return g_plus.dim(); }
  BilinearForm h_plus() const { return h_minus.pullback(Q); }
};

/// Shape checks plus the homomorphism law for φ and ρ.
inline void validate(const BicrossData& d) {
  const std::size_t n = d.g_plus.dim();
  if (d.g_minus.dim() != n) throw ContractError("bicross data: factors differ in dimension");
  if (d.h_minus.dim() != n || d.Q.rows() != n || d.Q.cols() != n) throw ContractError("bicross data: shape mismatch");
  if (d.phi.source_dim() != n || d.rho.source_dim() != n) throw ContractError("bicross data: representation size");
  for (const auto& m : d.phi.images)
    if (m.rows() != n || m.cols() != n) throw ContractError("bicross data: φ image shape");
  for (const auto& m : d.rho.images)
    if (m.rows() != n || m.cols() != n) throw ContractError("bicross data: ρ image shape");
  if (d.h_minus.kind() != FormKind::symmetric || !d.h_minus.nondegenerate())
    throw ValidationError("h− must be a nondegenerate metric");
  if (!is_invertible(d.Q)) throw ValidationError("Q is not invertible");
  if (auto w = representation_defect(d.g_minus, d.phi))
    throw ValidationError("φ is not a representation on (e" + std::to_string(w->first + 1) + ", e" +
                          std::to_string(w->second + 1) + ")");
  if (auto w = representation_defect(d.g_plus, d.rho))
    throw ValidationError("ρ is not a representation on (f" + std::to_string(w->first + 1) + ", f" +
                          std::to_string(w->second + 1) + ")");
}

struct CompatibilityResult {
  bool holds = true;
  /// 1 or 2 for the identity that fails, with the 0-based basis triple
  /// (X−, X+, Y+) resp. (X+, X−, Y−).
  int identity = 0;
  std::array<std::size_t, 3> witness{};
};

/// The matched-pair identities
///   φ(X−)[X+,Y+] − [φ(X−)X+,Y+] − [X+,φ(X−)Y+] + φ(ρ(X+)X−)Y+ − φ(ρ(Y+)X−)X+ = 0
///   ρ(X+)[X−,Y−] − [ρ(X+)X−,Y−] − [X−,ρ(X+)Y−] + ρ(φ(X−)X+)Y− − ρ(φ(Y−)X+)X− = 0
/// on all basis triples.
inline CompatibilityResult check_compatibility(const BicrossData& d) {
  validate(d);
  const std::size_t n = d.n();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix xm = Matrix::unit(n, a), xp = Matrix::unit(n, i), yp = Matrix::unit(n, j);
        const Matrix& p = d.phi[a];
        Matrix v = p * d.g_plus.bracket(xp, yp) - d.g_plus.bracket(p * xp, yp) - d.g_plus.bracket(xp, p * yp) +
                   d.phi(d.rho(xp) * xm) * yp - d.phi(d.rho(yp) * xm) * xp;
        if (!v.is_zero()) return {false, 1, {a, i, j}};
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Matrix xp = Matrix::unit(n, i), xm = Matrix::unit(n, a), ym = Matrix::unit(n, b);
        const Matrix& r = d.rho[i];
        Matrix v = r * d.g_minus.bracket(xm, ym) - d.g_minus.bracket(r * xm, ym) - d.g_minus.bracket(xm, r * ym) +
                   d.rho(d.phi(xm) * xp) * ym - d.rho(d.phi(ym) * xp) * xm;
        if (!v.is_zero()) return {false, 2, {i, a, b}};
      }
  return {};
}

struct BicrossProduct {
  LieAlgebra algebra{1};
  HermitianBornData hermitian;

  BornStructure born() const { return assemble_from_hermitian(hermitian); }
};

/// Brackets on g+ ⊕ g− without any compatibility check.
inline LieAlgebra bicross_brackets(const BicrossData& d, bool validate_jacobi) {
  const std::size_t n = d.n(), m = 2 * n;
  std::vector<Matrix> cols(m * m, Matrix(m, 1));
  auto put = [&](std::size_t i, std::size_t j, const Matrix& plus, const Matrix& minus) {
    Matrix v(m, 1);
    v.set_block(0, 0, plus);
    v.set_block(n, 0, minus);
    cols[i * m + j] = v;
    cols[j * m + i] = -v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      put(i, j, d.g_plus.bracket_basis(i, j), Matrix(n, 1));
      put(n + i, n + j, Matrix(n, 1), d.g_minus.bracket_basis(i, j));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) put(i, n + a, -d.phi[a].col(i), d.rho[i].col(a));
  return LieAlgebra::from_bracket_columns(m, cols, {}, validate_jacobi);
}

inline Matrix product_complex_structure(const Matrix& q) {
  const std::size_t n = q.rows();
  Matrix j(2 * n, 2 * n);
  j.set_block(0, n, -inverse(q));
  j.set_block(n, 0, q);
  return j;
}

inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

/// The bicross product and its Born structure h = h+ ⊕ h−,
/// J = [[0, −Q⁻¹], [Q, 0]], g± the two factors.
inline BicrossProduct bicross(const BicrossData& d, std::string name = {}) {
  auto compat = check_compatibility(d);
  if (!compat.holds) {
    const auto& w = compat.witness;
    throw ValidationError("bicross compatibility identity " + std::to_string(compat.identity) +
                          " fails on basis triple (" + std::to_string(w[0] + 1) + ", " + std::to_string(w[1] + 1) +
                          ", " + std::to_string(w[2] + 1) + ")");
  }
  const std::size_t n = d.n();
  BicrossProduct p;
  p.algebra = bicross_brackets(d, true);
  p.algebra.set_name(std::move(name));
  Matrix plus(2 * n, n), minus(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    plus(i, i) = 1;
    minus(n + i, i) = 1;
  }
  p.hermitian = {p.algebra, BilinearForm::symmetric(block_diagonal(d.h_plus().gram(), d.h_minus.gram())),
                 product_complex_structure(d.Q), Subspace(plus), Subspace(minus)};
  return p;
}

struct IntegrabilityConditions {
  bool c1 = false;  // φ(X−)ᵃ = Q⁻¹ ∇⁻_{X−} Q
  bool c2 = false;  // φ(QX+)ˢ Y+ = φ(QY+)ˢ X+
  bool c3 = false;  // ρ(X+)ᵃ = Q ∇⁺_{X+} Q⁻¹
  bool c4 = false;  // ρ(X+)ˢ QY+ = ρ(Y+)ˢ QX+
  bool verdict = false;
};

inline IntegrabilityConditions check_integrability_conditions(const BicrossData& d) {
  validate(d);
  const std::size_t n = d.n();
  const BilinearForm hp = d.h_plus();
  const Connection nm = levi_civita(d.g_minus, d.h_minus);
  const Connection np = levi_civita(d.g_plus, hp);
  const Matrix qi = inverse(d.Q);
  IntegrabilityConditions r;
  r.c1 = r.c2 = r.c3 = r.c4 = true;
  for (std::size_t a = 0; a < n && r.c1; ++a)
    r.c1 = antisym_part(d.phi[a], hp) == qi * nm.gamma[a] * d.Q;
  for (std::size_t i = 0; i < n && r.c3; ++i)
    r.c3 = antisym_part(d.rho[i], d.h_minus) == d.Q * np.gamma[i] * qi;
  std::vector<Matrix> phi_sym, rho_sym;
  for (std::size_t i = 0; i < n; ++i) {
    phi_sym.push_back(sym_part(d.phi(d.Q.col(i)), hp));
    rho_sym.push_back(sym_part(d.rho[i], d.h_minus));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (phi_sym[i].col(j) != phi_sym[j].col(i)) r.c2 = false;
      if (rho_sym[i] * d.Q.col(j) != rho_sym[j] * d.Q.col(i)) r.c4 = false;
    }
  r.verdict = r.c1 && r.c2 && r.c3 && r.c4;
  return r;
}

/// Levi-Civita connection of h+ ⊕ h− on the bicross product assembled from
/// the factor connections and the symmetric/antisymmetric parts of φ and ρ.
inline Connection levi_civita_blocks(const BicrossData& d) {
  validate(d);
  const std::size_t n = d.n(), m = 2 * n;
  const BilinearForm hp = d.h_plus();
  const Matrix hp_inv = inverse(hp.gram()), hm_inv = inverse(d.h_minus.gram());
  const Connection np = levi_civita(d.g_plus, hp);
  const Connection nm = levi_civita(d.g_minus, d.h_minus);
  std::vector<Matrix> phi_s, phi_a, rho_s, rho_a;
  for (std::size_t i = 0; i < n; ++i) {
    phi_s.push_back(sym_part(d.phi[i], hp));
    phi_a.push_back(antisym_part(d.phi[i], hp));
    rho_s.push_back(sym_part(d.rho[i], d.h_minus));
    rho_a.push_back(antisym_part(d.rho[i], d.h_minus));
  }
  Connection c;
  for (std::size_t i = 0; i < m; ++i) c.gamma.emplace_back(m, m);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix& gp = c.gamma[i];          // ∇_{f_i}
    Matrix& gm = c.gamma[n + i];      // ∇_{e_i}
    for (std::size_t j = 0; j < n; ++j) {
      // h(∇_{f_i} f_j, Z) = h+(∇⁺_{f_i} f_j, Z+) + h+(φ(Z−)ˢ f_i, f_j)
      Matrix lowered(n, 1);
      for (std::size_t c2 = 0; c2 < n; ++c2) lowered[c2] = (hp.gram() * phi_s[c2])(j, i);
      Matrix col(m, 1);
      col.set_block(0, 0, np.gamma[i].col(j));
      col.set_block(n, 0, hm_inv * lowered);
      gp.set_col(j, col);
      // ∇_{f_i} e_j = −φ(e_j)ˢ f_i + ρ(f_i)ᵃ e_j
      col = Matrix(m, 1);
      col.set_block(0, 0, -phi_s[j].col(i));
      col.set_block(n, 0, rho_a[i].col(j));
      gp.set_col(n + j, col);
      // ∇_{e_i} f_j = φ(e_i)ᵃ f_j − ρ(f_j)ˢ e_i
      col = Matrix(m, 1);
      col.set_block(0, 0, phi_a[i].col(j));
      col.set_block(n, 0, -rho_s[j].col(i));
      gm.set_col(j, col);
      // h(∇_{e_i} e_j, Z) = h−(∇⁻_{e_i} e_j, Z−) + h−(ρ(Z+)ˢ e_i, e_j)
      for (std::size_t c2 = 0; c2 < n; ++c2) lowered[c2] = (d.h_minus.gram() * rho_s[c2])(j, i);
      col = Matrix(m, 1);
      col.set_block(0, 0, hp_inv * lowered);
      col.set_block(n, 0, nm.gamma[i].col(j));
      gm.set_col(n + j, col);
    }
  }
  return c;
}

struct SemidirectResult {
  BicrossProduct product;
  bool g_plus_abelian = false;
  bool c1 = false;
  bool c2 = false;
  bool verdict = false;
};

/// ρ ≡ 0 specialization: φ must act by derivations of g+. Integrable iff g+
/// is abelian and the two φ conditions hold.
inline SemidirectResult semidirect_born(const LieAlgebra& g_plus, const LieAlgebra& g_minus,
                                        const BilinearForm& h_minus, const Matrix& q, const Representation& phi,
                                        std::string name = {}) {
  for (std::size_t a = 0; a < phi.source_dim(); ++a)
    if (!is_derivation(g_plus, phi[a]))
      throw ValidationError("φ(e" + std::to_string(a + 1) + ") is not a derivation of g+");
  BicrossData d{g_plus, g_minus, h_minus, q, phi, Representation::zero(g_plus.dim(), g_minus.dim())};
  SemidirectResult r;
  r.product = bicross(d, std::move(name));
  auto c = check_integrability_conditions(d);
  r.g_plus_abelian = g_plus.is_abelian();
  r.c1 = c.c1;
  r.c2 = c.c2;
  r.verdict = r.g_plus_abelian && r.c1 && r.c2;
  return r;
}

/// g+ = R^n, φ(X−) = Q⁻¹ ∇⁻_{X−} Q, ρ = 0. Requires h− flat.
inline BicrossData flat_seed_construction(const LieAlgebra& g_minus, const BilinearForm& h_minus, const Matrix& q) {
  if (!is_flat(g_minus, h_minus)) throw ValidationError("flat seed required: h− is not flat");
  const std::size_t n = g_minus.dim();
  Connection nm = levi_civita(g_minus, h_minus);
  Matrix qi = inverse(q);
  Representation phi;
  for (std::size_t a = 0; a < n; ++a) phi.images.push_back(qi * nm.gamma[a] * q);
  return {LieAlgebra(n, "R" + std::to_string(n)), g_minus, h_minus, q, phi, Representation::zero(n, n)};
}

struct Decomposition {
  BicrossData data;
  /// Columns: the basis (f_1..f_n, J f_1..J f_n) in original coordinates; an
  /// isomorphism from the bicross product onto the original algebra.
  Matrix phi_map;
};

/// Splits an integrable Born structure into bicross data with Q = Id:
/// f_i a basis of g+, e_i = J f_i, φ(e_a) f_j = [e_a, f_j]₊, ρ(f_j) e_a = [f_j, e_a]₋.
inline Decomposition decompose_born(const BornStructure& s) {
  if (!is_subalgebra(s.algebra, s.g_plus) || !is_subalgebra(s.algebra, s.g_minus))
    throw ValidationError("decompose_born: eigenspaces of A are not subalgebras");
  const std::size_t n = s.g_plus.dim();
  Matrix f = s.g_plus.basis();
  Matrix p = Matrix::from_columns({f, s.J * f});
  LieAlgebra l = s.algebra.change_basis(p);
  Matrix h = p.transpose() * s.h.gram() * p;
  auto sub_bracket = [&](std::size_t offset) {
    std::vector<BracketTerm> terms;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(l.constant(offset + i, offset + j, offset + k)))
            terms.push_back({i, j, k, l.constant(offset + i, offset + j, offset + k)});
    return LieAlgebra::from_brackets(n, terms);
  };
  Decomposition out;
  out.phi_map = p;
  BicrossData& d = out.data;
  d.g_plus = sub_bracket(0);
  d.g_minus = sub_bracket(n);
  d.h_minus = BilinearForm::symmetric(h.block(n, n, n, n));
  d.Q = Matrix::identity(n);
  for (std::size_t a = 0; a < n; ++a) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_col(j, l.bracket_basis(n + a, j).block(0, 0, n, 1));
    d.phi.images.push_back(m);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Matrix m(n, n);
    for (std::size_t a = 0; a < n; ++a) m.set_col(a, l.bracket_basis(j, n + a).block(n, 0, n, 1));
    d.rho.images.push_back(m);
  }
  return out;
}

struct QuaternionicProduct {
  BicrossProduct product;
  Matrix J;
  Matrix second;  // I (complex) or E (product) on the whole algebra
};

namespace detail {

inline void require_flat_kahler_seed(const LieAlgebra& g_minus, const BilinearForm& h_minus, const Matrix& t,
                                     int square_sign, int metric_sign, const char* name) {
  const std::size_t n = g_minus.dim();
  std::string s(name);
  if (t * t != square_sign * Matrix::identity(n))
    throw ValidationError(s + (square_sign < 0 ? "² ≠ −Id" : "² ≠ Id"));
  if (h_minus.pullback(t).gram() != metric_sign * h_minus.gram())
    throw ValidationError(s + (metric_sign > 0 ? " is not an isometry of h−" : " does not reverse h−"));
  if (!is_flat(g_minus, h_minus)) throw ValidationError("flat seed required: h− is not flat");
  if (!nabla_parallel(levi_civita(g_minus, h_minus), t)) throw ValidationError(s + " is not parallel for h−");
}

}  // namespace detail

/// From a flat pseudo-Kähler (g−, h−, I−): the flat-seed semidirect product
/// with J and I = diag(−Q⁻¹ I− Q, I−).
inline QuaternionicProduct hyperkahler_from_flat(const LieAlgebra& g_minus, const BilinearForm& h_minus,
                                                 const Matrix& i_minus, const Matrix& q) {
  detail::require_flat_kahler_seed(g_minus, h_minus, i_minus, -1, 1, "I−");
  auto d = flat_seed_construction(g_minus, h_minus, q);
  QuaternionicProduct r;
  r.product = bicross(d);
  r.J = r.product.hermitian.J;
  r.second = block_diagonal(-inverse(q) * i_minus * q, i_minus);
  return r;
}

/// From a flat para-Kähler (g−, h−, E−): J and E = diag(−Q⁻¹ E− Q, E−).
inline QuaternionicProduct hypersymplectic_from_flat(const LieAlgebra& g_minus, const BilinearForm& h_minus,
                                                     const Matrix& e_minus, const Matrix& q) {
  detail::require_flat_kahler_seed(g_minus, h_minus, e_minus, 1, -1, "E−");
  auto d = flat_seed_construction(g_minus, h_minus, q);
  QuaternionicProduct r;
  r.product = bicross(d);
  r.J = r.product.hermitian.J;
  r.second = block_diagonal(-inverse(q) * e_minus * q, e_minus);
  return r;
}

/// Lorentzian metrics on heis3: h1 = −e¹⊗e¹+e²⊗e²+e³⊗e³,
/// h2 = e¹⊗e¹+e²⊗e²−e³⊗e³, h3 = e¹⊗e¹−e²⊗e²+e²⊙e³ (the flat one).
inline BilinearForm heis3_metric(int which) {
  switch (which) {
    case 1: return BilinearForm::symmetric(Matrix::diagonal({-1, 1, 1}));
    case 2: return BilinearForm::symmetric(Matrix::diagonal({1, 1, -1}));
    case 3: return BilinearForm::symmetric(Matrix{{1, 0, 0}, {0, -1, 1}, {0, 1, 0}});
    default: throw ContractError("heis3_metric: choose 1, 2 or 3");
  }
}

/// R3 ⋈ heis3 family with parameters (x, y, x0, y0), Q = Id, h− = h3.
inline BicrossData family_r3_heis3(const Rational& x, const Rational& y, const Rational& x0, const Rational& y0) {
  BicrossData d;
  d.g_plus = LieAlgebra(3, "R3");
  d.g_minus = heisenberg3();
  d.h_minus = heis3_metric(3);
  d.Q = Matrix::identity(3);
  d.phi.images = {Matrix{{0, 0, 0}, {0, 0, 0}, {0, x, 0}}, Matrix{{0, x + 1, 0}, {0, 0, 0}, {x - 1, x0, 0}},
                  Matrix(3, 3)};
  d.rho.images = {Matrix{{0, 0, 0}, {0, 0, 0}, {0, y, 0}}, Matrix{{0, y, 0}, {0, 0, 0}, {y, y0, 0}}, Matrix(3, 3)};
  return d;
}

/// The two R3 ⋈ R3 semidirect instances over h− = −e¹⊗e¹+e²⊗e²+e³⊗e³.
inline std::pair<BicrossData, BicrossData> family_r3_r3() {
  BicrossData base;
  base.g_plus = LieAlgebra(3, "R3");
  base.g_minus = LieAlgebra(3, "R3");
  base.h_minus = BilinearForm::symmetric(Matrix::diagonal({-1, 1, 1}));
  base.Q = Matrix::identity(3);
  base.rho = Representation::zero(3, 3);
  BicrossData first = base, second = base;
  Matrix n1{{1, 1, 0}, {-1, -1, 0}, {0, 0, 0}};
  first.phi.images = {n1, n1, Matrix(3, 3)};
  second.phi.images = {Matrix{{0, 0, 1}, {0, 0, 1}, {-1, 1, 0}}, Matrix{{0, 0, -1}, {0, 0, -1}, {1, -1, 0}},
                       Matrix{{1, -1, 0}, {1, -1, 0}, {0, 0, 0}}};
  return {first, second};
}

/// Affine family of φ satisfying the two φ-conditions of the integrability
/// criterion for g+ = R^n, written as base + Σ t_k · direction_k.
struct PhiShape {
  std::vector<Matrix> base;                     // φ(e_a) at t = 0
  std::vector<std::vector<Matrix>> directions;  // directions[k][a]
  std::size_t parameters() const { return directions.size(); }
};

/// Solves the linear conditions φ(e_a)ᵃ = Q⁻¹∇⁻_{e_a}Q and
/// φ(Qf_i)ˢ f_j = φ(Qf_j)ˢ f_i for the n³ entries of φ; nullopt if
/// inconsistent.
inline std::optional<PhiShape> integrable_phi_shape(const LieAlgebra& g_minus, const BilinearForm& h_minus,
                                                    const Matrix& q) {
  const std::size_t n = g_minus.dim();
  const BilinearForm hp = h_minus.pullback(q);
  const Matrix g = hp.gram(), gi = inverse(g), qi = inverse(q);
  const Connection nm = levi_civita(g_minus, h_minus);
  const std::size_t vars = n * n * n;
  auto var = [n](std::size_t a, std::size_t r, std::size_t c) { return (a * n + r) * n + c; };
  // Linear map from the unknowns to one matrix: M ↦ coefficient vectors.
  // adjoint(M) = G⁻¹ Mᵀ G, entry (r,c) = Σ_{k,l} gi(r,k) M(l,k) g(l,c).
  auto adjoint_coeffs = [&](std::size_t a, std::size_t r, std::size_t c) {
    std::vector<Rational> row(vars);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) row[var(a, l, k)] += gi(r, k) * g(l, c);
    return row;
  };
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t a = 0; a < n; ++a) {
    Matrix target = qi * nm.gamma[a] * q;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        auto row = adjoint_coeffs(a, r, c);
        for (auto& x : row) x = -x / 2;
        row[var(a, r, c)] += frac(1, 2);
        rows.push_back(std::move(row));
        rhs.push_back(target(r, c));
      }
  }
  // φ(Qf_i)ˢ f_j − φ(Qf_j)ˢ f_i = 0, component r.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<Rational> row(vars);
        for (std::size_t a = 0; a < n; ++a) {
          const Rational& wi = q(a, i);
          const Rational& wj = q(a, j);
          auto add_sym = [&](const Rational& w, std::size_t col, const Rational& sign) {
            if (is_zero(w)) return;
            auto adj = adjoint_coeffs(a, r, col);
            for (std::size_t v = 0; v < vars; ++v) row[v] += sign * w * adj[v] / 2;
            row[var(a, r, col)] += sign * w / 2;
          };
          add_sym(wi, j, 1);
          add_sym(wj, i, -1);
        }
        rows.push_back(std::move(row));
        rhs.push_back(0);
      }
  Matrix system(rows.size(), vars), b(rows.size(), 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t v = 0; v < vars; ++v) system(r, v) = rows[r][v];
    b[r] = rhs[r];
  }
  auto particular = solve_linear(system, b);
  if (!particular) return std::nullopt;
  auto unpack = [&](const Matrix& v) {
    std::vector<Matrix> out(n, Matrix(n, n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[a](r, c) = v[var(a, r, c)];
    return out;
  };
  PhiShape shape;
  shape.base = unpack(*particular);
  for (const auto& k : kernel(system)) shape.directions.push_back(unpack(k));
  return shape;
}

/// Polynomial equations in the shape parameters expressing
/// [φ(e_a), φ(e_b)] = φ([e_a, e_b]) entrywise.
inline std::vector<Polynomial> representation_equations(const LieAlgebra& g_minus, const PhiShape& shape) {
  const std::size_t n = g_minus.dim(), k = shape.parameters();
  // Entry (r,c) of φ(e_a) as a linear polynomial.
  auto entry = [&](std::size_t a, std::size_t r, std::size_t c) {
    Polynomial p = Polynomial::constant(k, shape.base[a](r, c));
    for (std::size_t t = 0; t < k; ++t)
      if (!is_zero(shape.directions[t][a](r, c))) p += shape.directions[t][a](r, c) * Polynomial::variable(k, t);
    return p;
  };
  std::vector<std::vector<Polynomial>> phi(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) phi[a].push_back(entry(a, r, c));
  std::vector<Polynomial> eqs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix br = g_minus.bracket_basis(a, b);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          Polynomial e(k);
          for (std::size_t m = 0; m < n; ++m) {
            e += phi[a][r * n + m] * phi[b][m * n + c];
            e -= phi[b][r * n + m] * phi[a][m * n + c];
          }
          for (std::size_t m = 0; m < n; ++m)
            if (!is_zero(br[m])) e -= br[m] * phi[m][r * n + c];
          if (!e.is_zero()) eqs.push_back(std::move(e));
        }
    }
  return eqs;
}

struct ObstructionReport {
  bool shape_exists = false;
  std::size_t parameters = 0;
  std::size_t equations = 0;
  std::vector<Polynomial> groebner;
  /// No φ in the shape is a representation (the ideal is the unit ideal).
  bool no_representation = false;
};

/// Certifies whether g+ = R^n admits a representation φ of g− satisfying the
/// φ-part of the integrability criterion for (h−, Q).
inline ObstructionReport representation_obstruction(const LieAlgebra& g_minus, const BilinearForm& h_minus,
                                                    const Matrix& q) {
  ObstructionReport r;
  auto shape = integrable_phi_shape(g_minus, h_minus, q);
  if (!shape) {
    r.no_representation = true;
    return r;
  }
  r.shape_exists = true;
  r.parameters = shape->parameters();
  auto eqs = representation_equations(g_minus, *shape);
  r.equations = eqs.size();
  r.groebner = groebner_basis(eqs);
  r.no_representation = is_unit_ideal(r.groebner);
  return r;
}

}  // namespace bornforge
