#pragma once

// Born structures (g, h, ω) on a Lie algebra: assembly from the three forms or
// from pseudo-Hermitian data plus a splitting, the transformation rules of
// g, h, ω under A, B, J, integrability in both formulations, and rotation of
// the product structure inside the complex product structure.

#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bornforge/exterior.hpp"
#include "bornforge/geometry.hpp"
#include "bornforge/lie_algebra.hpp"

namespace bornforge {

struct BornStructure {
  LieAlgebra algebra{1};
  BilinearForm g, h, omega;
  Matrix A, B, J;
  Subspace g_plus, g_minus;

  std::size_t dim() const { return algebra.dim(); }
};

/// Pseudo-Kähler pair (h, J) with a splitting into two subspaces.
struct HermitianBornData {
  LieAlgebra algebra{1};
  BilinearForm h;
  Matrix J;
  Subspace g_plus, g_minus;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw ValidationError(what);
}

inline Subspace eigenspace(const Matrix& a, const Rational& lambda) {
  return Subspace(kernel_matrix(a - lambda * Matrix::identity(a.rows())));
}

}  // namespace detail

/// Recovers A, B, J from the three forms (g →A ω, g →B h, ω →−J h) and checks
/// every algebraic identity they must satisfy. Errors name the first failing
/// identity.
inline BornStructure assemble_from_forms(const LieAlgebra& l, const BilinearForm& g, const BilinearForm& h,
                                         const BilinearForm& omega) {
  const std::size_t n = l.dim();
  if (g.dim() != n || h.dim() != n || omega.dim() != n) throw ContractError("assemble: form dimension mismatch");
  if (g.kind() != FormKind::symmetric || h.kind() != FormKind::symmetric)
    throw ContractError("assemble: g and h must be symmetric");
  if (omega.kind() != FormKind::antisymmetric) throw ContractError("assemble: ω must be antisymmetric");
  detail::require(g.nondegenerate(), "g is degenerate");
  detail::require(h.nondegenerate(), "h is degenerate");
  detail::require(omega.nondegenerate(), "ω is degenerate");

  BornStructure s;
  s.algebra = l;
  s.g = g;
  s.h = h;
  s.omega = omega;
  s.A = recursion_operator(g, omega);
  s.B = recursion_operator(g, h);
  s.J = -recursion_operator(omega, h);
  const Matrix id = Matrix::identity(n);
  detail::require(s.A * s.A == id, "A² ≠ Id");
  detail::require(s.B * s.B == id, "B² ≠ Id");
  detail::require(s.J * s.J == -id, "J² ≠ −Id");
  detail::require((s.A * s.B + s.B * s.A).is_zero(), "AB ≠ −BA");
  detail::require((s.A * s.J + s.J * s.A).is_zero(), "AJ ≠ −JA");
  detail::require((s.B * s.J + s.J * s.B).is_zero(), "BJ ≠ −JB");
  detail::require(s.A * s.B * s.J == id, "ABJ ≠ Id");
  s.g_plus = detail::eigenspace(s.A, 1);
  s.g_minus = detail::eigenspace(s.A, -1);
  detail::require(s.g_plus.dim() * 2 == n && s.g_minus.dim() * 2 == n, "eigenspaces of A are not half-dimensional");
  return s;
}

/// ω(X,Y) = h(JX,Y), A = ±Id on g±, g(X,Y) = h(JAX,Y).
inline BornStructure assemble_from_hermitian(const HermitianBornData& d) {
  const LieAlgebra& l = d.algebra;
  const std::size_t n = l.dim();
  if (d.h.dim() != n || d.J.rows() != n || !d.J.is_square()) throw ContractError("hermitian data: dimension mismatch");
  if (d.g_plus.ambient_dim() != n || d.g_minus.ambient_dim() != n)
    throw ContractError("hermitian data: subspaces live in another space");
  if (d.h.kind() != FormKind::symmetric) throw ContractError("hermitian data: h must be symmetric");
  detail::require(d.h.nondegenerate(), "h is degenerate");
  detail::require(d.J * d.J == -Matrix::identity(n), "J² ≠ −Id");
  detail::require(d.h.pullback(d.J) == d.h, "h is not J-invariant");
  Matrix p = Matrix::from_columns({d.g_plus.basis(), d.g_minus.basis()});
  detail::require(p.cols() == n && is_invertible(p), "not complementary");
  detail::require((d.g_plus.basis().transpose() * d.h.gram() * d.g_minus.basis()).is_zero(),
                  "g+ and g− are not h-orthogonal");
  detail::require(d.g_minus.contains(Subspace(d.J * d.g_plus.basis())) && d.g_plus.dim() == d.g_minus.dim(),
                  "J does not interchange g+ and g−");
  std::vector<Rational> signs(n, 1);
  for (std::size_t i = d.g_plus.dim(); i < n; ++i) signs[i] = -1;
  Matrix a = p * Matrix::diagonal(signs) * inverse(p);
  auto omega = BilinearForm::antisymmetric(d.J.transpose() * d.h.gram());
  auto g = BilinearForm::symmetric((d.J * a).transpose() * d.h.gram());
  return assemble_from_forms(l, g, d.h, omega);
}

inline HermitianBornData hermitian_data(const BornStructure& s) {
  return {s.algebra, s.h, s.J, s.g_plus, s.g_minus};
}

/// One transformation rule: either F(TX,TY) = sign·F(X,Y) (pair_form) or
/// F(TX,Y) = sign·F(X,TY).
struct Table1Relation {
  char op;    // 'A', 'B' or 'J'
  char form;  // 'g', 'h' or 'w' (ω)
  bool pair_form;
  int sign;
  bool holds;

  std::string label() const {
    std::string f = form == 'w' ? "ω" : std::string(1, form);
    std::string t(1, op);
    std::string s = sign > 0 ? "" : "−";
    if (pair_form) return f + "(" + t + "X," + t + "Y) = " + s + f + "(X,Y)";
    return f + "(" + t + "X,Y) = " + s + f + "(X," + t + "Y)";
  }
};

struct Table1Report {
  std::vector<Table1Relation> relations;
  bool all_hold() const {
    for (const auto& r : relations)
      if (!r.holds) return false;
    return true;
  }
};

/// Checks the 18 transformation rules of g, h, ω under A, B, J.
inline Table1Report check_table1(const BornStructure& s) {
  struct Rule {
    char op, form;
    int pair_sign, swap_sign;
  };
  static constexpr std::array<Rule, 9> rules{{{'A', 'g', -1, -1},
                                              {'A', 'h', 1, 1},
                                              {'A', 'w', -1, -1},
                                              {'B', 'g', 1, 1},
                                              {'B', 'h', 1, 1},
                                              {'B', 'w', -1, -1},
                                              {'J', 'g', -1, 1},
                                              {'J', 'h', 1, -1},
                                              {'J', 'w', 1, -1}}};
  Table1Report report;
  for (const auto& r : rules) {
    const Matrix& t = r.op == 'A' ? s.A : r.op == 'B' ? s.B : s.J;
    const Matrix& f = r.form == 'g' ? s.g.gram() : r.form == 'h' ? s.h.gram() : s.omega.gram();
    bool pair_ok = t.transpose() * f * t == r.pair_sign * f;
    bool swap_ok = t.transpose() * f == r.swap_sign * (f * t);
    report.relations.push_back({r.op, r.form, true, r.pair_sign, pair_ok});
    report.relations.push_back({r.op, r.form, false, r.swap_sign, swap_ok});
  }
  return report;
}

struct IntegrabilityReport {
  bool omega_closed = false;
  bool nijenhuis_zero = false;
  bool eigenspaces_subalgebras = false;
  bool nablaJ_zero = false;
  /// Closed ω, integrable J and subalgebra eigenspaces.
  bool verdict = false;
  /// verdict agrees with (subalgebra eigenspaces ∧ ∇J = 0).
  bool formulations_agree = false;
};

inline IntegrabilityReport check_integrable(const BornStructure& s) {
  IntegrabilityReport r;
  r.omega_closed = ce_d(s.algebra, to_kform(s.omega)).is_zero();
  r.nijenhuis_zero = nijenhuis_vanishes(s.algebra, s.J);
  r.eigenspaces_subalgebras = is_subalgebra(s.algebra, s.g_plus) && is_subalgebra(s.algebra, s.g_minus);
  r.nablaJ_zero = nabla_parallel(levi_civita(s.algebra, s.h), s.J);
  r.verdict = r.omega_closed && r.nijenhuis_zero && r.eigenspaces_subalgebras;
  r.formulations_agree = r.verdict == (r.eigenspaces_subalgebras && r.nablaJ_zero);
  return r;
}

struct LagrangianReport {
  bool omega_vanishes_on_eigenspaces = false;
  bool g_vanishes_on_eigenspaces = false;
  bool eigenspaces_h_orthogonal = false;
  Signature g_signature;
  Signature h_signature;
  bool g_neutral = false;
  bool h_signature_even = false;

  bool all_pass() const {
    return omega_vanishes_on_eigenspaces && g_vanishes_on_eigenspaces && eigenspaces_h_orthogonal && g_neutral &&
           h_signature_even;
  }
};

inline LagrangianReport eigenspace_lagrangian_report(const BornStructure& s) {
  LagrangianReport r;
  const Matrix& p = s.g_plus.basis();
  const Matrix& m = s.g_minus.basis();
  auto restricted_zero = [](const Matrix& f, const Matrix& v) { return (v.transpose() * f * v).is_zero(); };
  r.omega_vanishes_on_eigenspaces = restricted_zero(s.omega.gram(), p) && restricted_zero(s.omega.gram(), m);
  r.g_vanishes_on_eigenspaces = restricted_zero(s.g.gram(), p) && restricted_zero(s.g.gram(), m);
  r.eigenspaces_h_orthogonal = (p.transpose() * s.h.gram() * m).is_zero();
  r.g_signature = signature_of_symmetric(s.g.gram());
  r.h_signature = signature_of_symmetric(s.h.gram());
  const std::size_t half = s.dim() / 2;
  r.g_neutral = r.g_signature == Signature{half, half, 0};
  r.h_signature_even = r.h_signature.zero == 0 && r.h_signature.positive % 2 == 0 && r.h_signature.negative % 2 == 0;
  return r;
}

/// Replaces A by A_θ = cA + sB, keeping h and J. Requires c² + s² = 1.
inline BornStructure rotate_product_structure(const BornStructure& s, const Rational& c, const Rational& sn) {
  if (c * c + sn * sn != 1) throw ContractError("rotation needs cos² + sin² = 1");
  Matrix a_theta = c * s.A + sn * s.B;
  auto g = BilinearForm::symmetric((s.J * a_theta).transpose() * s.h.gram());
  return assemble_from_forms(s.algebra, g, s.h, s.omega);
}

/// Rational points (c, s) on the unit circle: the axis points and the
/// sign/swap variants of primitive Pythagorean triples with hypotenuse ≤ bound.
inline std::vector<std::pair<Rational, Rational>> rational_circle_points(long bound = 30) {
  std::vector<std::pair<Rational, Rational>> pts{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  auto push = [&](const Rational& a, const Rational& b) {
    for (const auto& p : pts)
      if (p.first == a && p.second == b) return;
    pts.emplace_back(a, b);
  };
  for (long m = 2; m * m <= bound; ++m)
    for (long k = 1; k < m; ++k) {
      if (std::gcd(m, k) != 1 || (m - k) % 2 == 0) continue;
      long hyp = m * m + k * k;
      if (hyp > bound) continue;
      Rational a = frac(m * m - k * k, hyp), b = frac(2 * m * k, hyp);
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          push(sa * a, sb * b);
          push(sa * b, sb * a);
        }
    }
  return pts;
}

/// Lie algebra isomorphism Φ (columns = images of basis vectors) pulling back
/// h, g and ω of the target structure to those of the source.
inline bool check_equivalence(const BornStructure& source, const BornStructure& target, const Matrix& phi) {
  const std::size_t n = source.dim();
  if (target.dim() != n || phi.rows() != n || phi.cols() != n) throw ContractError("check_equivalence: dimension mismatch");
  if (!is_invertible(phi)) throw ContractError("check_equivalence: Φ is not invertible");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (phi * source.algebra.bracket_basis(i, j) != target.algebra.bracket(phi.col(i), phi.col(j))) return false;
  return target.h.pullback(phi) == source.h && target.g.pullback(phi) == source.g &&
         target.omega.pullback(phi) == source.omega;
}

/// Standard structure on abelian R^{2k}: h = Id, J e_i = e_{k+i}, g± the two
/// halves.
inline HermitianBornData abelian_standard(std::size_t k) {
  const std::size_t n = 2 * k;
  Matrix j(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    j(k + i, i) = 1;
    j(i, k + i) = -1;
  }
  Matrix plus(n, k), minus(n, k);
  for (std::size_t i = 0; i < k; ++i) {
    plus(i, i) = 1;
    minus(k + i, i) = 1;
  }
  return {LieAlgebra(n, "R" + std::to_string(n)), BilinearForm::symmetric(Matrix::identity(n)), j, Subspace(plus),
          Subspace(minus)};
}

}  // namespace bornforge
