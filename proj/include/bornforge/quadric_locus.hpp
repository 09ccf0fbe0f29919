#pragma once

// Linear span of the real common zeros of a family of quadratic forms on R^m,
// m <= 3, computed without leaving exact arithmetic.
//
// Each form is a symmetric m×m rational matrix M (q(t) = tᵀ M t). The zero
// set V is a cone, so only its span matters. Binary systems reduce to a gcd
// of univariate quadratics. Ternary systems pick a pivot form and branch on
// its inertia: definite forms leave only the origin, a rank-one form pins V to
// a rational plane, a semidefinite rank-two form pins V to its kernel line,
// and an indefinite rank-two form splits into two planes. A pivot whose zero
// set cannot be split over Q is only conclusive when it is the sole form.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bornforge/matrix.hpp"

namespace bornforge {

/// Raised when a configuration would need algebraic numbers beyond what the
/// exact solver handles.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using Poly = std::vector<Rational>;  // coefficients, lowest degree first

inline void trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

/// Monic gcd; an all-zero input list yields the empty polynomial.
inline Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

/// Exact square root of a nonnegative rational, if rational.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn, sd);
}

/// Keeps a linearly independent subset of the forms (compared as vectors).
inline std::vector<Matrix> independent_forms(const std::vector<Matrix>& forms) {
  std::vector<Matrix> out;
  std::vector<Matrix> flat;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    Matrix v(f.rows() * f.cols(), 1);
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j) v[i * f.cols() + j] = f(i, j);
    Matrix basis = Matrix::from_columns(flat, v.rows());
    if (!in_span(basis, v)) {
      flat.push_back(v);
      out.push_back(f);
    }
  }
  return out;
}

/// Real zero span for binary forms. Returns spanning vectors in R^2 (always
/// rational: two distinct real roots already span the plane, and a single
/// root is rational).
inline Matrix binary_zero_span(const std::vector<Matrix>& forms) {
  auto qs = independent_forms(forms);
  if (qs.empty()) return Matrix::identity(2);
  // q(s,1) = a s^2 + 2 b s + c; [1:0] is a zero iff every a vanishes.
  bool infinity = true;
  Poly g;
  for (const auto& q : qs) {
    if (!is_zero(q(0, 0))) infinity = false;
    Poly p{q(1, 1), 2 * q(0, 1), q(0, 0)};
    g = poly_gcd(g, p);
  }
  std::vector<Matrix> pts;
  if (infinity) pts.push_back(Matrix{{1}, {0}});
  if (g.size() == 2) {
    pts.push_back(Matrix{{-g[0]}, {1}});
  } else if (g.size() == 3) {
    Rational disc = g[1] * g[1] - 4 * g[0];
    if (sgn(disc) > 0) return Matrix::identity(2);
    if (sgn(disc) == 0) pts.push_back(Matrix{{-g[1] / 2}, {1}});
  }
  if (pts.size() >= 2) return Matrix::identity(2);
  return Matrix::from_columns(pts, 2);
}

inline Matrix restrict_form(const Matrix& q, const Matrix& basis) { return basis.transpose() * q * basis; }

inline std::vector<Matrix> restrict_forms(const std::vector<Matrix>& qs, const Matrix& basis) {
  std::vector<Matrix> out;
  for (const auto& q : qs) out.push_back(restrict_form(q, basis));
  return out;
}

/// Zero span of all forms restricted to the plane spanned by `plane` (3×2).
inline Matrix plane_zero_span(const std::vector<Matrix>& qs, const Matrix& plane) {
  Matrix local = binary_zero_span(restrict_forms(qs, plane));
  return plane * local;
}

/// Conclusive span for ternary systems using `pivot` (a form in the span of
/// qs); nullopt when this pivot cannot decide over Q.
inline std::optional<Matrix> ternary_with_pivot(const std::vector<Matrix>& qs, const Matrix& pivot) {
  Signature sig = signature_of_symmetric(pivot);
  std::size_t rk = sig.positive + sig.negative;
  if (rk == 3 && (sig.positive == 0 || sig.negative == 0)) return Matrix(3, 0);
  if (rk == 1) {
    // pivot = c · r rᵀ for any nonzero row r; zeros form the plane r·t = 0.
    std::size_t i = 0;
    while (pivot.row(i).is_zero()) ++i;
    Matrix plane = kernel_matrix(pivot.row(i));
    return plane_zero_span(qs, plane);
  }
  if (rk == 2 && (sig.positive == 0 || sig.negative == 0)) {
    Matrix k = kernel_matrix(pivot);
    for (const auto& q : qs)
      if (!restrict_form(q, k).is_zero()) return Matrix(3, 0);
    return k;
  }
  if (rk == 2) {
    // Indefinite: zero set is two planes through the kernel line.
    Matrix k = kernel_matrix(pivot);
    std::vector<Matrix> comp;
    for (std::size_t j = 0; j < 3 && comp.size() < 2; ++j) {
      Matrix e = Matrix::unit(3, j);
      std::vector<Matrix> cols = comp;
      cols.push_back(k);
      if (!in_span(Matrix::from_columns(cols, 3), e)) comp.push_back(e);
    }
    Matrix u = comp[0], v = comp[1];
    Rational a = restrict_form(pivot, u)(0, 0);
    Rational c = restrict_form(pivot, v)(0, 0);
    Rational b = (u.transpose() * pivot * v)(0, 0);
    // a α^2 + 2 b αβ + c β^2 = 0 with b^2 - a c > 0.
    Rational disc = b * b - a * c;
    auto root = rational_sqrt(disc);
    if (!root) {
      if (qs.size() == 1) return Matrix::identity(3);
      return std::nullopt;
    }
    std::vector<Matrix> dirs;
    if (!is_zero(a)) {
      dirs.push_back(((-b + *root) / a) * u + v);
      dirs.push_back(((-b - *root) / a) * u + v);
    } else {
      // a = 0: α·(2bβ + ... ) -> lines β = 0 and 2bα + cβ = 0
      dirs.push_back(u);
      dirs.push_back(-c * u + 2 * b * v);
    }
    std::vector<Matrix> spans;
    for (const auto& d : dirs) spans.push_back(plane_zero_span(qs, Matrix::from_columns({k, d})));
    return column_space(Matrix::from_columns(spans, 3));
  }
  // Smooth conic with real points.
  if (qs.size() == 1) return Matrix::identity(3);
  return std::nullopt;
}

/// Rational roots of an integer-coefficient cubic-or-lower polynomial via the
/// rational root test. Gives up (empty) on huge coefficients.
inline std::vector<Rational> small_rational_roots(Poly p) {
  trim(p);
  std::vector<Rational> roots;
  if (p.size() < 2) return roots;
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : p) z.push_back(mpz_class(c * l));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  auto divisors = [](mpz_class v) {
    std::vector<mpz_class> d;
    v = abs(v);
    if (v > 100000) return d;
    for (mpz_class i = 1; i <= v; ++i)
      if (v % i == 0) d.push_back(i);
    return d;
  };
  auto ps = divisors(z[low]);
  auto qs = divisors(z.back());
  for (const auto& a : ps)
    for (const auto& b : qs)
      for (int s : {1, -1}) {
        Rational r(mpz_class(s * a), b);
        r.canonicalize();
        Rational val = 0, pw = 1;
        for (const auto& c : p) {
          val += c * pw;
          pw *= r;
        }
        if (is_zero(val)) {
          bool dup = false;
          for (const auto& x : roots) dup = dup || x == r;
          if (!dup) roots.push_back(r);
        }
      }
  return roots;
}

inline Poly det_pencil(const Matrix& a, const Matrix& b) {
  // det(a + λ b) as a cubic in λ, recovered by interpolation at 0, 1, -1, 2.
  std::vector<Rational> xs{0, 1, -1, 2};
  std::vector<Rational> ys;
  for (const auto& x : xs) ys.push_back(determinant(a + x * b));
  Matrix v(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    Rational pw = 1;
    for (std::size_t j = 0; j < 4; ++j, pw *= xs[i]) v(i, j) = pw;
  }
  Matrix coeffs = *solve_linear(v, Matrix::column(ys));
  return Poly{coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
}

}  // namespace detail

/// Span of the real common zero cone of the given symmetric forms on R^m.
/// Columns of the result span it.
inline Matrix real_zero_span(std::size_t m, const std::vector<Matrix>& forms) {
  for (const auto& f : forms)
    if (f.rows() != m || !f.is_symmetric()) throw ContractError("real_zero_span: forms must be symmetric m×m");
  auto qs = detail::independent_forms(forms);
  if (m == 0) return Matrix(0, 0);
  if (qs.empty()) return Matrix::identity(m);
  if (m == 1) return Matrix(1, 0);
  if (m == 2) return detail::binary_zero_span(qs);
  if (m != 3) throw UnsupportedError("real_zero_span handles at most three variables");
  std::vector<Matrix> pivots = qs;
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      pivots.push_back(qs[i] + qs[j]);
      pivots.push_back(qs[i] - qs[j]);
      for (const auto& r : detail::small_rational_roots(detail::det_pencil(qs[i], qs[j])))
        pivots.push_back(qs[i] + r * qs[j]);
    }
  for (const auto& p : pivots) {
    if (p.is_zero()) continue;
    if (auto span = detail::ternary_with_pivot(qs, p)) return *span;
  }
  throw UnsupportedError("real_zero_span: intersection of conics needs irrational points");
}

}  // namespace bornforge
