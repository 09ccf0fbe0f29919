#pragma once

// Seeded random generators for exact test instances.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <stdexcept>

#include "bornforge/born.hpp"
#include "bornforge/catalog.hpp"
#include "bornforge/products.hpp"

namespace bornforge::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// p/q with |p| ≤ num, 1 ≤ q ≤ den.
inline Rational random_rational(Rng& rng, long num = 3, long den = 2) {
  return frac(uniform(rng, -num, num), uniform(rng, 1, den));
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long num = 3, long den = 1) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, num, den);
  return m;
}

inline Matrix random_invertible(Rng& rng, std::size_t n, long num = 2) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, num);
    if (is_invertible(m)) return m;
  }
}

inline Matrix random_symmetric(Rng& rng, std::size_t n, long num = 3) {
  Matrix m = random_matrix(rng, n, n, num);
  return m + m.transpose();
}

inline BilinearForm random_metric(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_symmetric(rng, n);
    if (is_invertible(m)) return BilinearForm::symmetric(m);
  }
}

/// a·I + b·M + c·M² for a fixed M: a commuting family, hence a
/// representation of an abelian algebra.
inline std::vector<Matrix> commuting_family(Rng& rng, std::size_t n, std::size_t count) {
  Matrix m = random_matrix(rng, n, n, 2);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(random_rational(rng, 2) * Matrix::identity(n) + random_rational(rng, 2) * m +
                  random_rational(rng, 1) * (m * m));
  return out;
}

/// Representation of heis3 ([e1,e2] = e3) on R³: scaled strictly upper
/// triangular matrices conjugated by a random P.
inline std::vector<Matrix> heis3_representation(Rng& rng) {
  Rational a = random_rational(rng, 2), b = random_rational(rng, 2);
  Matrix x(3, 3), y(3, 3), z(3, 3);
  x(0, 1) = a;
  y(1, 2) = b;
  z(0, 2) = a * b;
  Matrix p = random_invertible(rng, 3), pi = inverse(p);
  return {pi * x * p, pi * y * p, pi * z * p};
}

/// Characteristic polynomial coefficients c_0..c_n of det(xI − S) by
/// Faddeev–LeVerrier.
inline std::vector<Rational> char_poly(const Matrix& s) {
  const std::size_t n = s.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = s * m;
    c[n - k] = -am.trace() / Rational(static_cast<long>(k));
    m = am + c[n - k] * Matrix::identity(n);
  }
  return c;
}

/// Signature of a symmetric matrix from Descartes' rule of signs, exact
/// because all eigenvalues are real. Independent of congruence reduction.
inline Signature oracle_signature(const Matrix& s) {
  auto c = char_poly(s);
  std::size_t zero = 0;
  while (zero < c.size() && is_zero(c[zero])) ++zero;
  auto changes = [](const std::vector<Rational>& p) {
    std::size_t count = 0;
    int last = 0;
    for (const auto& v : p) {
      int sg = sgn(v);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  };
  std::vector<Rational> neg = c;
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  return {changes(c), changes(neg), zero};
}

/// Levi-Civita connection as the unique solution of the linear system
/// "torsion-free and h-metric" in the n³ Christoffel unknowns.
inline Connection oracle_levi_civita(const LieAlgebra& l, const BilinearForm& h) {
  const std::size_t n = l.dim();
  auto var = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };  // (∇_i e_j)_k
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(n * n * n);
        row[var(i, j, k)] += 1;
        row[var(j, i, k)] -= 1;
        rows.push_back(row);
        rhs.push_back(l.constant(i, j, k));
      }
  const Matrix& g = h.gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        std::vector<Rational> row(n * n * n);
        for (std::size_t k = 0; k < n; ++k) {
          row[var(i, a, k)] += g(k, b);
          row[var(i, b, k)] += g(a, k);
        }
        rows.push_back(row);
        rhs.push_back(0);
      }
  Matrix a(rows.size(), n * n * n), b(rows.size(), 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < n * n * n; ++c) a(r, c) = rows[r][c];
    b(r, 0) = rhs[r];
  }
  auto x = solve_linear(a, b);
  if (!x) throw std::logic_error("oracle: no torsion-free metric connection");
  if (rank(a) != n * n * n) throw std::logic_error("oracle: connection not unique");
  Connection c;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = (*x)[var(i, j, k)];
    c.gamma.push_back(m);
  }
  return c;
}

/// Transports a structure along the basis change P (new e'_i = P e_i).
inline BornStructure conjugate(const BornStructure& s, const Matrix& p) {
  Matrix pi = inverse(p);
  HermitianBornData d{s.algebra.change_basis(p), s.h.pullback(p), pi * s.J * p, Subspace(pi * s.g_plus.basis()),
                      Subspace(pi * s.g_minus.basis())};
  return assemble_from_hermitian(d);
}

/// Entries of the catalog with a known structure, by dimension (0 = all).
inline std::vector<const CatalogEntry*> structured_entries(std::size_t dim = 0) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog())
    if (e.structure && (dim == 0 || e.algebra.dim() == dim)) out.push_back(&e);
  return out;
}

/// Standard pseudo-Hermitian data on any even-dimensional algebra, twisted by
/// a random basis change: algebraically a Born structure, integrable or not
/// depending on the brackets.
inline BornStructure random_born_on(Rng& rng, const LieAlgebra& l) {
  const std::size_t n = l.dim(), k = n / 2;
  std::vector<Rational> diag;
  for (std::size_t i = 0; i < k; ++i) diag.push_back(uniform(rng, 0, 1) ? 1 : -1);
  std::vector<Rational> full = diag;
  full.insert(full.end(), diag.begin(), diag.end());
  HermitianBornData base = abelian_standard(k);
  base.algebra = l;
  base.h = BilinearForm::symmetric(Matrix::diagonal(full));
  Matrix p = random_invertible(rng, n);
  Matrix pi = inverse(p);
  HermitianBornData d{l, base.h.pullback(p), pi * base.J * p, Subspace(pi * base.g_plus.basis()),
                      Subspace(pi * base.g_minus.basis())};
  return assemble_from_hermitian(d);
}

/// Random bicross data over R³ / heis3 factors satisfying the compatibility
/// identities; mixes integrable and non-integrable instances.
inline BicrossData random_bicross(Rng& rng) {
  const LieAlgebra r3(3, "R3");
  const LieAlgebra heis = heisenberg3();
  switch (uniform(rng, 0, 5)) {
    case 0: {  // abelian ⋈ abelian, commuting φ
      BicrossData d{r3, r3, random_metric(rng, 3), random_invertible(rng, 3), {commuting_family(rng, 3, 3)},
                    Representation::zero(3, 3)};
      return d;
    }
    case 1: {  // R³ ⋊ heis3 with a heis3 representation
      BicrossData d{r3, heis, random_metric(rng, 3), random_invertible(rng, 3), {heis3_representation(rng)},
                    Representation::zero(3, 3)};
      return d;
    }
    case 2: {  // heis3 acting on R³ through ρ
      BicrossData d{heis, r3, random_metric(rng, 3), random_invertible(rng, 3), Representation::zero(3, 3),
                    {heis3_representation(rng)}};
      return d;
    }
    case 3: {  // the R³ ⋈ heis3 family, sometimes with a perturbed metric or Q
      BicrossData d = family_r3_heis3(random_rational(rng), random_rational(rng), random_rational(rng),
                                      random_rational(rng));
      if (uniform(rng, 0, 1)) d.h_minus = random_metric(rng, 3);
      return d;
    }
    case 4: {  // flat seeds with random Q
      BicrossData d = uniform(rng, 0, 1) ? flat_seed_construction(heis, heis3_metric(3), random_invertible(rng, 3))
                                         : flat_seed_construction(r3, random_metric(rng, 3), random_invertible(rng, 3));
      return d;
    }
    default: {  // R³ ⋈ R³ instances with a random Q or metric
      auto pair = family_r3_r3();
      BicrossData d = uniform(rng, 0, 1) ? pair.first : pair.second;
      if (uniform(rng, 0, 1)) d.Q = random_invertible(rng, 3);
      if (uniform(rng, 0, 1)) d.h_minus = random_metric(rng, 3);
      return d;
    }
  }
}

}  // namespace bornforge::testing
