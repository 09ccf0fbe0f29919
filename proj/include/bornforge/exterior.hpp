#pragma once

// Chevalley–Eilenberg complex of left-invariant forms.
//
// Sign convention: d e^k = Σ_{i<j} c_{ij}^k e^{ij}, so that Salamon entries read
// off the structure constants directly. This is the usual formula
// dα(X_0..X_k) = Σ (-1)^{i+j} α([X_i,X_j], ...) with an overall minus sign;
// d∘d = 0, closedness and all cohomological counts are unaffected.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "bornforge/lie_algebra.hpp"
#include "bornforge/quadric_locus.hpp"

namespace bornforge {

using IndexTuple = std::vector<std::size_t>;

/// A k-form on an n-dimensional space: strictly increasing 0-based index
/// tuples mapped to nonzero coefficients.
struct KForm {
  std::size_t degree = 0;
  std::size_t ambient_dim = 0;
  std::map<IndexTuple, Rational> coeffs;

  KForm() = default;
  KForm(std::size_t k, std::size_t n) : degree(k), ambient_dim(n) {}

  /// e^{i1} ∧ ... ∧ e^{ik}; the indices are sorted with the permutation sign.
  static KForm monomial(std::size_t n, IndexTuple idx, const Rational& c = 1) {
    KForm f(idx.size(), n);
    f.add(std::move(idx), c);
    return f;
  }

  void add(IndexTuple idx, const Rational& c) {
    if (bornforge::is_zero(c)) return;
    for (auto i : idx)
      if (i >= ambient_dim) throw ContractError("KForm index out of range");
    int sign = 1;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (idx[a] == idx[b]) return;
        if (idx[a] > idx[b]) sign = -sign;
      }
    std::sort(idx.begin(), idx.end());
    Rational& slot = coeffs[idx];
    slot += sign * c;
    if (bornforge::is_zero(slot)) coeffs.erase(idx);
  }

  bool is_zero() const { return coeffs.empty(); }

  KForm& operator+=(const KForm& o) {
    if (o.degree != degree || o.ambient_dim != ambient_dim) throw ContractError("KForm +: shape mismatch");
    for (const auto& [idx, c] : o.coeffs) add(idx, c);
    return *this;
  }
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator*(const Rational& s, KForm a) {
    if (bornforge::is_zero(s)) return KForm(a.degree, a.ambient_dim);
    for (auto& [idx, c] : a.coeffs) c *= s;
    return a;
  }
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.degree == b.degree && a.ambient_dim == b.ambient_dim && a.coeffs == b.coeffs;
  }
};

/// Exterior product with shuffle signs. Degrees beyond n give the zero form.
inline KForm wedge(const KForm& a, const KForm& b) {
  if (a.ambient_dim != b.ambient_dim) throw ContractError("wedge: ambient dimensions differ");
  KForm out(a.degree + b.degree, a.ambient_dim);
  if (out.degree > out.ambient_dim) return out;
  for (const auto& [ia, ca] : a.coeffs)
    for (const auto& [ib, cb] : b.coeffs) {
      IndexTuple idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add(std::move(idx), ca * cb);
    }
  return out;
}

/// All increasing k-subsets of {0..n-1} in lexicographic order.
inline std::vector<IndexTuple> subsets(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Coordinates of a k-form in the lexicographic monomial basis.
inline Matrix to_vector(const KForm& f) {
  auto basis = subsets(f.ambient_dim, f.degree);
  Matrix v(basis.size(), 1);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    auto it = f.coeffs.find(basis[r]);
    if (it != f.coeffs.end()) v[r] = it->second;
  }
  return v;
}

inline KForm from_vector(std::size_t n, std::size_t k, const Matrix& v) {
  auto basis = subsets(n, k);
  if (v.rows() != basis.size()) throw ContractError("from_vector: length mismatch");
  KForm f(k, n);
  for (std::size_t r = 0; r < basis.size(); ++r) f.add(basis[r], v[r]);
  return f;
}

/// d e^k = Σ_{i<j} c_{ij}^k e^{ij}.
inline KForm d_one_form(const LieAlgebra& l, std::size_t k) {
  KForm f(2, l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) f.add({i, j}, l.constant(i, j, k));
  return f;
}

/// Chevalley–Eilenberg differential, extended from degree one as a graded
/// derivation.
inline KForm ce_d(const LieAlgebra& l, const KForm& a) {
  if (a.ambient_dim != l.dim()) throw ContractError("ce_d: form and algebra dimensions differ");
  const std::size_t n = l.dim();
  KForm out(a.degree + 1, n);
  if (out.degree > n) return out;
  std::vector<KForm> d1;
  for (std::size_t k = 0; k < n; ++k) d1.push_back(d_one_form(l, k));
  for (const auto& [idx, c] : a.coeffs)
    for (std::size_t p = 0; p < idx.size(); ++p) {
      // (-1)^p e^{i_0..i_{p-1}} ∧ d e^{i_p} ∧ e^{i_{p+1}..}
      for (const auto& [pair, dc] : d1[idx[p]].coeffs) {
        IndexTuple t(idx.begin(), idx.begin() + static_cast<long>(p));
        t.insert(t.end(), pair.begin(), pair.end());
        t.insert(t.end(), idx.begin() + static_cast<long>(p) + 1, idx.end());
        Rational coeff = c * dc;
        if (p % 2) coeff = -coeff;
        out.add(std::move(t), coeff);
      }
    }
  return out;
}

/// Matrix of d: Λ^k → Λ^{k+1} in lexicographic monomial bases.
inline Matrix d_matrix(const LieAlgebra& l, std::size_t k) {
  const std::size_t n = l.dim();
  auto src = subsets(n, k);
  auto dst = subsets(n, k + 1);
  Matrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    Matrix v = to_vector(ce_d(l, KForm::monomial(n, src[c])));
    for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = v[r];
  }
  return m;
}

/// dim ker(d_k) - rank(d_{k-1}).
inline std::size_t betti(const LieAlgebra& l, std::size_t k) {
  const std::size_t n = l.dim();
  if (k > n) throw ContractError("betti: degree exceeds dimension");
  auto count = subsets(n, k).size();
  std::size_t rank_out = k == n ? 0 : rank(d_matrix(l, k));
  std::size_t rank_in = k == 0 ? 0 : rank(d_matrix(l, k - 1));
  return count - rank_out - rank_in;
}

/// For 2-forms: a ∧ a = 0, equivalently rank ≤ 2.
inline bool is_decomposable(const KForm& a) {
  if (a.degree != 2) throw ContractError("is_decomposable expects a 2-form");
  return wedge(a, a).is_zero();
}

/// Basis of the exact 2-forms d(Λ^1).
inline std::vector<KForm> exact_two_forms(const LieAlgebra& l) {
  Matrix img = column_space(d_matrix(l, 1));
  std::vector<KForm> out;
  for (std::size_t j = 0; j < img.cols(); ++j) out.push_back(from_vector(l.dim(), 2, img.col(j)));
  return out;
}

namespace detail {

/// Quadratic forms q_c(t) = coordinate c of (Σ t_a w_a) ∧ (Σ t_a w_a).
inline std::vector<Matrix> decomposability_quadrics(const std::vector<KForm>& w) {
  const std::size_t m = w.size();
  if (m == 0) return {};
  std::map<IndexTuple, Matrix> by_coord;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      KForm prod = wedge(w[a], w[b]);
      for (const auto& [idx, c] : prod.coeffs) {
        auto it = by_coord.try_emplace(idx, m, m).first;
        // Symmetric matrix entry: off-diagonal pairs appear twice in tᵀMt.
        it->second(a, b) += c;
        if (a != b) it->second(b, a) += c;
      }
    }
  std::vector<Matrix> qs;
  for (auto& [idx, q] : by_coord)
    if (!q.is_zero()) qs.push_back(q);
  return qs;
}

}  // namespace detail

/// Dimension of the span of the decomposable exact 2-forms. Exact for
/// dim d(Λ^1) ≤ 3; throws UnsupportedError beyond.
inline std::size_t nu2(const LieAlgebra& l) {
  auto w = exact_two_forms(l);
  if (w.size() > 3) throw UnsupportedError("nu2: more than three independent exact 2-forms");
  return real_zero_span(w.size(), detail::decomposability_quadrics(w)).cols();
}

/// Lower bound for ν² from rational points t with first nonzero coordinate 1
/// and the others of the form p/q, |p| ≤ bound, 1 ≤ q ≤ bound.
inline std::size_t nu2_grid_search(const LieAlgebra& l, long bound = 8) {
  auto w = exact_two_forms(l);
  const std::size_t m = w.size();
  if (m == 0) return 0;
  auto qs = detail::decomposability_quadrics(w);
  std::vector<Rational> values;
  for (long q = 1; q <= bound; ++q)
    for (long p = -bound; p <= bound; ++p) {
      Rational r = frac(p, q);
      if (std::find(values.begin(), values.end(), r) == values.end()) values.push_back(r);
    }
  std::vector<Matrix> found;
  auto consider = [&](const Matrix& t) {
    for (const auto& q : qs)
      if (!is_zero((t.transpose() * q * t)(0, 0))) return;
    if (!in_span(Matrix::from_columns(found, m), t)) found.push_back(t);
  };
  for (std::size_t lead = 0; lead < m && found.size() < m; ++lead) {
    const std::size_t free = m - lead - 1;
    std::vector<std::size_t> digit(free, 0);
    while (true) {
      Matrix t(m, 1);
      t[lead] = 1;
      for (std::size_t f = 0; f < free; ++f) t[lead + 1 + f] = values[digit[f]];
      consider(t);
      std::size_t f = 0;
      while (f < free && ++digit[f] == values.size()) digit[f++] = 0;
      if (f == free) break;
    }
  }
  return found.size();
}

}  // namespace bornforge
