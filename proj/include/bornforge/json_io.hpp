#pragma once

// JSON encodings for algebras, forms, structures and bicross data. Rationals
// are written as "p/q" strings; plain JSON integers are accepted on input.

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "bornforge/born.hpp"
#include "bornforge/exterior.hpp"
#include "bornforge/geometry.hpp"
#include "bornforge/products.hpp"
#include "bornforge/salamon.hpp"

namespace bornforge {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent input documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ContractError& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected a rational (string \"p/q\" or integer), got " + j.dump());
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a non-empty matrix (array of rows)");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw InputError("matrix rows must be arrays");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError("ragged matrix at row " + std::to_string(r + 1));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

inline json vector_to_json(const Matrix& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.rows(); ++i) out.push_back(to_string(v[i]));
  return out;
}

/// {"name", "dim", "salamon"?, "brackets": [{"i","j","out":{"k":"c"}}]}, 1-based.
inline json to_json(const LieAlgebra& l) {
  json j;
  j["name"] = l.name();
  j["dim"] = l.dim();
  if (l.dim() <= 9) j["salamon"] = print_salamon(l);
  json brackets = json::array();
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t b = a + 1; b < l.dim(); ++b) {
      json out = json::object();
      for (std::size_t k = 0; k < l.dim(); ++k)
        if (!is_zero(l.constant(a, b, k))) out[std::to_string(k + 1)] = to_string(l.constant(a, b, k));
      if (!out.empty()) brackets.push_back({{"i", a + 1}, {"j", b + 1}, {"out", out}});
    }
  j["brackets"] = brackets;
  return j;
}

/// Accepts a Salamon string, {"salamon": ...}, or {"dim", "brackets"}.
inline LieAlgebra lie_from_json(const json& j) {
  if (j.is_string()) return parse_salamon(j.get<std::string>());
  if (!j.is_object()) throw InputError("algebra must be a Salamon string or an object");
  std::string name = j.value("name", std::string{});
  if (j.contains("salamon")) return parse_salamon(j["salamon"].get<std::string>(), name);
  if (!j.contains("dim")) throw InputError("algebra object needs \"salamon\" or \"dim\"");
  const auto dim = j["dim"].get<std::size_t>();
  std::vector<BracketTerm> terms;
  for (const auto& b : j.value("brackets", json::array())) {
    auto i = b.at("i").get<std::size_t>(), jj = b.at("j").get<std::size_t>();
    if (i < 1 || jj < 1 || i > dim || jj > dim) throw InputError("bracket index out of range");
    for (const auto& [k, c] : b.at("out").items()) {
      std::size_t kk = std::stoul(k);
      if (kk < 1 || kk > dim) throw InputError("bracket output index out of range");
      terms.push_back({i - 1, jj - 1, kk - 1, rational_from_json(c)});
    }
  }
  try {
    return LieAlgebra::from_brackets(dim, terms, name);
  } catch (const ContractError& e) {
    throw InputError(e.what());
  }
}

inline json to_json(const KForm& f) {
  json terms = json::array();
  for (const auto& [idx, c] : f.coeffs) {
    json ix = json::array();
    for (auto i : idx) ix.push_back(i + 1);
    terms.push_back({{"idx", ix}, {"c", to_string(c)}});
  }
  return {{"degree", f.degree}, {"terms", terms}};
}

/// Subspace from either 1-based basis indices ([1,3]) or explicit vectors.
inline Subspace subspace_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) throw InputError("subspace must be an array");
  std::vector<Matrix> vs;
  for (const auto& e : j) {
    if (e.is_number_integer()) {
      auto i = e.get<long>();
      if (i < 1 || static_cast<std::size_t>(i) > n) throw InputError("subspace index out of range");
      vs.push_back(Matrix::unit(n, static_cast<std::size_t>(i - 1)));
    } else if (e.is_array()) {
      if (e.size() != n) throw InputError("subspace vector has wrong length");
      Matrix v(n, 1);
      for (std::size_t i = 0; i < n; ++i) v[i] = rational_from_json(e[i]);
      vs.push_back(v);
    } else {
      throw InputError("subspace entries must be indices or vectors");
    }
  }
  Subspace s = Subspace::span(vs, n);
  if (s.dim() != vs.size()) throw InputError("subspace vectors are linearly dependent");
  return s;
}

inline json to_json(const Subspace& s) {
  json out = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(vector_to_json(s.vector(i)));
  return out;
}

inline json to_json(const HermitianBornData& d) {
  return {{"algebra", to_json(d.algebra)},
          {"h", to_json(d.h.gram())},
          {"J", to_json(d.J)},
          {"g_plus", to_json(d.g_plus)},
          {"g_minus", to_json(d.g_minus)}};
}

inline BilinearForm symmetric_from_json(const json& j, const char* what) {
  Matrix m = matrix_from_json(j);
  if (!m.is_square() || !m.is_symmetric()) throw InputError(std::string(what) + " must be a symmetric square matrix");
  return BilinearForm::symmetric(m);
}

inline HermitianBornData hermitian_from_json(const json& j, const LieAlgebra& l) {
  HermitianBornData d;
  d.algebra = l;
  d.h = symmetric_from_json(j.at("h"), "h");
  d.J = matrix_from_json(j.at("J"));
  d.g_plus = subspace_from_json(j.at("g_plus"), l.dim());
  d.g_minus = subspace_from_json(j.at("g_minus"), l.dim());
  if (d.h.dim() != l.dim() || d.J.rows() != l.dim() || d.J.cols() != l.dim())
    throw InputError("structure dimension does not match the algebra");
  return d;
}

inline json to_json(const BornStructure& s) {
  return {{"algebra", to_json(s.algebra)},
          {"g", to_json(s.g.gram())},
          {"h", to_json(s.h.gram())},
          {"omega", to_json(s.omega.gram())}};
}

/// Gram matrices of (g, h, ω) for a forms bundle.
struct FormsBundle {
  LieAlgebra algebra{1};
  BilinearForm g, h, omega;
};

inline FormsBundle forms_from_json(const json& j, const LieAlgebra& l) {
  FormsBundle b;
  b.algebra = l;
  b.g = symmetric_from_json(j.at("g"), "g");
  b.h = symmetric_from_json(j.at("h"), "h");
  Matrix w = matrix_from_json(j.at("omega"));
  if (!w.is_square() || !w.is_antisymmetric()) throw InputError("omega must be an antisymmetric square matrix");
  b.omega = BilinearForm::antisymmetric(w);
  if (b.g.dim() != l.dim() || b.h.dim() != l.dim() || b.omega.dim() != l.dim())
    throw InputError("structure dimension does not match the algebra");
  return b;
}

inline json curvature_report(const LieAlgebra& l, const BilinearForm& h) {
  json j;
  j["flat"] = is_flat(l, h);
  auto e = is_einstein(l, h);
  j["einstein"] = e ? json(to_string(*e)) : json(nullptr);
  auto s = is_ricci_soliton(l, h);
  if (s)
    j["soliton"] = {{"lambda", to_string(s->lambda)}, {"D", to_json(s->derivation)}, {"unique", s->unique}};
  else
    j["soliton"] = nullptr;
  return j;
}

inline json to_json(const BicrossData& d) {
  json phi = json::array(), rho = json::array();
  for (const auto& m : d.phi.images) phi.push_back(to_json(m));
  for (const auto& m : d.rho.images) rho.push_back(to_json(m));
  return {{"g_plus", to_json(d.g_plus)}, {"g_minus", to_json(d.g_minus)}, {"h_minus", to_json(d.h_minus.gram())},
          {"Q", to_json(d.Q)},           {"phi", phi},                    {"rho", rho}};
}

inline BicrossData bicross_from_json(const json& j) {
  BicrossData d;
  d.g_plus = lie_from_json(j.at("g_plus"));
  d.g_minus = lie_from_json(j.at("g_minus"));
  d.h_minus = symmetric_from_json(j.at("h_minus"), "h_minus");
  d.Q = matrix_from_json(j.at("Q"));
  for (const auto& m : j.at("phi")) d.phi.images.push_back(matrix_from_json(m));
  for (const auto& m : j.at("rho")) d.rho.images.push_back(matrix_from_json(m));
  return d;
}

}  // namespace bornforge
