#pragma once

// Multivariate polynomials over Q and a plain Buchberger algorithm in graded
// reverse lexicographic order. Sized for the small systems that arise when a
// parametrized family of matrices is asked to satisfy bracket relations.

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bornforge/rational.hpp"

namespace bornforge {

using Exponent = std::vector<unsigned>;

/// grevlex: higher total degree first, ties broken by the smallest last
/// differing exponent.
struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    unsigned da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, GrevlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    Exponent e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, 1);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.size() == 1 && degree() == 0; }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned t = 0;
      for (auto x : e) t += x;
      d = std::max(d, t);
    }
    return d;
  }

  const Exponent& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Exponent& e, const Rational& c) {
    if (bornforge::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (bornforge::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    Polynomial out(p.nvars_);
    if (bornforge::is_zero(s)) return out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
    return out;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  /// Multiplies by c·x^e.
  Polynomial times_term(const Exponent& e, const Rational& c) const {
    Polynomial out(nvars_);
    for (const auto& [m, k] : terms_) {
      Exponent s(m.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = m[i] + e[i];
      out.terms_.emplace(std::move(s), k * c);
    }
    return out;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading_coefficient();
    return inv * *this;
  }

  /// Value at a rational point.
  Rational evaluate(const std::vector<Rational>& x) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
      sum += t;
    }
    return sum;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) os << "*t" << i + 1 << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return os;
  }

 private:
  std::size_t nvars_;
  Terms terms_;
};

namespace detail {

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

inline Exponent quotient(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace detail

/// Full reduction of p modulo the list g.
inline Polynomial reduce(Polynomial p, const std::vector<Polynomial>& g) {
  Polynomial rem(p.nvars());
  while (!p.is_zero()) {
    const Exponent lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    bool reduced = false;
    for (const auto& q : g) {
      if (q.is_zero() || !detail::divides(q.leading_monomial(), lm)) continue;
      p -= q.times_term(detail::quotient(lm, q.leading_monomial()), lc / q.leading_coefficient());
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return rem;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Exponent l = detail::lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(detail::quotient(l, f.leading_monomial()), 1 / f.leading_coefficient()) -
         g.times_term(detail::quotient(l, g.leading_monomial()), 1 / g.leading_coefficient());
}

/// Reduced Gröbner basis (monic, grevlex). Returns {1} exactly when the
/// equations have no common solution over C.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& input) {
  std::vector<Polynomial> g;
  for (const auto& p : input) {
    Polynomial r = reduce(p, g).monic();
    if (!r.is_zero()) g.push_back(r);
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace(i, j);
  while (!pairs.empty()) {
    auto [i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (detail::coprime(g[i].leading_monomial(), g[j].leading_monomial())) continue;
    Polynomial r = reduce(s_polynomial(g[i], g[j]), g).monic();
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      std::size_t n = r.nvars();
      return {Polynomial::constant(n, 1)};
    }
    g.push_back(r);
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace(k, g.size() - 1);
  }
  // Minimize and interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !detail::divides(g[j].leading_monomial(), g[i].leading_monomial())) continue;
      // Among equal leading monomials keep the first.
      redundant = g[j].leading_monomial() != g[i].leading_monomial() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(reduce(minimal[i], others).monic());
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return GrevlexGreater{}(b.leading_monomial(), a.leading_monomial());
  });
  return out;
}

inline bool is_unit_ideal(const std::vector<Polynomial>& basis) {
  return basis.size() == 1 && basis.front().is_constant();
}

}  // namespace bornforge
