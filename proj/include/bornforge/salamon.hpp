#pragma once

// Salamon notation: "(0,0,0,12,13+14,24)" lists d e^k for k = 1..n as
// combinations of e^{ij} = e^i ∧ e^j. An entry "ij" in position k means
// [e_i, e_j] = e_k; reversed pairs ("42") flip the sign. Optional
// coefficients are written "2*12" or "-3/2*13".

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bornforge/lie_algebra.hpp"

namespace bornforge {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  /// Byte offset into the input where parsing stopped.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class SalamonParser {
 public:
  explicit SalamonParser(std::string_view text) : s_(text) {}

  std::vector<BracketTerm> parse(std::size_t& dim) {
    skip_ws();
    expect('(');
    std::vector<std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>>> entries;
    while (true) {
      entries.push_back(entry());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    dim = entries.size();
    if (dim > 9) throw ParseError("Salamon notation supports at most 9 generators", 0);
    std::vector<BracketTerm> terms;
    for (std::size_t k = 0; k < entries.size(); ++k)
      for (const auto& [ij, c] : entries[k]) {
        auto [i, j] = ij;
        if (i >= dim || j >= dim) throw ParseError("index exceeds dimension " + std::to_string(dim), index_pos_[k]);
        terms.push_back({i, j, k, c});
      }
    return terms;
  }

 private:
  using Entry = std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>>;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // Accepts ASCII '-' and U+2212 (UTF-8 E2 88 92).
  int sign() {
    skip_ws();
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    if (peek() == '-') {
      ++pos_;
      return -1;
    }
    if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return -1;
    }
    return 0;
  }

  Entry entry() {
    skip_ws();
    Entry e;
    index_pos_.push_back(pos_);
    std::size_t save = pos_;
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (peek() == ',' || peek() == ')') return e;
      pos_ = save;
    }
    int sg = sign();
    e.push_back(term(sg == 0 ? 1 : sg));
    while (true) {
      skip_ws();
      if (peek() == ',' || peek() == ')' || peek() == '\0') break;
      int s = sign();
      if (s == 0) fail("expected '+' or '-'");
      e.push_back(term(s));
    }
    return e;
  }

  std::pair<std::pair<std::size_t, std::size_t>, Rational> term(int sg) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && ((s_[pos_] >= '0' && s_[pos_] <= '9') || s_[pos_] == '/')) ++pos_;
    std::string_view tok = s_.substr(start, pos_ - start);
    skip_ws();
    Rational coeff = sg;
    std::string_view idx = tok;
    if (peek() == '*') {
      try {
        coeff *= parse_rational(tok);
      } catch (const ContractError&) {
        pos_ = start;
        fail("malformed coefficient");
      }
      ++pos_;
      skip_ws();
      start = pos_;
      while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
      idx = s_.substr(start, pos_ - start);
    }
    if (idx.size() != 2 || idx.find('/') != std::string_view::npos) {
      pos_ = start;
      fail("expected two index digits");
    }
    std::size_t i = static_cast<std::size_t>(idx[0] - '0');
    std::size_t j = static_cast<std::size_t>(idx[1] - '0');
    if (i == 0 || j == 0) {
      pos_ = start;
      fail("indices are 1-based");
    }
    if (i == j) {
      pos_ = start;
      fail("repeated index in wedge term");
    }
    return {{i - 1, j - 1}, coeff};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> index_pos_;
};

}  // namespace detail

/// Parses Salamon notation. Throws ParseError on bad syntax and
/// ValidationError when the brackets violate Jacobi.
inline LieAlgebra parse_salamon(std::string_view text, std::string name = {}) {
  std::size_t dim = 0;
  auto terms = detail::SalamonParser(text).parse(dim);
  return LieAlgebra::from_brackets(dim, terms, std::move(name));
}

/// Inverse of parse_salamon. Terms are printed with i < j.
inline std::string print_salamon(const LieAlgebra& l) {
  if (l.dim() > 9) throw ContractError("print_salamon: dimension exceeds 9");
  std::string out = "(";
  for (std::size_t k = 0; k < l.dim(); ++k) {
    if (k) out += ',';
    std::string entry;
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = i + 1; j < l.dim(); ++j) {
        Rational c = l.constant(i, j, k);
        if (is_zero(c)) continue;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (neg)
          entry += '-';
        else if (!entry.empty())
          entry += '+';
        if (c != 1) entry += to_string(c) + '*';
        entry += std::to_string(i + 1) + std::to_string(j + 1);
      }
    out += entry.empty() ? "0" : entry;
  }
  return out + ")";
}

}  // namespace bornforge
