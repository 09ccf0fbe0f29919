#pragma once

// Exact rational scalars backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bornforge {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// Raised when a caller breaks a documented precondition (shape mismatch,
/// non-symmetric input, and so on).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational frac(long num, long den = 1) {
  if (den == 0) throw ContractError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

/// Accepts "p", "p/q", "-p/q" and "+p"; whitespace around the text is ignored.
inline Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ContractError("empty rational");
  std::string s(text.substr(first, last - first + 1));
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view part) {
    if (!part.empty() && part.front() == '-') part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view sv(s);
  if (slash == std::string::npos) {
    if (!digits_ok(sv)) throw ContractError("malformed rational '" + s + "'");
  } else {
    std::string_view den = sv.substr(slash + 1);
    if (!digits_ok(sv.substr(0, slash)) || !digits_ok(den) || den.front() == '-')
      throw ContractError("malformed rational '" + s + "'");
    if (den.find_first_not_of('0') == std::string_view::npos)
      throw ContractError("zero denominator in '" + s + "'");
  }
  Rational r(s, 10);
  r.canonicalize();
  return r;
}

}  // namespace bornforge
