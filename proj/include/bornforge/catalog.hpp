#pragma once

// Named algebras of dimension 2, 4 and 6 with their known Born structures,
// numerical fingerprints and fingerprint-based identification.

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bornforge/born.hpp"
#include "bornforge/catalog_data.hpp"
#include "bornforge/exterior.hpp"
#include "bornforge/json_io.hpp"
#include "bornforge/products.hpp"
#include "bornforge/salamon.hpp"

namespace bornforge {

/// (step, b1, b2, b3, dim Der, dim center, ν²). dim Der is the dimension of
/// the automorphism group. step is empty for non-nilpotent algebras; ν² is
/// empty when not computed or outside the exact solver's range.
struct Fingerprint {
  std::optional<std::size_t> step;
  std::size_t b1 = 0, b2 = 0, b3 = 0;
  std::size_t dim_der = 0;
  std::size_t dim_center = 0;
  std::optional<std::size_t> nu2;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Fingerprint& f) {
  os << "(";
  if (f.step)
    os << *f.step;
  else
    os << "not nilpotent";
  os << ", " << f.b1 << ", " << f.b2 << ", " << f.b3 << ", " << f.dim_der << ", " << f.dim_center << ", ";
  if (f.nu2)
    os << *f.nu2;
  else
    os << "?";
  return os << ")";
}

inline std::optional<std::size_t> try_nu2(const LieAlgebra& l) {
  try {
    return nu2(l);
  } catch (const UnsupportedError&) {
    return std::nullopt;
  }
}

inline Fingerprint fingerprint(const LieAlgebra& l, bool with_nu2 = true) {
  Fingerprint f;
  f.step = nil_step(l);
  const std::size_t n = l.dim();
  f.b1 = betti(l, 1);
  f.b2 = n >= 2 ? betti(l, 2) : 0;
  f.b3 = n >= 3 ? betti(l, 3) : 0;
  f.dim_der = dim_der(l);
  f.dim_center = center(l).dim();
  if (with_nu2) f.nu2 = try_nu2(l);
  return f;
}

/// Coarser invariant for dimension ≤ 4: nilpotency step (or derived length
/// for non-nilpotent algebras), b1, b2, dim Der, dim center and the
/// signature of the Killing form.
struct ReducedFingerprint {
  bool nilpotent = false;
  std::size_t step_or_length = 0;
  std::size_t b1 = 0, b2 = 0, dim_der = 0, dim_center = 0;
  Signature killing;

  friend bool operator==(const ReducedFingerprint&, const ReducedFingerprint&) = default;
};

inline ReducedFingerprint reduced_fingerprint(const LieAlgebra& l) {
  ReducedFingerprint f;
  auto step = nil_step(l);
  f.nilpotent = step.has_value();
  if (step)
    f.step_or_length = *step;
  else
    f.step_or_length = derived_length(l).value_or(0);
  f.b1 = betti(l, 1);
  f.b2 = l.dim() >= 2 ? betti(l, 2) : 0;
  f.dim_der = dim_der(l);
  f.dim_center = center(l).dim();
  f.killing = signature_of_symmetric(killing_form(l));
  return f;
}

struct CatalogEntry {
  std::string name;
  std::string salamon;
  LieAlgebra algebra{1};
  /// Admits an integrable Born structure.
  bool born = false;
  /// Known integrable Born structure. For six-dimensional entries it lives on
  /// the construction's own basis (an isomorphic model), see structure_model.
  std::optional<HermitianBornData> structure;
  /// True when `structure` is carried by an isomorphic model rather than the
  /// Salamon basis.
  bool structure_on_model = false;
  /// Construction parameters as stored in the asset, if any.
  json construction;
};

/// Builds the bicross data named by a construction record.
inline BicrossData construction_data(const json& c) {
  const std::string family = c.at("family").get<std::string>();
  if (family == "r3-heis3") {
    Rational x = rational_from_json(c.at("x")), y = rational_from_json(c.at("y"));
    Rational x0 = c.contains("x0") ? rational_from_json(c["x0"]) : Rational(0);
    Rational y0 = c.contains("y0") ? rational_from_json(c["y0"]) : Rational(0);
    return family_r3_heis3(x, y, x0, y0);
  }
  if (family == "r3-r3") {
    auto pair = family_r3_r3();
    int k = c.at("instance").get<int>();
    if (k == 1) return pair.first;
    if (k == 2) return pair.second;
    throw InputError("r3-r3 instance must be 1 or 2");
  }
  throw InputError("unknown family '" + family + "'");
}

inline const json& catalog_asset() {
  static const json asset = json::parse(catalog_json);
  return asset;
}

/// Strips decoration so that "d_{4,2}" and "d4,2" name the same entry.
inline std::string normalize_name(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != '_' && c != '{' && c != '}' && c != ' ') out += c;
  return out;
}

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& a : catalog_asset().at("algebras")) {
      CatalogEntry e;
      e.name = a.at("name").get<std::string>();
      e.salamon = a.at("salamon").get<std::string>();
      e.algebra = parse_salamon(e.salamon, e.name);
      e.born = a.at("born").get<bool>();
      if (a.contains("structure")) {
        e.structure = hermitian_from_json(a["structure"], e.algebra);
      } else if (a.contains("construction")) {
        e.construction = a["construction"];
        auto product = bicross(construction_data(e.construction), e.name);
        e.structure = product.hermitian;
        e.structure_on_model = true;
      }
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

inline const CatalogEntry* find_entry(const std::string& name) {
  const std::string key = normalize_name(name);
  for (const auto& e : catalog())
    if (normalize_name(e.name) == key) return &e;
  return nullptr;
}

inline const CatalogEntry& entry(const std::string& name) {
  if (auto e = find_entry(name)) return *e;
  throw InputError("no catalog entry named '" + name + "'");
}

/// Raised when two catalog entries share an invariant that is supposed to
/// separate them.
class AmbiguityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Identification {
  std::optional<std::string> name;
  /// Matching fingerprints within the catalog's validated scope; outside it a
  /// match is only a candidate.
  bool certified = false;

  std::string describe() const {
    if (!name) return "none";
    if (certified) return *name;
    return "candidate: " + *name + " (fingerprint match, isomorphism not certified)";
  }
};

namespace detail {

inline const Fingerprint& catalog_fingerprint(std::size_t index) {
  static std::mutex mu;
  static std::vector<std::optional<Fingerprint>> cache(catalog().size());
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[index]) cache[index] = fingerprint(catalog()[index].algebra);
  return *cache[index];
}

inline const ReducedFingerprint& catalog_reduced(std::size_t index) {
  static std::mutex mu;
  static std::vector<std::optional<ReducedFingerprint>> cache(catalog().size());
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[index]) cache[index] = reduced_fingerprint(catalog()[index].algebra);
  return *cache[index];
}

}  // namespace detail

inline const Fingerprint& catalog_fingerprint(const CatalogEntry& e) {
  const auto& all = catalog();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (&all[i] == &e) return detail::catalog_fingerprint(i);
  throw ContractError("catalog_fingerprint: entry is not from catalog()");
}

/// Matches against catalog entries of the same dimension: the full
/// fingerprint in dimension 6 (ν² only computed when the other six numbers
/// leave a tie), the reduced one below. `in_scope` marks inputs already known
/// to be nilpotent pseudo-Kähler, where six-dimensional matches are certain.
inline Identification identify(const LieAlgebra& l, bool in_scope = false) {
  const auto& all = catalog();
  std::vector<std::size_t> candidates;
  if (l.dim() == 6) {
    Fingerprint f = fingerprint(l, false);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i].algebra.dim() != 6) continue;
      Fingerprint c = detail::catalog_fingerprint(i);
      c.nu2.reset();
      if (c == f) candidates.push_back(i);
    }
    if (candidates.size() > 1) {
      auto v = try_nu2(l);
      std::vector<std::size_t> keep;
      for (auto i : candidates)
        if (detail::catalog_fingerprint(i).nu2 == v) keep.push_back(i);
      candidates = keep;
    }
  } else {
    ReducedFingerprint f = reduced_fingerprint(l);
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i].algebra.dim() == l.dim() && detail::catalog_reduced(i) == f) candidates.push_back(i);
  }
  if (candidates.size() > 1) {
    std::string names;
    for (auto i : candidates) names += (names.empty() ? "" : ", ") + all[i].name;
    throw AmbiguityError("fingerprint matches several catalog entries: " + names);
  }
  Identification r;
  if (candidates.empty()) return r;
  r.name = all[candidates.front()].name;
  r.certified = l.dim() != 6 || in_scope || l == all[candidates.front()].algebra;
  return r;
}

/// Identification for algebras that carry an integrable Born structure (so
/// they lie in the validated six-dimensional scope when nilpotent).
inline Identification identify_born(const LieAlgebra& l) { return identify(l, nil_step(l).has_value()); }

}  // namespace bornforge
