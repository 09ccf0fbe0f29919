#pragma once

// Report builders behind the command-line tool: structure verification,
// reproduction of the reference tables, family sweeps and audits.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bornforge/born.hpp"
#include "bornforge/catalog.hpp"
#include "bornforge/exterior.hpp"
#include "bornforge/geometry.hpp"
#include "bornforge/json_io.hpp"
#include "bornforge/parallel.hpp"
#include "bornforge/products.hpp"
#include "bornforge/report.hpp"
#include "bornforge/salamon.hpp"

namespace bornforge {

namespace fmt {

inline std::string yes(bool b) { return b ? "yes" : "no"; }

inline std::string str(const Signature& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

inline std::string str(const Fingerprint& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

/// diag(...) for diagonal matrices, row list otherwise.
inline std::string str(const Matrix& m) {
  bool diagonal = m.is_square();
  for (std::size_t i = 0; i < m.rows() && diagonal; ++i)
    for (std::size_t j = 0; j < m.cols() && diagonal; ++j)
      if (i != j && !is_zero(m(i, j))) diagonal = false;
  std::string out = diagonal ? "diag(" : "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (diagonal) {
      out += (i ? "," : "") + to_string(m(i, i));
      continue;
    }
    out += i ? ";" : "";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + to_string(m(i, j));
  }
  return out + (diagonal ? ")" : "]");
}

inline std::string point(const Rational& x, const Rational& y) {
  return "(x,y)=(" + to_string(x) + "," + to_string(y) + ")";
}

}  // namespace fmt

inline std::string curvature_label(const LieAlgebra& l, const BilinearForm& h) {
  return to_string(classify_curvature(l, h));
}

inline std::string flatness_label(const LieAlgebra& l, const BilinearForm& h) {
  return is_flat(l, h) ? "Flat" : "Non-flat";
}

// ---------------------------------------------------------------- check

/// All algebraic and integrability checks on an assembled structure; prefix
/// names the structure in multi-structure reports.
inline void verify_structure(Report& r, const BornStructure& s, const std::string& prefix = {}) {
  const std::string p = prefix.empty() ? "" : prefix + ": ";
  auto t1 = check_table1(s);
  for (const auto& rel : t1.relations) r.check(p + "rule " + rel.label(), rel.holds);
  auto in = check_integrable(s);
  r.check(p + "ω is closed", in.omega_closed);
  r.check(p + "Nijenhuis tensor of J vanishes", in.nijenhuis_zero);
  r.check(p + "eigenspaces of A are subalgebras", in.eigenspaces_subalgebras);
  r.check(p + "∇J = 0 for the Levi-Civita connection of h", in.nablaJ_zero);
  r.check(p + "integrability criteria agree", in.formulations_agree);
  auto lg = eigenspace_lagrangian_report(s);
  r.check(p + "ω vanishes on both eigenspaces", lg.omega_vanishes_on_eigenspaces);
  r.check(p + "g vanishes on both eigenspaces", lg.g_vanishes_on_eigenspaces);
  r.check(p + "eigenspaces are h-orthogonal", lg.eigenspaces_h_orthogonal);
  r.check(p + "g has neutral signature", lg.g_neutral, "signature " + fmt::str(lg.g_signature));
  r.check(p + "h has even signature", lg.h_signature_even, "signature " + fmt::str(lg.h_signature));
}

inline Table curvature_table(const BornStructure& s) {
  Table t{"Curvature", {"metric", "class", "Einstein constant", "soliton λ", "soliton D"}, {}};
  for (auto [name, form] : {std::pair<const char*, const BilinearForm*>{"h", &s.h}, {"g", &s.g}}) {
    auto e = is_einstein(s.algebra, *form);
    auto so = is_ricci_soliton(s.algebra, *form);
    t.rows.push_back({name, curvature_label(s.algebra, *form), e ? to_string(*e) : "-",
                      so ? to_string(so->lambda) : "-", so ? fmt::str(so->derivation) : "-"});
  }
  return t;
}

/// Builds the structure from a JSON document holding either (h, J, g_plus,
/// g_minus) or (g, h, omega). Assembly failures are reported, not thrown.
inline std::optional<BornStructure> load_structure(Report& r, const LieAlgebra& l, const json& doc) {
  try {
    if (doc.contains("J")) return assemble_from_hermitian(hermitian_from_json(doc, l));
    if (doc.contains("omega")) {
      auto f = forms_from_json(doc, l);
      return assemble_from_forms(l, f.g, f.h, f.omega);
    }
  } catch (const ValidationError& e) {
    r.check("structure assembles", false, e.what());
    return std::nullopt;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(e.what());
  }
  throw InputError("structure needs either (h, J, g_plus, g_minus) or (g, h, omega)");
}

inline Report check_report(const LieAlgebra& l, const json& structure, json inputs = json::object()) {
  Report r;
  r.command = "check";
  r.inputs = std::move(inputs);
  r.check("Jacobi identity", check_jacobi(l).holds);
  auto s = load_structure(r, l, structure);
  if (!s) return r;
  r.check("structure assembles", true);
  verify_structure(r, *s);
  std::string id;
  try {
    id = identify(l, nil_step(l).has_value() && check_integrable(*s).verdict).describe();
  } catch (const AmbiguityError& e) {
    id = e.what();
  }
  r.tables.push_back({"Algebra",
                      {"dimension", "brackets", "identification"},
                      {{std::to_string(l.dim()), print_salamon(l), id}}});
  r.tables.push_back(curvature_table(*s));
  return r;
}

// ---------------------------------------------------------------- tables

inline const json& expected(const char* key) { return catalog_asset().at(key); }

/// Decomposes an integrable structure into bicross data and checks that the
/// rebuilt product is equivalent to it.
inline bool round_trip(const BornStructure& s) {
  auto dec = decompose_born(s);
  auto product = bicross(dec.data).born();
  return check_equivalence(product, s, dec.phi_map);
}

inline Report reproduce_table2() {
  Report r;
  r.command = "reproduce --table 2";
  r.inputs = {{"table", 2}};
  Table t{"Four-dimensional Lie algebras with an integrable Born structure",
          {"algebra", "brackets", "h signature", "transformation rules", "ω closed", "J integrable",
           "subalgebras", "∇J = 0", "Lagrangian"},
          {}};
  std::vector<std::string> names;
  for (const auto& n : expected("table2")) names.push_back(n.get<std::string>());
  struct Row {
    Report checks;
    std::vector<std::string> cells;
  };
  auto rows = parallel_map(names, [](const std::string& name) {
    Row row;
    const auto& e = entry(name);
    BornStructure s = assemble_from_hermitian(*e.structure);
    verify_structure(row.checks, s, name);
    row.checks.check(name + ": decomposes into a bicross product and back", round_trip(s));
    auto t1 = check_table1(s);
    std::size_t ok = 0;
    for (const auto& rel : t1.relations) ok += rel.holds;
    auto in = check_integrable(s);
    auto lg = eigenspace_lagrangian_report(s);
    row.cells = {name,
                 print_salamon(e.algebra),
                 fmt::str(lg.h_signature),
                 std::to_string(ok) + "/" + std::to_string(t1.relations.size()),
                 fmt::yes(in.omega_closed),
                 fmt::yes(in.nijenhuis_zero),
                 fmt::yes(in.eigenspaces_subalgebras),
                 fmt::yes(in.nablaJ_zero),
                 fmt::yes(lg.all_pass())};
    return row;
  });
  for (const auto& row : rows) {
    r.append(row.checks);
    t.rows.push_back(row.cells);
  }
  r.tables.insert(r.tables.begin(), t);
  return r;
}

inline Report reproduce_table3() {
  Report r;
  r.command = "reproduce --table 3";
  r.inputs = {{"table", 3}};
  Table t{"Curvature of the four-dimensional Born metrics", {"algebra", "h", "g", "λ", "D"}, {}};
  std::vector<json> rows_in(expected("table3").begin(), expected("table3").end());
  struct Row {
    std::vector<Check> checks;
    std::vector<std::string> cells;
  };
  auto rows = parallel_map(rows_in, [](const json& want) {
    Row row;
    const std::string name = want.at("name").get<std::string>();
    BornStructure s = assemble_from_hermitian(*entry(name).structure);
    const std::string h = curvature_label(s.algebra, s.h), g = curvature_label(s.algebra, s.g);
    auto cell = [&](const std::string& col, const std::string& got, const std::string& exp) {
      row.checks.push_back({name + ": " + col, got == exp, "expected " + exp + ", got " + got});
    };
    cell("h", h, want.at("h").get<std::string>());
    cell("g", g, want.at("g").get<std::string>());
    std::string lambda = "-", d = "-";
    if (want.contains("lambda")) {
      auto so = is_ricci_soliton(s.algebra, s.h);
      Matrix dwant = Matrix::diagonal([&] {
        std::vector<Rational> v;
        for (const auto& x : want["D"]) v.push_back(rational_from_json(x));
        return v;
      }());
      if (so) {
        lambda = to_string(so->lambda);
        d = fmt::str(so->derivation);
      }
      cell("λ", lambda, want["lambda"].get<std::string>());
      cell("D", d, fmt::str(dwant));
      row.checks.push_back({name + ": soliton data is unique", so && so->unique, ""});
    }
    row.cells = {name, h, g, lambda, d};
    return row;
  });
  for (const auto& row : rows) {
    r.checks.insert(r.checks.end(), row.checks.begin(), row.checks.end());
    t.rows.push_back(row.cells);
  }
  r.tables.push_back(t);
  return r;
}

/// Expected name for the R3 ⋈ heis3 family at (x, y).
inline std::string r3_heis3_case(const Rational& x, const Rational& y) {
  if (!is_zero(y)) return "h13";
  if (x == -1) return "h4";
  if (x == 0) return "h10";
  if (x == 1) return "h7";
  return "h11";
}

inline std::string r3_heis3_case_label(const Rational& x, const Rational& y) {
  if (!is_zero(y)) return "y != 0";
  if (x == -1) return "y = 0, x = -1";
  if (x == 0) return "y = 0, x = 0";
  if (x == 1) return "y = 0, x = 1";
  return "y = 0, x not in {-1, 0, 1}";
}

inline Report reproduce_table4() {
  Report r;
  r.command = "reproduce --table 4";
  r.inputs = {{"table", 4}};
  Table rows_t{"Curvature of the six-dimensional nilpotent Born Lie algebras", {"algebra", "h", "g"}, {}};
  Table samples_t{"Sampled parameters",
                  {"algebra", "sample", "identified", "h", "expected h", "g", "expected g"},
                  {}};
  struct Sample {
    std::string row;
    json params;
  };
  std::vector<Sample> samples;
  for (const auto& row : expected("table4")) {
    rows_t.rows.push_back({row["name"], row["h"], row["g"]});
    for (const auto& s : row.at("samples")) samples.push_back({row["name"].get<std::string>(), s});
  }
  struct Out {
    std::vector<Check> checks;
    std::vector<std::string> cells;
  };
  auto outs = parallel_map(samples, [](const Sample& smp) {
    Out o;
    const json& s = smp.params;
    std::string label = s["family"].get<std::string>() == "r3-heis3"
                            ? fmt::point(rational_from_json(s["x"]), rational_from_json(s["y"]))
                            : "instance " + std::to_string(s["instance"].get<int>());
    auto product = bicross(construction_data(s));
    BornStructure b = product.born();
    const std::string id = identify_born(b.algebra).describe();
    const std::string h = flatness_label(b.algebra, b.h), g = flatness_label(b.algebra, b.g);
    const std::string eh = s["h"], eg = s["g"];
    const std::string p = smp.row + " at " + label;
    o.checks.push_back({p + ": identifies as " + smp.row, id == smp.row, "got " + id});
    o.checks.push_back({p + ": h " + eh, h == eh, "got " + h});
    o.checks.push_back({p + ": g " + eg, g == eg, "got " + g});
    o.cells = {smp.row, label, id, h, eh, g, eg};
    return o;
  });
  for (const auto& o : outs) {
    r.checks.insert(r.checks.end(), o.checks.begin(), o.checks.end());
    samples_t.rows.push_back(o.cells);
  }
  r.tables.push_back(rows_t);
  r.tables.push_back(samples_t);
  return r;
}

inline Report reproduce_table5() {
  Report r;
  r.command = "reproduce --table 5";
  r.inputs = {{"table", 5}};
  Table t{"Numerical invariants of six-dimensional nilpotent pseudo-Kähler Lie algebras",
          {"algebra", "step", "b1", "b2", "b3", "dim Aut", "dim center", "ν²", "ν² (grid)"},
          {}};
  std::vector<json> rows_in(expected("table5").begin(), expected("table5").end());
  struct Row {
    std::vector<Check> checks;
    std::vector<std::string> cells;
    Fingerprint fp;
  };
  auto rows = parallel_map(rows_in, [](const json& want) {
    Row row;
    const std::string name = want.at("name").get<std::string>();
    const LieAlgebra& l = entry(name).algebra;
    Fingerprint f = fingerprint(l);
    std::size_t grid = nu2_grid_search(l);
    row.fp = f;
    std::vector<std::pair<std::string, std::optional<std::size_t>>> got{
        {"step", f.step},     {"b1", f.b1},      {"b2", f.b2},
        {"b3", f.b3},         {"dim_aut", f.dim_der}, {"dim_center", f.dim_center},
        {"nu2", f.nu2}};
    std::string diff;
    row.cells.push_back(name);
    for (const auto& [key, value] : got) {
      const auto exp = want.at(key).get<std::size_t>();
      const std::string shown = value ? std::to_string(*value) : "?";
      row.cells.push_back(shown);
      if (value != exp) diff += (diff.empty() ? "" : "; ") + key + " expected " + std::to_string(exp) + ", got " + shown;
    }
    row.cells.push_back(std::to_string(grid));
    row.checks.push_back({name + ": invariants match", diff.empty(), diff});
    row.checks.push_back({name + ": grid search finds ν² independent decomposable exact forms", f.nu2 && grid == *f.nu2,
                          "grid " + std::to_string(grid)});
    // b1 = dim − dim [g, g] and Poincaré duality b_k = b_{6−k}.
    row.checks.push_back({name + ": b1 = 6 − dim [g,g]", f.b1 == 6 - derived_algebra(l).dim(), ""});
    std::string betti_all;
    bool dual = true;
    std::vector<std::size_t> b;
    for (std::size_t k = 0; k <= 6; ++k) b.push_back(betti(l, k));
    for (std::size_t k = 0; k <= 6; ++k) {
      betti_all += (k ? "," : "") + std::to_string(b[k]);
      dual = dual && b[k] == b[6 - k];
    }
    row.checks.push_back({name + ": b_k = b_(6−k)", dual, "betti " + betti_all});
    return row;
  });
  for (const auto& row : rows) {
    r.checks.insert(r.checks.end(), row.checks.begin(), row.checks.end());
    t.rows.push_back(row.cells);
  }
  std::string clash;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[i].fp == rows[j].fp) clash += (clash.empty() ? "" : "; ") + t.rows[i][0] + " = " + t.rows[j][0];
  r.check("fingerprints are pairwise distinct", clash.empty(), clash);
  r.tables.push_back(t);
  return r;
}

inline Report reproduce_table(int n) {
  switch (n) {
    case 2: return reproduce_table2();
    case 3: return reproduce_table3();
    case 4: return reproduce_table4();
    case 5: return reproduce_table5();
    default: throw InputError("no table " + std::to_string(n) + " (choose 2, 3, 4 or 5)");
  }
}

// ---------------------------------------------------------------- sweep

struct SweepPoint {
  json parameters;
  std::string label;
  std::string expected;
  std::string case_label;
  BicrossData data;
};

struct SweepResult {
  bool compatible = false;
  IntegrabilityConditions conditions;
  bool integrable = false;
  Fingerprint fp;
  std::string identified;
  bool g_plus_abelian = false;
  bool g_minus_abelian = false;
};

inline SweepResult run_point(const SweepPoint& p) {
  SweepResult out;
  out.compatible = check_compatibility(p.data).holds;
  out.conditions = check_integrability_conditions(p.data);
  if (!out.compatible) return out;
  auto product = bicross(p.data);
  auto s = product.born();
  out.integrable = check_integrable(s).verdict;
  out.fp = fingerprint(s.algebra, false);
  out.identified = identify_born(s.algebra).describe();
  out.g_plus_abelian = p.data.g_plus.is_abelian();
  out.g_minus_abelian = p.data.g_minus.is_abelian();
  return out;
}

inline std::vector<SweepPoint> r3_heis3_grid(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                                             const Rational& x0 = 0, const Rational& y0 = 0) {
  std::vector<SweepPoint> pts;
  for (const auto& y : ys)
    for (const auto& x : xs)
      pts.push_back({{{"x", to_string(x)}, {"y", to_string(y)}},
                     fmt::point(x, y),
                     r3_heis3_case(x, y),
                     r3_heis3_case_label(x, y),
                     family_r3_heis3(x, y, x0, y0)});
  return pts;
}

inline std::vector<SweepPoint> r3_r3_points() {
  auto [first, second] = family_r3_r3();
  return {{{{"instance", 1}}, "instance 1", "h8", "instance 1", first},
          {{{"instance", 2}}, "instance 2", "h9", "instance 2", second}};
}

inline Report sweep_report(const std::string& family, const std::vector<SweepPoint>& points, json inputs) {
  Report r;
  r.command = "sweep --family " + family;
  r.inputs = std::move(inputs);
  if (points.empty()) return r;
  auto results = parallel_map(points, run_point);
  Table per{"Points",
            {"point", "compatible", "conditions", "integrable", "fingerprint", "identified", "expected"},
            {}};
  Table cases{"Case split", {"case", "expected", "points", "identified"}, {}};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const auto& res = results[i];
    r.check(p.label + ": compatibility identities hold", res.compatible);
    r.check(p.label + ": integrability conditions hold", res.conditions.verdict);
    r.check(p.label + ": product structure is integrable", res.integrable);
    r.check(p.label + ": identifies as " + p.expected, res.identified == p.expected, "got " + res.identified);
    per.rows.push_back({p.label, fmt::yes(res.compatible), fmt::yes(res.conditions.verdict), fmt::yes(res.integrable),
                        fmt::str(res.fp), res.identified, p.expected});
    auto it = std::find_if(cases.rows.begin(), cases.rows.end(), [&](const auto& row) { return row[0] == p.case_label; });
    if (it == cases.rows.end()) {
      cases.rows.push_back({p.case_label, p.expected, "1", res.identified});
    } else {
      (*it)[2] = std::to_string(std::stoul((*it)[2]) + 1);
      if ((*it)[3].find(res.identified) == std::string::npos) (*it)[3] += ", " + res.identified;
    }
  }
  r.tables.push_back(per);
  r.tables.push_back(cases);
  return r;
}

/// Compatibility, the four factor-level conditions, and the product-level
/// verdict for one set of bicross data.
inline Report bicross_report(const BicrossData& d, json inputs = json::object()) {
  Report r;
  r.command = "bicross";
  r.inputs = std::move(inputs);
  try {
    validate(d);
  } catch (const ValidationError& e) {
    r.check("representations are valid", false, e.what());
    return r;
  }
  r.check("representations are valid", true);
  auto compat = check_compatibility(d);
  std::string witness;
  if (!compat.holds)
    witness = "identity " + std::to_string(compat.identity) + " fails on basis triple (" +
              std::to_string(compat.witness[0] + 1) + ", " + std::to_string(compat.witness[1] + 1) + ", " +
              std::to_string(compat.witness[2] + 1) + ")";
  r.check("compatibility identities hold", compat.holds, witness);
  if (!compat.holds) return r;
  auto c = check_integrability_conditions(d);
  auto product = bicross(d);
  auto s = product.born();
  auto in = check_integrable(s);
  r.check("factor conditions agree with product integrability", c.verdict == in.verdict,
          "conditions " + fmt::yes(c.verdict) + ", product " + fmt::yes(in.verdict));
  r.check("block connection equals the Levi-Civita connection", levi_civita_blocks(d) == levi_civita(s.algebra, s.h));
  verify_structure(r, s);
  std::string id;
  try {
    id = identify(s.algebra, in.verdict && nil_step(s.algebra).has_value()).describe();
  } catch (const AmbiguityError& e) {
    id = e.what();
  }
  r.tables.push_back({"Conditions",
                      {"c1", "c2", "c3", "c4", "verdict"},
                      {{fmt::yes(c.c1), fmt::yes(c.c2), fmt::yes(c.c3), fmt::yes(c.c4), fmt::yes(c.verdict)}}});
  r.tables.push_back({"Product",
                      {"brackets", "fingerprint", "identification"},
                      {{print_salamon(s.algebra), fmt::str(fingerprint(s.algebra)), id}}});
  r.tables.push_back(curvature_table(s));
  return r;
}

// ---------------------------------------------------------------- remark

/// The alternative structure on r4,-1,-1:
/// h = −e¹⊗e¹ − e¹⊙e³ − e²⊙e⁴ − e⁴⊗e⁴, Je₁ = −e₄, Je₂ = e₃,
/// g+ = ⟨e₁,e₃⟩, g− = ⟨e₂,e₄⟩.
inline HermitianBornData r4_alternative_structure() {
  const LieAlgebra& l = entry("r4,-1,-1").algebra;
  Matrix h = Matrix::diagonal({-1, 0, 0, -1}) - sym_pair(4, 0, 2) - sym_pair(4, 1, 3);
  Matrix j(4, 4);
  j(3, 0) = -1;  // Je1 = −e4
  j(2, 1) = 1;   // Je2 = e3
  j(1, 2) = -1;  // Je3 = −e2
  j(0, 3) = 1;   // Je4 = e1
  Subspace plus(Matrix::from_columns({Matrix::unit(4, 0), Matrix::unit(4, 2)}));
  Subspace minus(Matrix::from_columns({Matrix::unit(4, 1), Matrix::unit(4, 3)}));
  return {l, BilinearForm::symmetric(h), j, plus, minus};
}

/// variant: "alternative" (default), "table2" (the listed structure on the
/// same algebra) or "h13" (the R3 ⋈ heis3 family at (1,1)).
inline Report remark_r4_report(const std::string& variant = "alternative") {
  Report r;
  r.command = "remark-r4";
  r.inputs = {{"variant", variant}};
  BornStructure s;
  if (variant == "alternative")
    s = assemble_from_hermitian(r4_alternative_structure());
  else if (variant == "table2")
    s = assemble_from_hermitian(*entry("r4,-1,-1").structure);
  else if (variant == "h13")
    s = bicross(family_r3_heis3(1, 1, 0, 0)).born();
  else
    throw InputError("unknown variant '" + variant + "' (expected alternative, table2 or h13)");
  const bool ric_zero = ricci(s.algebra, s.h).gram().is_zero();
  const bool h_flat = is_flat(s.algebra, s.h);
  const bool g_flat = is_flat(s.algebra, s.g);
  r.check("structure is integrable", check_integrable(s).verdict);
  if (variant == "alternative") {
    r.check("ric(h) = 0", ric_zero);
    r.check("curvature of h is nonzero", !h_flat);
    r.check("curvature of g is zero", g_flat);
  } else if (variant == "table2") {
    r.check("curvature of h is zero", h_flat);
    r.check("curvature of g is zero", g_flat);
  } else {
    r.check("curvature of g is nonzero", !g_flat);
  }
  r.tables.push_back({"Curvature",
                      {"algebra", "ric(h) = 0", "h", "g"},
                      {{variant == "h13" ? "h13 at (x,y)=(1,1)" : "r4,-1,-1", fmt::yes(ric_zero),
                        h_flat ? "Flat" : "Non-flat", g_flat ? "Flat" : "Non-flat"}}});
  return r;
}

// ---------------------------------------------------------------- audits

inline std::string eigenspace_type(const LieAlgebra& l, const Subspace& s) {
  if (!is_subalgebra(l, s)) return "not a subalgebra";
  if (is_abelian_subalgebra(l, s)) return "abelian";
  auto sub = restrict_to(l, s);
  if (sub.dim() == 3 && nil_step(sub) == std::size_t{2}) return "heis3";
  return "other";
}

/// Rotates the product structure of the h7 model until both eigenspaces are
/// Heisenberg, then searches rational rotations of that structure for one
/// with an abelian eigenspace.
inline Report rotation_audit() {
  Report r;
  r.command = "audit rotation";
  BornStructure base = assemble_from_hermitian(*entry("h7").structure);
  std::optional<std::pair<BornStructure, std::string>> both_heis;
  for (auto [c, s] : rational_circle_points()) {
    if (is_zero(c) || is_zero(s)) continue;  // axis points only swap or negate A, B
    auto rot = rotate_product_structure(base, c, s);
    if (eigenspace_type(rot.algebra, rot.g_plus) == "heis3" && eigenspace_type(rot.algebra, rot.g_minus) == "heis3") {
      both_heis = {rot, "(" + to_string(c) + "," + to_string(s) + ")"};
      break;
    }
  }
  r.check("a rational rotation of the h7 structure has two Heisenberg eigenspaces", both_heis.has_value(),
          both_heis ? "at (cos,sin)=" + both_heis->second : "sweep exhausted");
  if (!both_heis) return r;
  const BornStructure& start = both_heis->first;
  r.check("rotated structure keeps h", start.h == base.h);
  r.check("rotated A squares to the identity", start.A * start.A == Matrix::identity(start.dim()));
  r.check("rotated structure is integrable", check_integrable(start).verdict);
  std::optional<std::string> found;
  for (auto [c, s] : rational_circle_points()) {
    auto rot = rotate_product_structure(start, c, s);
    if (eigenspace_type(rot.algebra, rot.g_plus) == "abelian" || eigenspace_type(rot.algebra, rot.g_minus) == "abelian") {
      found = "(" + to_string(c) + "," + to_string(s) + ")";
      break;
    }
  }
  r.check("a rational rotation makes one eigenspace abelian", found.has_value(),
          found ? "at (cos,sin)=" + *found : "not found among rational circle points");
  return r;
}

/// Lorentzian metrics on heis3: which are flat, and whether the φ-part of the
/// integrability criterion admits a representation for each.
inline Report heis3_audit() {
  Report r;
  r.command = "audit heis3";
  const LieAlgebra h = heisenberg3();
  Table t{"Lorentzian metrics on heis3", {"metric", "flat", "shape parameters", "equations", "representation"}, {}};
  for (int k = 1; k <= 3; ++k) {
    const std::string name = "h" + std::to_string(k);
    const BilinearForm m = heis3_metric(k);
    const bool flat = is_flat(h, m);
    r.check(name + (k == 3 ? " is flat" : " is not flat"), flat == (k == 3));
    auto ob = representation_obstruction(h, m, Matrix::identity(3));
    if (k < 3)
      r.check(name + ": no conforming φ is a representation (Gröbner basis is {1})", ob.no_representation,
              std::to_string(ob.parameters) + " parameters, " + std::to_string(ob.equations) + " equations");
    else
      r.check(name + ": conforming representations exist", ob.shape_exists && !ob.no_representation);
    t.rows.push_back({name, fmt::yes(flat), std::to_string(ob.parameters), std::to_string(ob.equations),
                      ob.no_representation ? "none" : "exists"});
  }
  bool refused = false;
  try {
    flat_seed_construction(h, heis3_metric(1), Matrix::identity(3));
  } catch (const ValidationError&) {
    refused = true;
  }
  r.check("flat-seed construction refuses h1", refused);
  r.tables.push_back(t);
  return r;
}

/// h2, h4, h5 have two-dimensional centers and never arise from a
/// decomposition with both factors abelian in the family sweeps.
inline Report center_audit() {
  Report r;
  r.command = "audit center";
  for (const char* name : {"h2", "h4", "h5"})
    r.check(std::string(name) + " has a two-dimensional center", center(entry(name).algebra).dim() == 2);
  std::vector<Rational> xs{-3, -2, -1, 0, 1, 2, 3, frac(3, 2), frac(-1, 2)}, ys{0, 1, 2, -1};
  auto pts = r3_heis3_grid(xs, ys);
  auto more = r3_r3_points();
  pts.insert(pts.end(), more.begin(), more.end());
  auto results = parallel_map(pts, run_point);
  std::string offenders;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& res = results[i];
    const bool low_center = res.identified == "h2" || res.identified == "h4" || res.identified == "h5";
    if (low_center && res.g_plus_abelian && res.g_minus_abelian)
      offenders += (offenders.empty() ? "" : "; ") + pts[i].label;
  }
  r.check("no both-abelian decomposition yields h2, h4 or h5", offenders.empty(), offenders);
  return r;
}

inline Report audit_report() {
  Report r;
  r.command = "audit";
  r.append(heis3_audit());
  r.append(rotation_audit());
  r.append(center_audit());
  return r;
}

// ---------------------------------------------------------------- algebra info

inline Report invariants_report(const LieAlgebra& l, json inputs = json::object()) {
  Report r;
  r.command = "invariants";
  r.inputs = std::move(inputs);
  r.check("Jacobi identity", check_jacobi(l).holds);
  Fingerprint f = fingerprint(l);
  std::string betti_all;
  for (std::size_t k = 0; k <= l.dim(); ++k) betti_all += (k ? "," : "") + std::to_string(betti(l, k));
  auto dl = derived_length(l);
  Table t{"Invariants", {"invariant", "value"}, {}};
  t.rows = {{"dimension", std::to_string(l.dim())},
            {"brackets", print_salamon(l)},
            {"nilpotency step", f.step ? std::to_string(*f.step) : "not nilpotent"},
            {"derived length", dl ? std::to_string(*dl) : "not solvable"},
            {"betti numbers", betti_all},
            {"dim Der", std::to_string(f.dim_der)},
            {"dim center", std::to_string(f.dim_center)},
            {"ν²", f.nu2 ? std::to_string(*f.nu2) : "unsupported"},
            {"Killing form signature", fmt::str(signature_of_symmetric(killing_form(l)))},
            {"fingerprint", fmt::str(f)}};
  r.tables.push_back(t);
  return r;
}

inline Report identify_report(const LieAlgebra& l, json inputs = json::object()) {
  Report r;
  r.command = "identify";
  r.inputs = std::move(inputs);
  r.check("Jacobi identity", check_jacobi(l).holds);
  std::string result;
  try {
    result = identify(l).describe();
  } catch (const AmbiguityError& e) {
    r.check("catalog fingerprints are unambiguous", false, e.what());
    result = "ambiguous";
  }
  r.tables.push_back({"Identification", {"brackets", "result"}, {{print_salamon(l), result}}});
  return r;
}

inline Report parse_report(const LieAlgebra& l, json inputs = json::object()) {
  Report r;
  r.command = "parse";
  r.inputs = std::move(inputs);
  auto jac = check_jacobi(l);
  r.check("Jacobi identity", jac.holds,
          jac.witness ? "fails on (e" + std::to_string((*jac.witness)[0]) + ", e" + std::to_string((*jac.witness)[1]) +
                            ", e" + std::to_string((*jac.witness)[2]) + ")"
                      : "");
  Table t{"Brackets", {"bracket", "value"}, {}};
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Matrix v = l.bracket_basis(i, j);
      if (v.is_zero()) continue;
      std::string s;
      for (std::size_t k = 0; k < l.dim(); ++k) {
        if (is_zero(v[k])) continue;
        std::string c = to_string(v[k]);
        if (!s.empty() && c[0] != '-') s += "+";
        s += (c == "1" ? "" : c == "-1" ? "-" : c + "*") + "e" + std::to_string(k + 1);
      }
      t.rows.push_back({"[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "]", s});
    }
  r.tables.push_back({"Algebra", {"dimension", "normalized"}, {{std::to_string(l.dim()), print_salamon(l)}}});
  r.tables.push_back(t);
  return r;
}

}  // namespace bornforge
