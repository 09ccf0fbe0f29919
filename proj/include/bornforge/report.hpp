#pragma once

// Verification reports: a list of named pass/fail checks with witnesses plus
// optional tables, rendered as Markdown, CSV or JSON. Rendering is a pure
// function of the report, so identical inputs give byte-identical output.

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bornforge/json_io.hpp"

namespace bornforge {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  json inputs = json::object();
  std::vector<Check> checks;
  std::vector<Table> tables;

  void check(std::string name, bool pass, std::string witness = {}) {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += !c.pass;
    return n;
  }
  bool all_pass() const { return failures() == 0; }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    tables.insert(tables.end(), other.tables.begin(), other.tables.end());
  }
};

enum class Format { markdown, csv, json };

inline Format parse_format(const std::string& s) {
  if (s == "markdown" || s == "md") return Format::markdown;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw InputError("unknown format '" + s + "' (expected markdown, csv or json)");
}

namespace detail {

inline std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|')
      out += "\\|";
    else if (c == '\n')
      out += ' ';
    else
      out += c;
  }
  return out;
}

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
  os << "\n";
}

}  // namespace detail

inline json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  json tables = json::array();
  for (const auto& t : r.tables) tables.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
  return {{"command", r.command},
          {"inputs", r.inputs},
          {"checks", checks},
          {"tables", tables},
          {"summary", {{"checks", r.checks.size()}, {"failed", r.failures()}, {"pass", r.all_pass()}}}};
}

inline std::string render_markdown(const Report& r) {
  std::ostringstream os;
  os << "# " << r.command << "\n\n";
  if (!r.inputs.empty()) os << "Inputs: `" << r.inputs.dump() << "`\n\n";
  for (const auto& t : r.tables) {
    os << "## " << t.title << "\n\n|";
    for (const auto& c : t.columns) os << " " << detail::md_cell(c) << " |";
    os << "\n|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& row : t.rows) {
      os << "|";
      for (const auto& c : row) os << " " << detail::md_cell(c) << " |";
      os << "\n";
    }
    os << "\n";
  }
  if (!r.checks.empty()) {
    os << "## Checks\n\n";
    for (const auto& c : r.checks) {
      os << "- [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
      if (!c.witness.empty()) os << ": " << c.witness;
      os << "\n";
    }
    os << "\n";
  }
  os << "Result: " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " checks passed\n";
  return os.str();
}

inline std::string render_csv(const Report& r) {
  std::ostringstream os;
  detail::csv_row(os, {"section", "name", "pass", "witness"});
  for (const auto& c : r.checks) detail::csv_row(os, {"check", c.name, c.pass ? "true" : "false", c.witness});
  for (const auto& t : r.tables) {
    os << "\n";
    detail::csv_row(os, {"table", t.title});
    detail::csv_row(os, t.columns);
    for (const auto& row : t.rows) detail::csv_row(os, row);
  }
  return os.str();
}

inline std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::markdown:
      return render_markdown(r);
    case Format::csv:
      return render_csv(r);
    case Format::json:
      return to_json(r).dump(2) + "\n";
  }
  return {};
}

}  // namespace bornforge
