#pragma once

// Command-line front end. run() is separate from main() so tests can drive
// the tool in-process with captured streams.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bornforge/commands.hpp"

namespace bornforge::cli {

enum ExitCode { ok = 0, failed = 1, input_error = 2 };

struct Source {
  LieAlgebra algebra{1};
  /// Structure fields found alongside the algebra in a bundle, if any.
  std::optional<json> structure;
  json echo;
};

inline std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Text of a source argument: "-" is stdin, an existing path is read,
/// anything else is taken literally.
inline std::string source_text(const std::string& arg, std::istream& in, std::string& origin) {
  if (arg == "-") {
    origin = "stdin";
    return read_all(in);
  }
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream f(arg);
    if (!f) throw InputError("cannot read " + arg);
    origin = arg;
    return read_all(f);
  }
  origin = "argument";
  return arg;
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

inline LieAlgebra load_algebra(const std::string& arg, const std::string& text, const std::string& origin,
                               std::optional<json>& structure) {
  if (text.front() == '{') {
    json j = parse_json_text(text);
    try {
      if (j.contains("algebra")) {
        json rest = j;
        rest.erase("algebra");
        if (rest.contains("J") || rest.contains("omega")) structure = rest;
        return lie_from_json(j["algebra"]);
      }
      return lie_from_json(j);
    } catch (const json::exception& e) {
      throw InputError(e.what());
    }
  }
  if (std::filesystem::path(arg).has_extension() && text.front() != '(' && origin == "argument")
    throw InputError("no such file: " + arg);
  return parse_salamon(text);
}

/// Salamon text, a JSON algebra, or a JSON bundle {"algebra": ..., <structure>}.
inline Source load_source(const std::string& arg, std::istream& in) {
  std::string origin;
  const std::string text = trim(source_text(arg, in, origin));
  if (text.empty()) throw InputError("empty algebra source");
  Source s;
  try {
    s.algebra = load_algebra(arg, text, origin, s.structure);
  } catch (const ValidationError& e) {
    throw InputError(std::string("invalid algebra: ") + e.what());
  }
  s.echo = {{"source", origin == "argument" ? arg : origin}, {"brackets", print_salamon(s.algebra)}};
  return s;
}

inline json load_structure_file(const std::string& arg, std::istream& in) {
  std::string origin;
  return parse_json_text(source_text(arg, in, origin));
}

inline std::vector<Rational> parse_grid(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      piece = trim(piece);
      if (piece.empty()) continue;
      try {
        out.push_back(parse_rational(piece));
      } catch (const ContractError& e) {
        throw InputError("bad rational '" + piece + "': " + e.what());
      }
    }
  }
  return out;
}

inline int emit(const Report& r, Format f, std::ostream& out) {
  out << render(r, f);
  return r.all_pass() ? ok : failed;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Born structures on Lie algebras", "bornforge"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "markdown";
  app.add_option("--format", format, "markdown, csv or json")->check(CLI::IsMember({"markdown", "md", "csv", "json"}));

  std::string check_source, structure_file, catalog_name;
  auto* check = app.add_subcommand("check", "verify a Born structure on an algebra");
  check->add_option("algebra", check_source, "Salamon string, JSON file, bundle, or - for stdin");
  check->add_option("--structure", structure_file, "JSON file with (h, J, g_plus, g_minus) or (g, h, omega)");
  check->add_option("--catalog", catalog_name, "verify the stored structure of a catalog entry");

  int table = 0;
  auto* reproduce = app.add_subcommand("reproduce", "regenerate a reference table and diff it");
  reproduce->add_option("--table", table, "2, 3, 4 or 5")->required();

  std::string family = "r3-heis3";
  std::vector<std::string> xs, ys;
  std::string x0 = "0", y0 = "0";
  auto* sweep = app.add_subcommand("sweep", "run a construction family over a parameter grid");
  sweep->add_option("--family", family, "r3-heis3 or r3-r3")->check(CLI::IsMember({"r3-heis3", "r3-r3"}));
  sweep->add_option("--x", xs, "x values (repeat or comma-separate)")->allow_extra_args(false);
  sweep->add_option("--y", ys, "y values (repeat or comma-separate)")->allow_extra_args(false);
  sweep->add_option("--x0", x0, "x0 parameter");
  sweep->add_option("--y0", y0, "y0 parameter");

  std::string algebra_source;
  auto* identify_cmd = app.add_subcommand("identify", "match an algebra against the catalog");
  identify_cmd->add_option("algebra", algebra_source)->required();
  auto* invariants = app.add_subcommand("invariants", "numerical invariants of an algebra");
  invariants->add_option("algebra", algebra_source)->required();
  auto* parse = app.add_subcommand("parse", "parse and validate Salamon notation");
  parse->add_option("algebra", algebra_source)->required();

  std::string catalog_action;
  auto* catalog_cmd = app.add_subcommand("catalog", "catalog asset");
  catalog_cmd->add_option("action", catalog_action, "dump or list")->required()->check(CLI::IsMember({"dump", "list"}));

  std::string variant = "alternative";
  auto* remark = app.add_subcommand("remark-r4", "Ricci-flat but non-flat structure on r4,-1,-1");
  remark->add_option("--variant", variant, "alternative, table2 or h13")
      ->check(CLI::IsMember({"alternative", "table2", "h13"}));

  auto* audit = app.add_subcommand("audit", "heis3 metrics, rotations and center audits");

  std::string bicross_file;
  auto* bicross_cmd = app.add_subcommand("bicross", "build and verify a bicross product from JSON data");
  bicross_cmd->add_option("data", bicross_file, "JSON file or - for stdin")->required();

  std::vector<std::string> argv_store{"bornforge"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    const Format f = parse_format(format);
    if (*check) {
      if (!catalog_name.empty()) {
        const auto& e = entry(catalog_name);
        if (!e.structure) throw InputError("catalog entry " + e.name + " carries no Born structure");
        json doc = to_json(*e.structure);
        return emit(check_report(e.structure->algebra, doc, {{"catalog", e.name}}), f, out);
      }
      if (check_source.empty()) throw InputError("check needs an algebra source or --catalog");
      Source s = load_source(check_source, in);
      json structure;
      if (!structure_file.empty())
        structure = load_structure_file(structure_file, in);
      else if (s.structure)
        structure = *s.structure;
      else
        throw InputError("no structure given (use a bundle or --structure)");
      return emit(check_report(s.algebra, structure, s.echo), f, out);
    }
    if (*reproduce) return emit(reproduce_table(table), f, out);
    if (*sweep) {
      json inputs = {{"family", family}};
      std::vector<SweepPoint> points;
      if (family == "r3-r3") {
        points = r3_r3_points();
      } else {
        auto gx = parse_grid(xs), gy = parse_grid(ys);
        Rational rx0 = parse_grid({x0}).at(0), ry0 = parse_grid({y0}).at(0);
        json jx = json::array(), jy = json::array();
        for (const auto& v : gx) jx.push_back(to_string(v));
        for (const auto& v : gy) jy.push_back(to_string(v));
        inputs["x"] = jx;
        inputs["y"] = jy;
        inputs["x0"] = to_string(rx0);
        inputs["y0"] = to_string(ry0);
        points = r3_heis3_grid(gx, gy, rx0, ry0);
      }
      return emit(sweep_report(family, points, inputs), f, out);
    }
    if (*identify_cmd) {
      Source s = load_source(algebra_source, in);
      return emit(identify_report(s.algebra, s.echo), f, out);
    }
    if (*invariants) {
      Source s = load_source(algebra_source, in);
      return emit(invariants_report(s.algebra, s.echo), f, out);
    }
    if (*parse) {
      Source s = load_source(algebra_source, in);
      return emit(parse_report(s.algebra, s.echo), f, out);
    }
    if (*catalog_cmd) {
      if (catalog_action == "dump") {
        out << catalog_asset().dump(2) << "\n";
        return ok;
      }
      Report r;
      r.command = "catalog list";
      Table t{"Catalog", {"name", "dimension", "brackets", "Born", "structure"}, {}};
      for (const auto& e : catalog())
        t.rows.push_back({e.name, std::to_string(e.algebra.dim()), e.salamon, fmt::yes(e.born),
                          !e.structure ? "-" : e.structure_on_model ? "on construction model" : "on listed basis"});
      r.tables.push_back(t);
      return emit(r, f, out);
    }
    if (*remark) return emit(remark_r4_report(variant), f, out);
    if (*audit) return emit(audit_report(), f, out);
    if (*bicross_cmd) {
      json doc = load_structure_file(bicross_file, in);
      BicrossData d;
      try {
        d = bicross_from_json(doc);
      } catch (const ValidationError& e) {
        throw InputError(std::string("invalid factor algebra: ") + e.what());
      }
      return emit(bicross_report(d, {{"source", bicross_file}}), f, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return failed;
  } catch (const AmbiguityError& e) {
    err << "error: " << e.what() << "\n";
    return failed;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace bornforge::cli
