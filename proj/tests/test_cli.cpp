#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace bornforge;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BORNFORGE_DATA_DIR) + "/" + name; }

/// Compares against tests/golden/<name>; BORNFORGE_UPDATE_GOLDEN=1 rewrites it.
void expect_golden(const std::string& name, const std::string& text) {
  const std::string path = std::string(BORNFORGE_GOLDEN_DIR) + "/" + name;
  if (const char* u = std::getenv("BORNFORGE_UPDATE_GOLDEN"); u && std::string(u) == "1") {
    std::ofstream(path) << text;
    return;
  }
  std::ifstream f(path);
  ASSERT_TRUE(f) << "missing golden file " << path;
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(text, ss.str()) << name;
}

}  // namespace

TEST(Cli, HelpExitsZero) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reproduce"), std::string::npos);
}

TEST(Cli, UnknownSubcommandIsInputError) { EXPECT_EQ(run({"frobnicate"}).code, 2); }

TEST(Cli, MissingSubcommandIsInputError) { EXPECT_EQ(run({}).code, 2); }

TEST(Cli, CheckHermitianBundle) {
  auto r = run({"check", data("rh3_hermitian.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("[PASS]"), std::string::npos);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
}

TEST(Cli, CheckFormsBundle) {
  auto r = run({"check", data("rh3_forms.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, CheckBadOmegaFailsWithWitness) {
  auto r = run({"check", data("rh3_forms_bad_omega.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[FAIL]"), std::string::npos);
  EXPECT_NE(r.out.find("A² ≠ Id"), std::string::npos);
}

TEST(Cli, CheckStructureFromSeparateFile) {
  auto r = run({"check", "(0,0,12,0)", "--structure", data("rh3_hermitian.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, CheckCatalogEntry) {
  EXPECT_EQ(run({"check", "--catalog", "d4,2"}).code, 0);
  EXPECT_EQ(run({"check", "--catalog", "h15"}).code, 2);
  EXPECT_EQ(run({"check", "--catalog", "nope"}).code, 2);
}

TEST(Cli, CheckWithoutStructureIsInputError) {
  auto r = run({"check", "(0,0,12,0)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("no structure"), std::string::npos);
}

TEST(Cli, MalformedSalamonReportsPosition) {
  auto r = run({"parse", "(0,0,1x)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position 5"), std::string::npos) << r.err;
}

TEST(Cli, JacobiViolationIsInputError) {
  auto r = run({"parse", "(13,0,12)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("(e1, e2, e3)"), std::string::npos) << r.err;
}

TEST(Cli, MissingFileIsInputError) { EXPECT_EQ(run({"identify", "no/such/file.json"}).code, 2); }

TEST(Cli, ParseFromStdinAndJson) {
  auto a = run({"parse", "-"}, "(0,0,12)\n");
  EXPECT_EQ(a.code, 0);
  auto b = run({"--format", "json", "identify", data("h7_brackets.json")});
  EXPECT_EQ(b.code, 0) << b.err;
  json j = json::parse(b.out);
  EXPECT_TRUE(j["summary"]["pass"].get<bool>());
  EXPECT_NE(b.out.find("\"h7\""), std::string::npos);
}

TEST(Cli, CsvOutputHasHeader) {
  auto r = run({"--format", "csv", "invariants", "(0,0,0,12,13,23)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("section,name,pass,witness\n", 0), 0u);
}

TEST(Cli, BadFormatIsInputError) { EXPECT_EQ(run({"--format", "xml", "parse", "(0,0,12)"}).code, 2); }

TEST(Cli, ReproduceTables) {
  for (const char* t : {"2", "3", "4", "5"}) EXPECT_EQ(run({"reproduce", "--table", t}).code, 0) << t;
  EXPECT_EQ(run({"reproduce", "--table", "7"}).code, 2);
}

TEST(Cli, SweepGrid) {
  auto r = run({"--format", "json", "sweep", "--x", "-1,0,1,2", "--y", "0", "--y", "1/2", "--x0", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["tables"][0]["rows"].size(), 8u);
  EXPECT_EQ(j["inputs"]["x0"], "3");
}

TEST(Cli, EmptySweepGrid) {
  auto r = run({"--format", "json", "sweep", "--y", "0"});
  EXPECT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["summary"]["checks"], 0);
}

TEST(Cli, SweepRejectsBadRational) {
  auto r = run({"sweep", "--x", "1/0", "--y", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bad rational"), std::string::npos);
}

TEST(Cli, AbelianFamilySweep) { EXPECT_EQ(run({"sweep", "--family", "r3-r3"}).code, 0); }

TEST(Cli, RemarkVariants) {
  for (const char* v : {"alternative", "table2", "h13"}) EXPECT_EQ(run({"remark-r4", "--variant", v}).code, 0) << v;
  EXPECT_EQ(run({"remark-r4", "--variant", "other"}).code, 2);
}

TEST(Cli, AuditPasses) { EXPECT_EQ(run({"audit"}).code, 0); }

TEST(Cli, BicrossFromFile) {
  auto r = run({"bicross", data("r3_heis3_x1_y1.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("h13"), std::string::npos);
}

TEST(Cli, CatalogListAndDump) {
  auto l = run({"--format", "csv", "catalog", "list"});
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("d4,1/2"), std::string::npos);
  auto d = run({"catalog", "dump"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NO_THROW(json::parse(d.out));
}

TEST(Cli, OutputIsDeterministicAcrossJobCounts) {
  std::vector<std::string> args{"--format", "json", "sweep", "--x", "-1,0,1,2,3", "--y", "0,1"};
  setenv("BORNFORGE_JOBS", "1", 1);
  auto a = run(args);
  setenv("BORNFORGE_JOBS", "4", 1);
  auto b = run(args);
  auto c = run(args);
  unsetenv("BORNFORGE_JOBS");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(b.out, c.out);
}

TEST(Cli, GoldenReproduceTable5) { expect_golden("reproduce_table5.md", run({"reproduce", "--table", "5"}).out); }

TEST(Cli, GoldenReproduceTable2) { expect_golden("reproduce_table2.md", run({"reproduce", "--table", "2"}).out); }

TEST(Cli, GoldenRemarkCsv) { expect_golden("remark_r4.csv", run({"--format", "csv", "remark-r4"}).out); }

TEST(Cli, GoldenSweepJson) {
  expect_golden("sweep_r3_heis3.json", run({"--format", "json", "sweep", "--x", "-1,0,1,2", "--y", "0,1"}).out);
}
