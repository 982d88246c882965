#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qgoppa/error.hpp"
#include "qgoppa_cli/commands.hpp"
#include "qgoppa_cli/corpus.hpp"
#include "qgoppa_cli/io.hpp"

using namespace qgoppa;
using namespace qgoppa::cli;
namespace fs = std::filesystem;

namespace {

const char* kQuintic = "(x-1)*(x-2)*(x-3)*(x-4)*(x-5)";

ConstructConfig gf19(int r) {
  ConstructConfig c;
  c.curve = {"19", kQuintic, false};
  c.pairs = 7;
  c.r = r;
  c.order = "interleaved";
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qgoppa_cli_test_" + name);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, PlacesJsonRoundTrip) {
  std::ostringstream os;
  EXPECT_EQ(cmd_places({"19", kQuintic, false}, Format::Json, os), kOk);
  const json j = json::parse(os.str());
  const Field F = field_from_json(j.at("field"));
  EXPECT_EQ(F.q(), 19u);
  const auto places = places_from_json(F, j.at("places"));
  const Curve c = Curve::make(Poly::parse(F, kQuintic));
  EXPECT_EQ(places, c.rational_places());
  std::size_t split = 0;
  for (const auto& p : j.at("places"))
    if (p.value("class", "") == "split") ++split;
  EXPECT_EQ(split, 14u);
}

TEST(Cli, PlacesWarnsWithoutSplitPairs) {
  // x^5 + 2x = x(x-1)(x+1)(x^2+1) over GF(3): every rational x is a root
  std::ostringstream os, err;
  auto* old = std::cerr.rdbuf(err.rdbuf());
  const int rc = cmd_places({"3", "x^5 + 2*x", false}, Format::Text, os);
  std::cerr.rdbuf(old);
  EXPECT_EQ(rc, kOk);
  EXPECT_NE(err.str().find("warning"), std::string::npos) << err.str();
}

TEST(Cli, ConstructQuantumJsonRoundTrip) {
  ConstructConfig c = gf19(1);
  c.format = Format::Json;
  std::ostringstream os;
  EXPECT_EQ(cmd_construct_quantum(c, os), kOk);
  const json j = json::parse(os.str());
  const json& q = j.contains("quantum") ? j.at("quantum") : j;
  const StabilizerCode s = stabilizer_from_json(q);
  EXPECT_EQ(s.n, 7u);
  EXPECT_EQ(s.k(), 1u);
  ASSERT_TRUE(s.d_lower);
  EXPECT_EQ(s.d_lower->value, 3u);
  EXPECT_EQ(to_json(s).dump(), to_json(stabilizer_from_json(to_json(s))).dump());
}

TEST(Cli, OutputFilesAreDeterministic) {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  for (const auto& dir : {a, b}) {
    ConstructConfig c = gf19(1);
    c.out = (dir / "gf19").string();
    c.verify = true;
    c.bound = 100000;
    std::ostringstream os;
    EXPECT_EQ(cmd_construct_quantum(c, os), kOk);
  }
  for (const char* ext : {".classical.json", ".quantum.json", ".report.txt"}) {
    const auto fa = a / ("gf19" + std::string(ext)), fb = b / ("gf19" + std::string(ext));
    ASSERT_TRUE(fs::exists(fa)) << fa;
    EXPECT_EQ(slurp(fa), slurp(fb)) << ext;
  }
  const json classical = json::parse(slurp(a / "gf19.classical.json"));
  EXPECT_EQ(classical.at("k"), 6);
  EXPECT_EQ(classical.at("weights"), json::parse("[3,11,1,10,14,5,12]"));
}

TEST(Cli, Gf3ClassicalRun) {
  ConstructConfig c;
  c.curve = {"3", "(x^2+1)*(x^3+2*x^2+1)", false};
  c.pairs = 2;
  c.r = 1;
  c.format = Format::Json;
  std::ostringstream os;
  EXPECT_EQ(cmd_construct_classical(c, os), kOk);
  const json j = json::parse(os.str());
  EXPECT_EQ(j.at("length"), 4);
  EXPECT_EQ(j.at("k"), 2);
  EXPECT_EQ(j.at("weights"), json::parse("[2,1]"));
  EXPECT_EQ(j.at("gen"), json::parse("[[1,0,1,0],[0,1,0,1]]"));
}

TEST(Cli, ExtensionFieldElementsAsCoefficientArrays) {
  const Field F = Field::make(3, 2);
  const json j = to_json(F, F.gen());
  EXPECT_EQ(j, json::parse("[0,1]"));
  EXPECT_EQ(elem_from_json(F, j), F.gen());
  EXPECT_EQ(elem_from_json(F, json("w^3")), F.pow(F.gen(), 3));
}

TEST(Cli, DivisorSyntax) {
  const Field F = Field::make(3, 2);
  const Divisor d = parse_divisor(F, "3, 2:1");
  EXPECT_EQ(d.inf, 3);
  ASSERT_EQ(d.ramified.size(), 1u);
  EXPECT_EQ(d.ramified[0].first, F.from_int(2));
  EXPECT_EQ(divisor_string(F, d), "3 P_inf + 1 R(x=2)");
  EXPECT_THROW(parse_divisor(F, ""), Error);
  EXPECT_THROW(parse_divisor(F, "3,2"), Error);
}

TEST(Cli, InvalidConfigsAreRejected) {
  std::ostringstream os;
  ConstructConfig c = gf19(1);
  c.curve.field = "4";
  EXPECT_THROW(cmd_construct_quantum(c, os), Error);
  c = gf19(1);
  c.method = "other";
  EXPECT_THROW(cmd_construct_quantum(c, os), Error);
  c = gf19(1);
  c.pairs = 8;
  EXPECT_THROW(cmd_construct_classical(c, os), Error);
  EXPECT_TRUE(os.str().empty());
  EXPECT_THROW(cmd_examples({"nope"}, Format::Text, os), Error);
}

TEST(Cli, VerifyReportsCorruption) {
  const fs::path dir = scratch("verify");
  ConstructConfig c = gf19(2);
  c.out = (dir / "r2").string();
  std::ostringstream os;
  ASSERT_EQ(cmd_construct_quantum(c, os), kOk);

  VerifyConfig v;
  v.input = (dir / "r2.quantum.json").string();
  EXPECT_EQ(cmd_verify(v, os), kOk);

  json j = json::parse(slurp(v.input));
  j["gen_xz"][0][0] = (j["gen_xz"][0][0].get<int>() + 1) % 19;
  const fs::path bad = dir / "bad.quantum.json";
  std::ofstream(bad) << j.dump(2);
  v.input = bad.string();
  std::ostringstream out;
  EXPECT_EQ(cmd_verify(v, out), kVerificationFailed);
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);
}

TEST(Cli, ProjectPrimeFieldIsIdentity) {
  const fs::path dir = scratch("project");
  ConstructConfig c = gf19(1);
  c.out = (dir / "r1").string();
  std::ostringstream os;
  ASSERT_EQ(cmd_construct_quantum(c, os), kOk);
  ProjectConfig p;
  p.input = (dir / "r1.quantum.json").string();
  p.format = Format::Json;
  std::ostringstream out;
  EXPECT_EQ(cmd_project(p, out), kOk);
  const StabilizerCode s = stabilizer_from_json(json::parse(out.str()));
  EXPECT_EQ(s.n, 7u);
}

TEST(Cli, TowerSweepCsv) {
  TowerConfig t;
  t.sweep = true;
  t.format = Format::Csv;
  std::ostringstream os;
  EXPECT_EQ(cmd_tower_bounds(t, os), kOk);
  std::istringstream lines(os.str());
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("j,k_lower", 0), 0u);
  std::size_t rows = 0;
  while (std::getline(lines, row)) ++rows;
  EXPECT_EQ(rows, 25u);
  EXPECT_NE(os.str().find("\n10,10,15/2,8,120,40,"), std::string::npos);
}

TEST(Cli, ExamplesAllPass) {
  for (const auto& name : example_names()) {
    const auto rep = run_example(name);
    EXPECT_TRUE(rep.ok()) << name << "\n" << rep.to_text(false);
  }
  std::ostringstream os;
  EXPECT_EQ(cmd_examples({"gf19-r1"}, Format::Text, os), kOk);
}
