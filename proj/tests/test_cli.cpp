#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qkzlab/check_report.hpp"
#include "qkzlab/classical.hpp"
#include "qkzlab/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  json doc;
  std::string text;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "qkz-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qkzlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  json doc;
  if (!out.str().empty()) doc = json::parse(out.str());
  return {code, doc, out.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

// Every number in the document other than integer indices is a string.
void expect_no_floats(const json& j) {
  if (j.is_number_float()) ADD_FAILURE() << "float in output: " << j.dump();
  if (j.is_structured()) {
    for (const auto& x : j) expect_no_floats(x);
  }
}

}  // namespace

TEST(Cli, DocumentedExamples) {
  auto r = run({"ybe", "--hbar", "1", "--u", "5", "--v", "3", "--mode", "bare"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.doc["pass"].get<bool>());

  r = run({"crossing", "--order", "4", "--z", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["checks"]["crossing"]["mode"], "normalized");

  r = run({"crossing", "--mode", "bare", "--z", "1", "--hbar", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc["checks"]["crossing"]["notes"]["ratio"], "4/3");
}

TEST(Cli, ExitCodes) {
  auto r = run({"flatness", "--points", "0,7,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.doc["error"]["kind"], "config");
  EXPECT_NE(r.doc["error"]["message"].get<std::string>().find("pairwise distinct"), std::string::npos);

  // A_1 at z_12 = -1 hits the bare pole at -hbar.
  r = run({"transport", "--points", "0,1", "--hbar", "1", "--level", "-1", "--path", "1:1", "--vector", "1,0,0,0"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.doc["error"]["kind"], "pole");
  EXPECT_EQ(r.doc["error"]["step"], "0");

  // The pole is reached on the second step only.
  r = run({"transport", "--points", "0,2", "--hbar", "1", "--level", "-1", "--path", "1:1,1:1", "--vector", "1,0,0,0"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.doc["error"]["step"], "1");

  EXPECT_EQ(run({"classical", "--cutoff", "0"}).code, 2);
  EXPECT_EQ(run({"ybe", "--mode", "weird"}).code, 2);
  EXPECT_EQ(run({"ybe", "--u"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"ybe", "--config", "/nonexistent/config.json"}).code, 2);
  EXPECT_EQ(run({"rll", "--relation", "sideways"}).code, 2);
  EXPECT_EQ(run({"transport", "--points", "0,1", "--path", "7:1", "--vector", "1,0,0,0"}).code, 2);
}

TEST(Cli, ClassicalRelations) {
  for (const std::string rel : {"PlusPlus", "MinusPlus", "MinusMinus", "pp", "mp", "mm"}) {
    const auto r = run({"classical", "--relation", rel, "--cutoff", "2"});
    EXPECT_EQ(r.code, 0) << rel;
    EXPECT_FALSE(r.doc["checks"].contains("jacobi"));
  }
  const auto r = run({"classical", "--cutoff", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.doc["checks"]["jacobi"]["pass"].get<bool>());
  const auto table = qkzlab::BracketTable::from_json(r.doc["table"].dump());
  EXPECT_EQ(table, qkzlab::expand_all(2));
  EXPECT_EQ(run({"classical", "--expansion", "bare"}).code, 0);
}

TEST(Cli, DeterministicForASeed) {
  for (const std::string cmd : {"ybe", "unitarity", "crossing", "rll", "flatness"}) {
    const auto a = run({cmd, "--seed", "11"});
    const auto b = run({"--seed", "11", cmd});
    EXPECT_EQ(a.code, 0) << cmd;
    EXPECT_EQ(a.text, b.text) << cmd;
    EXPECT_EQ(a.doc["seed"], "11");
    EXPECT_NE(a.text, run({cmd, "--seed", "12"}).text) << cmd;
  }
}

TEST(Cli, ReportsRoundTrip) {
  const auto r = run({"report-all"});
  ASSERT_EQ(r.code, 0) << r.text;
  EXPECT_GT(r.doc["checks"].size(), 50u);
  for (const auto& [key, value] : r.doc["checks"].items()) {
    const auto report = qkzlab::report_from_json(value.dump());
    EXPECT_EQ(json::parse(qkzlab::to_json(report)), value) << key;
    EXPECT_TRUE(report.pass) << key;
  }
  expect_no_floats(r.doc);
}

TEST(Cli, NegativeControlsFail) {
  EXPECT_EQ(run({"rll", "--misorder"}).code, 1);
  EXPECT_EQ(run({"rll", "--relation", "mp", "--level", "1"}).code, 1);
  EXPECT_EQ(run({"rll", "--relation", "pp", "--level", "1"}).code, 0);
}

TEST(Cli, TransportEchoesOnTrivialPaths) {
  const std::vector<std::string> base{"transport", "--points", "0,7,17", "--level", "1", "--vector", "1,2,3,4,5,6,7,8"};
  auto args = base;
  auto r = run(args);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["vector"], json({"1", "2", "3", "4", "5", "6", "7", "8"}));
  EXPECT_EQ(r.doc["steps"], "0");

  args.insert(args.end(), {"--path", "1:1,3:1,1:-1,3:-1"});
  r = run(args);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["vector"], json({"1", "2", "3", "4", "5", "6", "7", "8"}));
  EXPECT_EQ(r.doc["points"], json({"0", "7", "17"}));

  // A single step moves the vector and the points.
  args = base;
  args.insert(args.end(), {"--path", "2:1"});
  r = run(args);
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(r.doc["vector_unchanged"].get<bool>());
  EXPECT_EQ(r.doc["points"], json({"0", "10", "17"}));
}

TEST(Cli, ConfigFileAndOverrides) {
  const std::string cfg = temp_file("qkz_cfg.json", R"({
    "system": {"points": ["0", "1/2", "3"], "level": "1", "mode": {"normalized": {"order": 2}}},
    "path": {"steps": [{"i": 2, "sign": 1}, {"i": 2, "sign": -1}]},
    "vector": ["1", "0", "0", "0", "0", "0", "0", "1"],
    "seed": 5
  })");
  auto r = run({"transport", "--config", cfg});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["seed"], "5");
  EXPECT_TRUE(r.doc["vector_unchanged"].get<bool>());

  r = run({"flatness", "--config", cfg, "--seed", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["seed"], "2");
  EXPECT_EQ(r.doc["checks"]["flatness(1,2)"]["mode"], "normalized");

  // Flags override the config.
  r = run({"flatness", "--config", cfg, "--mode", "bare", "--hbar", "1/3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["checks"]["flatness(1,2)"]["mode"], "bare");

  const std::string bad = temp_file("qkz_bad.json", "{not json");
  EXPECT_EQ(run({"ybe", "--config", bad}).code, 2);
}

TEST(Cli, OutFileMatchesStdout) {
  const std::string path = ::testing::TempDir() + "qkz_out.json";
  std::remove(path.c_str());
  const auto r = run({"qdet", "--out", path});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), r.text);
}

TEST(Cli, DegenerateStepIsFlagged) {
  // eta = 0 at level -2: every check is an identity but the report says so.
  const auto r = run({"flatness", "--points", "0,7", "--level", "-2"});
  EXPECT_EQ(r.code, 0);
  for (const auto& [key, value] : r.doc["checks"].items()) {
    EXPECT_TRUE(value["flags"].value("degenerate_step", false)) << key;
  }
}
