#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "gemcolor/generators.hpp"
#include "gemcolor/io.hpp"

namespace gemcolor {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / "gemcolor_cli_test";
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& file, const Graph& g) {
    const fs::path path = dir_ / file;
    std::ofstream out(path);
    io::write_graph(out, g, io::format_from_extension(path));
    return path.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, CheckMemberAndNonMember) {
  const auto ok = run({"check", write("groetzsch.col", named_graph("groetzsch")), "--class",
                       "p3up2,gem"});
  EXPECT_EQ(ok.code, cli::kSuccess);
  EXPECT_TRUE(ok.json()["member"]);
  EXPECT_EQ(ok.json()["version"], cli::version());
  EXPECT_EQ(ok.json()["input"]["hash"].get<std::string>().size(), 16u);

  const auto bad = run({"check", write("gem.col", named_graph("gem")), "--class", "p3up2,gem"});
  EXPECT_EQ(bad.code, cli::kNegative);
  EXPECT_EQ(bad.json()["witness"]["vertices"].size(), 5u);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({"check", (dir_ / "missing.col").string()}).code, cli::kInputError);
  std::ofstream(dir_ / "broken.col") << "p edge 2 1\ne 1 9\n";
  EXPECT_EQ(run({"check", (dir_ / "broken.col").string()}).code, cli::kInputError);
  EXPECT_EQ(run({"check", "c5", "--class", "bogus"}).code, cli::kInputError);
  EXPECT_EQ(run({"color", "c5", "--algorithm", "magic"}).code, cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
}

TEST_F(CliTest, FormatOverride) {
  const fs::path path = dir_ / "graph.dat";
  {
    std::ofstream out(path);
    io::write_dimacs(out, cycle_graph(5));
  }
  const auto r = run({"check", path.string(), "--format", "dimacs"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(r.json()["input"]["n"], 5);
}

TEST_F(CliTest, ColorAlgorithms) {
  const auto two = run({"color", "schlafli-complement", "--algorithm", "two-omega"});
  EXPECT_EQ(two.code, cli::kSuccess);
  EXPECT_EQ(two.json()["result"]["num_colors"], 6);
  EXPECT_TRUE(two.json()["result"]["verified"]);
  EXPECT_EQ(two.json()["result"]["trace"]["case"], "Case2.2");

  const auto exact = run({"color", write("c5.col", cycle_graph(5)), "--algorithm", "exact"});
  EXPECT_EQ(exact.code, cli::kSuccess);
  EXPECT_EQ(exact.json()["result"]["num_colors"], 3);

  const auto three =
      run({"color", write("g.col", named_graph("groetzsch")), "--algorithm", "three-omega"});
  EXPECT_EQ(three.code, cli::kSuccess);
  EXPECT_LE(three.json()["result"]["num_colors"].get<int>(), 4);

  EXPECT_EQ(run({"color", "c7", "--algorithm", "greedy"}).code, cli::kSuccess);

  const auto outside = run({"color", "gem", "--algorithm", "two-omega"});
  EXPECT_EQ(outside.code, cli::kNegative);
  EXPECT_EQ(outside.json()["witness"]["vertices"].size(), 5u);
}

TEST_F(CliTest, ChiGuardrail) {
  const auto ok = run({"chi", "groetzsch"});
  EXPECT_EQ(ok.code, cli::kSuccess);
  EXPECT_EQ(ok.json()["chi"], 4);
  EXPECT_EQ(run({"chi", "groetzsch", "--max-n", "10"}).code, cli::kInputError);
}

TEST_F(CliTest, PartitionReport) {
  const auto r = run({"partition", "schlafli-complement"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(r.json()["partition"]["A"].size(), 3u);
  EXPECT_EQ(r.json()["checks"].size(), 4u);
}

TEST_F(CliTest, GenWritesGraphsAndSidecars) {
  const std::string out = (dir_ / "k.col").string();
  const auto r = run({"gen", "expansion", "--base", "c5", "--sizes", "2,2,2,2,2", "--out", out});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(io::read_graph_file(out, io::Format::kDimacs), named_graph("kc5-2"));
  EXPECT_TRUE(fs::exists(out + ".meta.json"));

  const auto a = run({"gen", "random", "--n", "9", "--strategy", "prune", "--seed", "5"});
  const auto b = run({"gen", "random", "--n", "9", "--strategy", "prune", "--seed", "5"});
  EXPECT_EQ(a.code, cli::kSuccess);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(io::graph_from_json(a.json()).order(), 9);

  EXPECT_EQ(run({"gen", "nope"}).code, cli::kInputError);
}

TEST_F(CliTest, SuiteVerdictsAreSeedIndependent) {
  const auto a = run({"suite", "--size-budget", "40"});
  const auto b = run({"suite", "--size-budget", "40", "--seed", "7"});
  EXPECT_EQ(a.code, cli::kSuccess);
  EXPECT_EQ(b.code, cli::kSuccess);
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(a.json()["criteria"][i]["passed"], b.json()["criteria"][i]["passed"]);
  }
  EXPECT_EQ(b.json()["seed"], 7);
}

TEST_F(CliTest, SuiteBudgetZeroSkipsSampledCriteria) {
  const auto r = run({"suite", "--size-budget", "0"});
  EXPECT_EQ(r.code, cli::kSuccess);
  const auto criteria = r.json()["criteria"];
  ASSERT_EQ(criteria.size(), 8u);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(criteria[i]["passed"]);
  for (int i = 3; i < 8; ++i) EXPECT_TRUE(criteria[i]["skipped"]);
}

TEST_F(CliTest, HumanOutput) {
  const auto r = run({"check", "gem", "--human"});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_NE(r.out.find("not a member"), std::string::npos);
}

}  // namespace
}  // namespace gemcolor
