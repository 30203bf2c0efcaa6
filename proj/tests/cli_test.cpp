// Runs the built forest_trees binary and checks output and exit codes.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " FOREST_TREES_CLI " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("forest_trees_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(Cli, CountClosedFormAndOracles) {
  const std::string path = write("one_edge.json", R"({"parts":[2,2],"edges":[[[0,0],[1,0]]]})");
  CliResult r = run("count " + path);
  ASSERT_EQ(r.exit_code, 0);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["tau"], "3");
  EXPECT_EQ(doc["profile"], json::parse(R"([["1","1"],["1","0"],["0","1"]])"));
  EXPECT_EQ(doc["oracle"]["name"], "none");

  for (const char* oracle : {"enumerate", "kirchhoff"}) {
    r = run("count " + path + " --oracle " + oracle);
    ASSERT_EQ(r.exit_code, 0) << oracle;
    doc = json::parse(r.out);
    EXPECT_EQ(doc["oracle"]["tau"], "3");
    EXPECT_EQ(doc["oracle"]["match"], true);
  }
}

TEST_F(Cli, CountTripartiteUsesKirchhoff) {
  const std::string path = write("tri.json", R"({"parts":[1,1,1],"edges":[[[0,0],[1,0]]]})");
  const CliResult r = run("count " + path + " --oracle enumerate");
  ASSERT_EQ(r.exit_code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["tau"], "2");
  EXPECT_EQ(doc["method"], "kirchhoff");
}

TEST_F(Cli, CountBigNumbersStayExact) {
  const CliResult r = run("count " + write("big.json", R"({"parts":[30,30],"edges":[]})"));
  ASSERT_EQ(r.exit_code, 0);
  // 30^29 * 30^29
  EXPECT_EQ(json::parse(r.out)["tau"],
            "47101286972462448349216036890000000000000000000000000000000000000000000000000000000000");
}

TEST_F(Cli, CountErrors) {
  EXPECT_EQ(run("count " + write("bad.json", R"({"parts":[2,2)")).exit_code, 1);
  EXPECT_EQ(run("count " + (dir_ / "missing.json").string()).exit_code, 1);
  const std::string cycle =
      write("cycle.json", R"({"parts":[2,2],"edges":[[[0,0],[1,0]],[[0,0],[1,1]],[[0,1],[1,0]],[[0,1],[1,1]]]})");
  EXPECT_EQ(run("count " + cycle).exit_code, 1);
  const std::string big = write("big.json", R"({"parts":[5,5],"edges":[]})");
  EXPECT_EQ(run("count " + big).exit_code, 0);
  EXPECT_EQ(run("count " + big + " --oracle enumerate").exit_code, 1);
  EXPECT_EQ(run("count " + big + " --oracle magic").exit_code, 1);
}

TEST_F(Cli, Phi) {
  CliResult r = run("phi 5 7");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(json::parse(r.out)["value"], "1");
  r = run("phi 1,2,3,4");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(json::parse(r.out)["phi"], json::parse(R"({"num":"10","den":"1"})"));
  EXPECT_EQ(run("phi 1 -1 -1 1").exit_code, 1);
  EXPECT_EQ(run("phi 1 2 3").exit_code, 1);
  EXPECT_EQ(run("phi 1 x").exit_code, 1);
}

TEST_F(Cli, Identities) {
  CliResult r = run("identities --ids all --sizes 1..5 --trials 50 --seed 0");
  ASSERT_EQ(r.exit_code, 0);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["fail"], "0");
  EXPECT_EQ(doc["seed"], "0");
  EXPECT_EQ(doc["reports"].size(), 10u);

  EXPECT_EQ(run("identities --ids L99").exit_code, 1);
  EXPECT_EQ(run("identities --sizes 11").exit_code, 1);
  EXPECT_EQ(run("identities --trials many").exit_code, 1);

  r = run("identities --ids L22 --trials 0");
  ASSERT_EQ(r.exit_code, 0);
  doc = json::parse(r.out);
  EXPECT_EQ(doc["pass"], "0");
  EXPECT_EQ(doc["fail"], "0");
}

TEST_F(Cli, Conjecture) {
  const fs::path out = dir_ / "scan.jsonl";
  CliResult r = run("conjecture --max-n 3 --trials 20 --seed 4 --out " + out.string());
  ASSERT_EQ(r.exit_code, 0);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["seed"], "4");
  for (const json& row : doc["by_k"])
    if (row["k"] == "1" || row["k"] == "2") {
      EXPECT_EQ(row["equality"], row["reports"]);
    }

  std::ifstream in(out);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line); ++lines) {
    const json report = json::parse(line);
    EXPECT_TRUE(report.contains("holds"));
  }
  EXPECT_EQ(std::to_string(lines), doc["reports"]);

  const auto start = std::chrono::steady_clock::now();
  r = run("conjecture --max-n 6 --trials 10");
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(60));
  EXPECT_TRUE(r.exit_code == 0 || r.exit_code == 3);

  EXPECT_EQ(run("conjecture --out " + (dir_ / "no" / "such" / "dir.jsonl").string()).exit_code, 1);
  EXPECT_EQ(run("conjecture --max-n 13").exit_code, 1);
}

TEST_F(Cli, SelftestList) {
  const CliResult r = run("selftest --list");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(json::parse(r.out)["criteria"].size(), 10u);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").exit_code, 1);
  EXPECT_EQ(run("frobnicate").exit_code, 1);
  EXPECT_EQ(run("count").exit_code, 1);
}

TEST_F(Cli, OutputIsByteIdentical) {
  const std::string path = write("f.json", R"({"parts":[4,5],"edges":[[[0,1],[1,2]],[[0,1],[1,3]]]})");
  const std::vector<std::string> commands{
      "count " + path + " --oracle kirchhoff",
      "phi 1/2 3 -4 5/7 2 2",
      "identities --ids all --sizes 2,3,4 --trials 20 --seed 9",
      "conjecture --max-n 8 --trials 5 --seed 11",
  };
  for (const std::string& c : commands) {
    const CliResult first = run(c);
    const CliResult again = run(c);
    const CliResult single = run(c, "FOREST_TREES_THREADS=1");
    const CliResult many = run(c, "FOREST_TREES_THREADS=4");
    ASSERT_EQ(first.exit_code, 0) << c;
    EXPECT_EQ(first.out, again.out) << c;
    EXPECT_EQ(first.out, single.out) << c;
    EXPECT_EQ(first.out, many.out) << c;
  }
  EXPECT_NE(run("identities --ids L22 --trials 5 --seed 1").out,
            run("identities --ids L22 --trials 5 --seed 2").out);
}

}  // namespace
