#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace prfas {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "prfas");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("prfas_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return dir_ / name;
  }

  fs::path dir_;
};

const std::string triangle = std::string(PRFAS_TEST_DATA_DIR) + "/triangle.txt";

TEST_F(CliTest, RunPagerankOnTriangle) {
  const auto fas_path = dir_ / "fas.txt";
  const auto r = run_cli({"run", triangle, "--algorithm", "pagerank", "--iterations", "5",
                          "-o", fas_path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream line(r.out);
  std::string algo, pct;
  std::size_t size = 0;
  double ms = -1;
  line >> algo >> size >> pct >> ms;
  EXPECT_EQ(algo, "pagerank");
  EXPECT_EQ(size, 1u);
  EXPECT_EQ(pct, "33.33");
  EXPECT_GE(ms, 0.0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
  EXPECT_EQ(slurp(fas_path), "# size=1 pct=33.33\n0 1\n");
}

TEST_F(CliTest, RunDefaultsToPagerank) {
  const auto r = run_cli({"run", triangle});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("pagerank 1 33.33 ", 0), 0u);
}

TEST_F(CliTest, RunAllComparesThree) {
  const auto r = run_cli({"run", triangle, "--all", "-o", (dir_ / "fas").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::vector<std::string> names;
  for (std::string line; std::getline(lines, line);) names.push_back(line.substr(0, line.find(' ')));
  EXPECT_EQ(names, (std::vector<std::string>{"greedy", "sort", "pagerank"}));
  for (const char* algo : {"greedy", "sort", "pagerank"}) {
    const auto path = dir_ / ("fas." + std::string(algo));
    ASSERT_TRUE(fs::exists(path));
    EXPECT_EQ(run_cli({"verify", triangle, path.string()}).code, 0);
  }
}

TEST_F(CliTest, VerifyExitCodes) {
  const auto empty = write("empty.txt", "");
  EXPECT_EQ(run_cli({"verify", triangle, empty.string()}).code, 1);
  const auto good = write("good.txt", "2 0\n");
  const auto ok = run_cli({"verify", triangle, good.string()});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "valid 1 33.33\n");
  const auto foreign = write("foreign.txt", "1 0\n");
  EXPECT_EQ(run_cli({"verify", triangle, foreign.string()}).code, 1);
}

TEST_F(CliTest, GenerateIsByteReproducible) {
  const std::vector<std::string> flags{"--n", "100", "--avg-out-degree", "1.5",
                                       "--back-fraction", "0.1", "--seed", "7"};
  auto args_for = [&](const std::string& name) {
    std::vector<std::string> args{"generate"};
    args.insert(args.end(), flags.begin(), flags.end());
    args.push_back("-o");
    args.push_back((dir_ / name).string());
    return args;
  };
  ASSERT_EQ(run_cli(args_for("a.txt")).code, 0);
  ASSERT_EQ(run_cli(args_for("b.txt")).code, 0);
  EXPECT_EQ(slurp(dir_ / "a.txt"), slurp(dir_ / "b.txt"));
  EXPECT_EQ(slurp(dir_ / "a.txt.planted"), slurp(dir_ / "b.txt.planted"));

  std::ifstream in(dir_ / "a.txt");
  const auto parsed = parse_edge_list(in);
  EXPECT_EQ(parsed.graph.node_count(), 100u);
  EXPECT_EQ(parsed.graph.edge_count(), 150u);
  const auto planted = slurp(dir_ / "a.txt.planted");
  EXPECT_EQ(planted.rfind("# planted=15\n", 0), 0u);
  // The planted sidecar is itself a valid FAS file.
  EXPECT_EQ(run_cli({"verify", (dir_ / "a.txt").string(), (dir_ / "a.txt.planted").string()}).code,
            0);
}

TEST_F(CliTest, GenerateInfeasible) {
  const auto r = run_cli({"generate", "--n", "5", "--avg-out-degree", "10", "-o",
                          (dir_ / "x.txt").string()});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("capacity"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"run", triangle, "--algorithm", "kwiksort"}).code, 2);
  EXPECT_EQ(run_cli({"generate", "--n", "10"}).code, 2);
  EXPECT_EQ(run_cli({"bench", "--seeds", "0"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(CliTest, IoAndParseErrors) {
  EXPECT_EQ(run_cli({"run", (dir_ / "missing.txt").string()}).code, 3);
  const auto bad = write("bad.txt", "0 1\nfoo bar\n");
  const auto r = run_cli({"run", bad.string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, BenchWritesCsv) {
  const auto config = write("bench.cfg",
                            "sweep = nodes\nvalues = 40, 60\nseeds = 2\navg_out_degree = 3\n");
  const auto r = run_cli({"bench", "--config", config.string(), "--out-dir", dir_.string(),
                          "--algorithms", "greedy,pagerank"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream runs(dir_ / "runs.csv");
  std::string line;
  std::getline(runs, line);
  EXPECT_EQ(line, benchmark_csv_header);
  std::size_t count = 0;
  while (std::getline(runs, line)) ++count;
  EXPECT_EQ(count, 8u);

  std::ifstream agg(dir_ / "aggregate.csv");
  std::getline(agg, line);
  EXPECT_EQ(line, aggregate_csv_header);
  count = 0;
  while (std::getline(agg, line)) ++count;
  EXPECT_EQ(count, 4u);
}

TEST_F(CliTest, BenchFlagsWithoutConfig) {
  const auto r = run_cli({"bench", "--sweep", "out_degree", "--values", "1.5,3", "--n", "40",
                          "--seeds", "1", "--out-dir", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "runs.csv"));
  std::istringstream lines(r.out);
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line);) ++count;
  EXPECT_EQ(count, 6u);
}

}  // namespace
}  // namespace prfas
