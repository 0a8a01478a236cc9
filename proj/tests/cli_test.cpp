#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + BORDERCERT_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bordercert_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, CertifyWritesJsonAndSucceeds) {
  const auto out = dir_ / "out.json";
  const auto r = cli("certify --signature 5,2,3,3,0 --trials 3 --seed 1 --json " + out.string());
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(slurp(out));
  EXPECT_EQ(j["verdict"], "ELEMENTARY_CERTIFIED");
  EXPECT_EQ(j["dimU"], 86);
  EXPECT_EQ(j["principalDim"], 90);
  EXPECT_EQ(j["trials"].size(), 3u);
  EXPECT_TRUE(j.contains("timings"));
}

TEST_F(Cli, CertifyIsByteIdenticalWithoutTimings) {
  const std::string args = "certify --signature 5,2,3,3,1 --trials 2 --seed 4 --no-timings --json -";
  const auto a = cli(args), b = cli(args + " --threads 1");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("timings"), std::string::npos);
}

TEST_F(Cli, ModifyMatchesGolden) {
  for (const char* s : {"3,4,6,2,1", "5,2,3,3,0"}) {
    std::string name = s;
    std::replace(name.begin(), name.end(), ',', '_');
    const auto r = cli(std::string("modify --signature ") + s);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(std::string(BORDERCERT_GOLDEN_DIR) + "/modify_" + name + ".txt")) << s;
  }
}

TEST_F(Cli, InspectConvertsShapes) {
  const auto r = cli("inspect --shape 5,2,2,3 --json -");
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["signature"], json({{"n", 5}, {"r", 2}, {"s", 3}, {"delta", 3}, {"w", 1}}));
  EXPECT_EQ(j["dimU"], 59);
  const auto text = cli("inspect --signature 4,3,4,2,1");
  EXPECT_NE(text.out.find("hilbert: 1 4 10 7 9"), std::string::npos) << text.out;
}

TEST_F(Cli, VerifyAndTangent) {
  auto r = cli("verify --signature 5,2,3,3,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("border basis: ok"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("x5^4 in I"), std::string::npos) << r.out;
  r = cli("tangent --signature 5,2,3,3,1 --seed 3 --field prime --json -");
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["tangentDim"], 59);
  EXPECT_EQ(j["method"], "prime");
  EXPECT_EQ(j["columns"].get<int>() - j["rank"].get<int>(), 59);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(cli("inspect --signature 5,2,3,5,0").code, 2);
  EXPECT_EQ(cli("inspect --signature 5,2,x").code, 2);
  EXPECT_EQ(cli("inspect").code, 2);
  EXPECT_EQ(cli("inspect --signature 5,2,3,3,1 --shape 5,2,2,3").code, 2);
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("certify --signature 5,2,3,3,1 --trials 0").code, 2);
  EXPECT_EQ(cli("certify --signature 5,2,3,3,1 --field prime --trials 1").code, 3);
  EXPECT_EQ(cli("inspect --signature 5,2,3,3,1", "BORDERCERT_PRIME=12").code, 2);
  EXPECT_EQ(cli("inspect --signature 5,2,3,3,1", "BORDERCERT_PRIME=2147483659").code, 0);
  EXPECT_EQ(cli("--version").code, 0);
}

TEST_F(Cli, BatchKeepsInputOrderAndSurvivesFailures) {
  const auto in = dir_ / "batch.txt";
  std::ofstream(in) << "# signatures\n5,2,3,3,1\n\nnot,a,signature\nshape 5,2,2,3\n5,2,3,3,0\n";
  const auto r = cli("batch " + in.string() + " --trials 1 --jobs 3 --no-timings");
  EXPECT_EQ(r.code, 2);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 4u) << r.out;
  EXPECT_EQ(json::parse(lines[0])["dimU"], 59);
  EXPECT_EQ(json::parse(lines[1])["input"], "not,a,signature");
  EXPECT_EQ(json::parse(lines[1])["exitCode"], 2);
  EXPECT_EQ(json::parse(lines[2])["dimU"], 59);
  EXPECT_EQ(json::parse(lines[3])["dimU"], 86);
  EXPECT_EQ(lines[0], lines[2]);
  const auto again = cli("batch " + in.string() + " --trials 1 --jobs 1 --no-timings");
  EXPECT_EQ(again.out, r.out);
  EXPECT_EQ(cli("batch " + (dir_ / "missing.txt").string()).code, 2);
}
