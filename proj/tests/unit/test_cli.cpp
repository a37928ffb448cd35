#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code = -1;
  std::string out;
};

Invocation run(const std::string& args) {
  const std::string cmd = std::string(VINBERG_CLI_PATH) + " " + args + " 2>/dev/null";
  Invocation r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("vinberg_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, Build) {
  const Invocation r = run("build --spec " + write("s.json", R"({"rank":3,"dim_v":1,"mult":1})"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"dim_herm\": 6"), std::string::npos);
  EXPECT_NE(r.out.find("\"exponents\": [2, 2, 2]"), std::string::npos);
  EXPECT_EQ(run("build --spec " + write("w.json", R"({"rank":2,"dim_w":9})")).code, 0);
}

TEST_F(Cli, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run("build --spec " + write("bad.json", "{rank: 3")).code, 2);
  EXPECT_EQ(run("build --spec " + write("unk.json", R"({"rank":3,"dim_v":1,"foo":1})")).code, 2);
  EXPECT_EQ(run("build").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  const std::string spec = write("s.json", R"({"rank":3,"dim_v":1})");
  const std::string x = write("x.json", R"({"diag":[1,1,1]})");
  EXPECT_EQ(run("eval --spec " + spec + " --x " + x + " --op nonsense").code, 2);
  EXPECT_EQ(run("scan --spec " + spec + " --eps1 1:0:1").code, 2);
}

TEST_F(Cli, EvalOperations) {
  const std::string spec = write("s.json", R"({"rank":3,"dim_v":1})");
  const std::string id = write("id.json", R"({"diag":[1,1,1]})");
  const Invocation d = run("eval --spec " + spec + " --x " + id + " --op d");
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("\"result\": 1.0"), std::string::npos);
  const std::string spec2 = write("r2.json", R"({"rank":2,"dim_w":1})");
  const Invocation m = run("eval --spec " + spec2 + " --x " + write("m.json", R"({"diag":[1,1],"offdiag":{"12":[2]}})") +
                    " --op membership");
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("\"result\": false"), std::string::npos);
  // Decomposing outside the cone is a domain error.
  EXPECT_EQ(run("eval --spec " + spec2 + " --x " + path("m.json") + " --op decompose").code, 2);
}

TEST_F(Cli, SampleThenDecompose) {
  const std::string spec = write("s.json", R"({"rank":3,"dim_v":4,"seed":5})");
  const Invocation s = run("sample --spec " + spec + " --out " + path("x.json"));
  ASSERT_EQ(s.code, 0);
  const Invocation d = run("eval --spec " + spec + " --x " + path("x.json") + " --op decompose");
  ASSERT_EQ(d.code, 0);
  const auto pos = d.out.find("\"reconstruction_residual\": ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_LE(std::stod(d.out.substr(pos + 27)), 1e-9);
}

TEST_F(Cli, ScanIsDeterministic) {
  const std::string spec = write("s.json", R"({"rank":3,"dim_v":1,"seed":1})");
  const std::string args = "scan --spec " + spec + " --eps1 -1:1:1 --eps2 -0.5:0.5:0.5 --grid 8 --out ";
  ASSERT_EQ(run(args + path("a.csv")).code, 0);
  ASSERT_EQ(run(args + path("b.csv")).code, 0);
  const std::string a = read(path("a.csv"));
  EXPECT_EQ(a, read(path("b.csv")));
  EXPECT_EQ(a.rfind("eps1,eps2,classification,witness_x2,witness_x3,min_minor\n", 0), 0u);
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 10);
}

TEST_F(Cli, UnsupportedExitsThree) {
  EXPECT_EQ(run("scan --spec " + write("i.json", R"({"rank":3,"dim_v":2,"signature":[1,1]})") + " --grid 4").code, 3);
  EXPECT_EQ(run("scan --spec " + write("r2.json", R"({"rank":2,"dim_w":1})") + " --grid 4").code, 3);
}

TEST_F(Cli, Selftest) {
  EXPECT_EQ(run("selftest").code, 0);
  EXPECT_EQ(run("selftest --corrupt-gamma").code, 1);
}
