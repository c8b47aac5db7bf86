#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(DOMKERN_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("domkern_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("kernelize").code, 1);
}

TEST_F(Cli, SolveExactOnSmallGraphs) {
  auto c6 = run("solve-exact " + file("c6.txt", "1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n"));
  EXPECT_EQ(c6.code, 0);
  EXPECT_EQ(c6.out.rfind("size 2\n", 0), 0u) << c6.out;

  auto p2 = run("solve-exact " + file("p2.txt", "7 9\n"));
  EXPECT_EQ(p2.code, 0);
  EXPECT_EQ(p2.out.rfind("size 1\nwitness 7", 0), 0u) << p2.out;

  auto white = file("p3.white", "1\n");
  auto p3 = run("solve-exact " + file("p3.txt", "0 1\n1 2\n") + " --white " + white);
  EXPECT_EQ(p3.out.rfind("size 1", 0), 0u) << p3.out;
}

TEST_F(Cli, SolveExactRefusesLargeInputs) {
  std::ostringstream text;
  for (int i = 0; i < 69; ++i) text << i << ' ' << i + 1 << '\n';
  EXPECT_EQ(run("solve-exact " + file("p70.txt", text.str())).code, 3);
  EXPECT_EQ(run("solve-exact --max-vertices 80 " + file("p70b.txt", text.str())).code, 1);
}

TEST_F(Cli, DataErrors) {
  EXPECT_EQ(run("kernelize " + (dir_ / "missing.txt").string()).code, 2);
  EXPECT_EQ(run("kernelize " + file("bad.txt", "1 2 3\n")).code, 2);
  auto g = file("g.txt", "1 2\n");
  EXPECT_EQ(run("kernelize " + g + " --white " + file("w.txt", "5\n")).code, 2);
  EXPECT_EQ(run("kernelize " + g + " -c on.everything").code, 1);
}

TEST_F(Cli, KernelizeWritesReportAndKernel) {
  auto g = file("c8.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n");
  auto report = (dir_ / "r.json").string();
  auto kernel = (dir_ / "k.txt").string();
  auto r = run("kernelize " + g + " -c off.none --report " + report + " --kernel-out " + kernel);
  ASSERT_EQ(r.code, 0);
  std::ifstream in(report);
  auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["config"], "off.none");
  EXPECT_EQ(doc["final_vertices"], 8);
  EXPECT_TRUE(fs::exists(kernel + ".white"));
  auto again = run("kernelize " + kernel + " --white " + kernel + ".white -c off.none");
  EXPECT_EQ(again.code, 0);
  EXPECT_NE(again.out.find("vertices 8 -> 8"), std::string::npos) << again.out;
}

TEST_F(Cli, GenThenBench) {
  auto out = (dir_ / "ds").string();
  ASSERT_EQ(run("gen -o " + out + " -n 2 --group 302_900 --group 450_900").code, 0);
  ASSERT_TRUE(fs::exists(dir_ / "ds" / "manifest.tsv"));
  EXPECT_EQ(run("gen -o " + out + " --group 1_2").code, 1);

  auto csv = run("bench " + out + "/manifest.tsv -c off.none,on.both -j 2");
  ASSERT_EQ(csv.code, 0);
  std::size_t lines = std::count(csv.out.begin(), csv.out.end(), '\n');
  EXPECT_EQ(lines, 1u + 4u * 2u + 2u * 2u);
  EXPECT_EQ(csv.out.rfind("kind,group,dataset,config", 0), 0u);
  EXPECT_EQ(run("bench " + out + "/manifest.tsv -c bogus").code, 1);
  EXPECT_EQ(run("bench " + (dir_ / "none.tsv").string()).code, 2);
}

}  // namespace
