#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fsgraph/graph.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun fs(std::vector<std::string> args) {
  args.insert(args.begin(), "fs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = fs_cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("fs_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, GenRoundTrip) {
  const CliRun r = fs({"gen", "--kind", "gnp", "--n", "6", "--p", "0.5", "--seed", "7", "--out",
                    path("g.el")});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string text = slurp(path("g.el"));
  EXPECT_EQ(text.rfind("# fs gen --kind gnp --n 6 --p 0.5 --seed 7 --out ", 0), 0u);
  EXPECT_NE(text.find("| seed=7\n"), std::string::npos);
  std::ifstream in(path("g.el"));
  EXPECT_EQ(fsg::read_edge_list(in), fsg::gnp(6, 0.5, 7));
}

TEST_F(Cli, ComponentsOfCompleteAgainstPath) {
  ASSERT_EQ(fs({"gen", "--kind", "complete", "--n", "4", "--out", path("k4.el")}).code, 0);
  ASSERT_EQ(fs({"gen", "--kind", "path", "--n", "4", "--out", path("p4.el")}).code, 0);
  const CliRun r = fs({"components", "--x", path("k4.el"), "--y", path("p4.el")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("n,component_count,isolated_count,size_histogram\n4,1,0,24:1\n"),
            std::string::npos)
      << r.out;
  const CliRun neg = fs({"components", "--x", path("p4.el"), "--y", path("p4.el"),
                      "--fail-on-disconnected"});
  EXPECT_EQ(neg.code, 1);
}

TEST_F(Cli, EveryConsumerAcceptsGenOutput) {
  ASSERT_EQ(fs({"gen", "--kind", "cycle", "--n", "5", "--out", path("c.el")}).code, 0);
  ASSERT_EQ(fs({"gen", "--kind", "gnp", "--n", "5", "--p", "0.7", "--out", path("g.el")}).code,
            0);
  EXPECT_EQ(fs({"path", "--x", path("c.el"), "--y", path("g.el"), "--from", "0 1 2 3 4",
                "--to", "0 1 2 3 4"})
                .code,
            0);
  EXPECT_EQ(fs({"exchange", "--x", path("c.el"), "--y", path("g.el"), "--sigma", "0 1 2 3 4",
                "--u", "0", "--v", "1", "--mode", "bounded"})
                .code,
            0);
  EXPECT_EQ(fs({"pack", "--x", path("c.el"), "--y", path("g.el")}).code, 0);
  std::ofstream(path("sets.txt")) << "0 1\n2 3\n";
  ASSERT_EQ(fs({"gen", "--kind", "complete", "--n", "2", "--out", path("k2.el")}).code, 0);
  const CliRun e = fs({"embed", "--g", path("k2.el"), "--h", path("k2.el"), "--x", path("c.el"),
                    "--y", path("g.el"), "--sets", path("sets.txt")});
  EXPECT_EQ(e.code, 0) << e.err;
  EXPECT_NE(e.out.find("found,witness\n"), std::string::npos);
}

TEST_F(Cli, SweepIsByteIdentical) {
  const std::vector<std::string> base{"sweep",   "--n",    "5",      "--p1-grid", "0.2:1:3",
                                      "--p2-grid", "0.6", "--trials", "15",      "--seed",
                                      "9"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out", path("a.csv")});
  b.insert(b.end(), {"--out", path("a.csv")});
  ASSERT_EQ(fs(a).code, 0);
  const std::string first = slurp(path("a.csv"));
  ASSERT_EQ(fs(b).code, 0);
  EXPECT_EQ(first, slurp(path("a.csv")));
  EXPECT_NE(first.find("n,p1,p2,trials,connected,disconnected,unknown,iso_cert,xy_disc,"
                       "frac_connected,stderr\n"),
            std::string::npos);
}

TEST_F(Cli, JansonCsv) {
  std::ofstream(path("g.el")) << "2 1\n0 1\n";
  std::ofstream(path("h.el")) << "2 0\n";
  const CliRun r = fs({"janson", "--g", path("g.el"), "--h", path("h.el"), "--q", "10", "--n",
                    "2.718281828459045", "--p1", "1", "--p2", "0.5", "--fail-on-violation"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("mask,edges_g,edges_h,lhs_log,rhs_log\n3,1,0,4.60517018599,"),
            std::string::npos)
      << r.out;
  const CliRun gadget = fs({"janson", "--gadget", "--m", "18", "--n", "1e9", "--p1", "0.2",
                         "--p2", "0.2", "--q", "5"});
  EXPECT_EQ(gadget.code, 0) << gadget.err;
}

TEST_F(Cli, GadgetEmitAndReport) {
  const CliRun r = fs({"gadget", "--m", "208"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("c5,0"), std::string::npos);
  EXPECT_NE(r.out.find("c5,1"), std::string::npos);
  const CliRun g = fs({"gadget", "--m", "208", "--emit", "g-star", "--out", path("gs.el")});
  ASSERT_EQ(g.code, 0);
  std::ifstream in(path("gs.el"));
  EXPECT_EQ(fsg::read_edge_list(in).edge_count(), 217u);
  EXPECT_EQ(fs({"gadget", "--m", "20"}).code, 1);
  const CliRun min = fs({"gadget", "--find-min", "17:220"});
  EXPECT_NE(min.out.find("m,ell\n208,7\n"), std::string::npos);
}

TEST_F(Cli, MarkersAndPack) {
  const CliRun m = fs({"markers", "--n", "100,1e30", "--epsilon", "0.2"});
  ASSERT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("\n100,0.2,"), std::string::npos);
  std::ofstream(path("c8.el")) << "8 8\n0 1\n0 7\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n";
  std::ofstream(path("m8.el")) << "8 4\n0 1\n2 3\n4 5\n6 7\n";
  const CliRun p = fs({"pack", "--x", path("c8.el"), "--y", path("m8.el"), "--mode", "local",
                    "--seed", "5"});
  ASSERT_EQ(p.code, 0) << p.err;
  const auto line = p.out.substr(p.out.find('\n') + 1);
  EXPECT_EQ(std::count(line.begin(), line.end(), ' '), 7);
}

TEST(CliUsage, ExitCodes) {
  EXPECT_EQ(fs({"--version"}).code, 0);
  EXPECT_EQ(fs({"--version"}).out, "fs 1.0.0 (edge-list format 1)\n");
  EXPECT_EQ(fs({}).code, 2);
  const CliRun bogus = fs({"frobnicate"});
  EXPECT_EQ(bogus.code, 2);
  EXPECT_NE(bogus.err.find("sweep"), std::string::npos);  // synopsis lists subcommands
  EXPECT_EQ(fs({"gen", "--kind", "gnp", "--n", "4", "--wat"}).code, 2);
  EXPECT_EQ(fs({"gen", "--kind", "gnp", "--n", "4", "--p", "3"}).code, 2);
  EXPECT_EQ(fs({"components", "--x", "/nonexistent.el", "--y", "/nonexistent.el"}).code, 2);
  EXPECT_EQ(fs({"gen", "--help"}).code, 0);
}
