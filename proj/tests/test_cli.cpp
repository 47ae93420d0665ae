#include "commands.hpp"

#include "netident/counterexamples.hpp"
#include "netident/network_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace netident;
using namespace netident::cli;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / ("netident_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string bridge_file(const TempDir& d, const Poly& f) {
  const auto p = d.path / "bridge.json";
  save_network(bridge_network(f, f, f, f), p);
  return p.string();
}

} // namespace

TEST(Cli, AnalyzeBridge) {
  TempDir d;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_analyze({bridge_file(d, Poly{0, 1, 1}), "fznl"}, out, err), kExitOk);
  EXPECT_NE(out.str().find("measure: {4}"), std::string::npos);
  EXPECT_NE(out.str().find("sufficient: yes"), std::string::npos);
}

TEST(Cli, IdentifyIsDeterministic) {
  TempDir d;
  IdentifyOptions opt;
  opt.file = bridge_file(d, Poly{0, 1, 1});
  opt.seed = 9;
  std::ostringstream a, b, err;
  EXPECT_EQ(cmd_identify(opt, a, err), kExitOk);
  EXPECT_EQ(cmd_identify(opt, b, err), kExitOk);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("result: PASS"), std::string::npos);
}

TEST(Cli, IdentifyLinearBridgeIsAmbiguous) {
  TempDir d;
  IdentifyOptions opt;
  opt.file = bridge_file(d, Poly{0, 1});
  std::ostringstream out, err;
  EXPECT_EQ(cmd_identify(opt, out, err), kExitAmbiguity);
  EXPECT_NE(err.str().find("ambiguity"), std::string::npos);
}

TEST(Cli, InputErrors) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_analyze({"/nonexistent.json", "fznl"}, out, err), kExitInputError);
  TempDir d;
  EXPECT_EQ(cmd_analyze({bridge_file(d, Poly{0, 1}), "bogus"}, out, err), kExitInputError);
  IdentifyOptions opt;
  opt.file = bridge_file(d, Poly{0, 1, 1});
  opt.measure = "9";
  EXPECT_EQ(cmd_identify(opt, out, err), kExitInputError);
}

TEST(Cli, TermCapLimit) {
  TempDir d;
  ::setenv("NETIDENT_TERM_CAP", "3", 1);
  WitnessOptions opt;
  opt.out_dir = d.path.string();
  std::ostringstream out, err;
  EXPECT_EQ(cmd_witness(opt, out, err), kExitLimit);
  ::unsetenv("NETIDENT_TERM_CAP");
}

TEST(Cli, Witnesses) {
  TempDir d;
  for (const char* kind : {"gauge", "linear-bridge"}) {
    WitnessOptions opt;
    opt.kind = kind;
    opt.out_dir = d.path.string();
    std::ostringstream out, err;
    EXPECT_EQ(cmd_witness(opt, out, err), kExitOk) << err.str();
    EXPECT_NE(out.str().find("verified: yes"), std::string::npos);
    EXPECT_TRUE(std::filesystem::exists(d.path / (std::string(kind) + "_a.json")));
  }
}

TEST(Cli, SimulateCheck) {
  TempDir d;
  SimulateOptions opt;
  opt.file = bridge_file(d, Poly{0, 1, 1});
  opt.horizon = 6;
  opt.impulse = "1";
  opt.check = true;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_simulate(opt, out, err), kExitOk);
  EXPECT_EQ(err.str().find("INCONSISTENT"), std::string::npos);
  EXPECT_EQ(out.str().rfind("t,node,u,y", 0), 0u);
}

TEST(Cli, CheckLemmasDeterministic) {
  CheckLemmasOptions opt{100, 4};
  std::ostringstream a, b, err;
  EXPECT_EQ(cmd_check_lemmas(opt, a, err), kExitOk);
  EXPECT_EQ(cmd_check_lemmas(opt, b, err), kExitOk);
  EXPECT_EQ(a.str(), b.str());
}
