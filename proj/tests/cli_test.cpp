// Golden tests for the pgraph binary: exit-code mapping and byte-exact
// stdout per subcommand. The binary path arrives via --tool=<path> (see
// main below).

#include <cstdlib>
#include <string>

#include <gtest/gtest.h>

#include <pgraph/gadgets.hpp>
#include <pgraph/graph.hpp>
#include <pgraph/machine.hpp>
#include "helpers.hpp"

namespace {

std::string g_tool;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    ASSERT_FALSE(g_tool.empty()) << "pass --tool=<path-to-pgraph>";
    cond_true_ = dir_.write("cond_true.pg",
                            encode_state(pgraph::gadgets::build_cond_fixture(true, 0).first))
                     .string();
    cond_pop_ = dir_.write("cond.pop", "0[011 := 10]\n0[001 := 00]\n").string();
    cycle_pg_ = dir_.write("cycle.pg", "nodes 3\n0 1 0\n1 1 2\n2 2 1\n").string();
    cycle_pop_ = dir_.write("cycle.pop", "0[0 := 10]\n").string();
  }

  testutil::ToolResult tool(const std::string& args) const {
    return testutil::run_command(g_tool + " " + args + " 2>/dev/null");
  }

  testutil::ToolResult tool_with_stderr(const std::string& args) const {
    return testutil::run_command(g_tool + " " + args + " 2>&1");
  }

  testutil::TempDir dir_;
  std::string cond_true_, cond_pop_, cycle_pg_, cycle_pop_;
};

TEST_F(Cli, RunHaltsOnCondFixture) {
  const auto r = tool("run --graph " + cond_true_ + " --program " + cond_pop_);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "halted steps=1\n");
}

TEST_F(Cli, RunTraceHashPrintsTrajectoryDigests) {
  const auto r =
      tool("run --graph " + cond_true_ + " --program " + cond_pop_ + " --trace hash");
  EXPECT_EQ(r.exit_code, 0);

  const auto fixture = pgraph::gadgets::build_cond_fixture(true, 0).first;
  const auto after = pgraph::apply_composition(fixture, pgraph::gadgets::cond_program());
  const std::string expected = "step=0 hash=" + pgraph::hash_hex(pgraph::state_hash(fixture)) +
                               "\nstep=1 hash=" + pgraph::hash_hex(pgraph::state_hash(after)) +
                               "\nhalted steps=1\n";
  EXPECT_EQ(r.out, expected);
}

TEST_F(Cli, RunTraceFullEmbedsStates) {
  const auto r =
      tool("run --graph " + cond_true_ + " --program " + cond_pop_ + " --trace full");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("  nodes 7\n"), std::string::npos);
  EXPECT_NE(r.out.find("halted steps=1\n"), std::string::npos);
}

TEST_F(Cli, RunReportsCycleWithExitCode2) {
  const auto r = tool("run --graph " + cycle_pg_ + " --program " + cycle_pop_);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.out, "cycled prefix=0 period=2\n");
}

TEST_F(Cli, RunReportsStepLimitWithExitCode3) {
  const auto r =
      tool("run --graph " + cycle_pg_ + " --program " + cycle_pop_ + " --max-steps 1");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_EQ(r.out, "step-limit 1\n");
}

TEST_F(Cli, RunDeterministicStdout) {
  const std::string cmd =
      "run --graph " + cond_true_ + " --program " + cond_pop_ + " --trace full";
  const auto first = tool(cmd);
  const auto second = tool(cmd);
  EXPECT_EQ(first.exit_code, 0);
  EXPECT_EQ(first.out, second.out);
}

TEST_F(Cli, MalformedProgramNamesFileAndLine) {
  const std::string bad = dir_.write("bad.pop", "# fine\n0[2 := 1]\n").string();
  const auto r = tool_with_stderr("run --graph " + cycle_pg_ + " --program " + bad);
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_NE(r.out.find("bad.pop"), std::string::npos);
  EXPECT_NE(r.out.find("line 2"), std::string::npos);
}

TEST_F(Cli, MalformedGraphNamesFileAndLine) {
  const std::string bad = dir_.write("bad.pg", "nodes 2\n0 0 0\n").string();
  const auto r = tool_with_stderr("run --graph " + bad + " --program " + cycle_pop_);
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_NE(r.out.find("bad.pg"), std::string::npos);
  EXPECT_NE(r.out.find("line 3"), std::string::npos);
}

TEST_F(Cli, MissingFileIsAnInputError) {
  const auto r = tool_with_stderr("run --graph /does/not/exist.pg --program " + cycle_pop_);
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_NE(r.out.find("exist.pg"), std::string::npos);
}

TEST_F(Cli, OriginBeyondGraphIsAnInputError) {
  const std::string big = dir_.write("big.pop", "9[0 :=]\n").string();
  const auto r = tool_with_stderr("run --graph " + cycle_pg_ + " --program " + big);
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_NE(r.out.find("origin"), std::string::npos);
}

TEST_F(Cli, CheckDistinguishesFixedFromMoving) {
  const auto moving = tool("check --graph " + cond_true_ + " --program " + cond_pop_);
  EXPECT_EQ(moving.exit_code, 1);
  EXPECT_EQ(moving.out, "not-fixed\n");

  const auto post = pgraph::apply_composition(
      pgraph::gadgets::build_cond_fixture(true, 0).first, pgraph::gadgets::cond_program());
  const std::string fixed_pg = dir_.write("fixed.pg", pgraph::encode_state(post)).string();
  const auto fixed = tool("check --graph " + fixed_pg + " --program " + cond_pop_);
  EXPECT_EQ(fixed.exit_code, 0);
  EXPECT_EQ(fixed.out, "fixed\n");
}

TEST_F(Cli, FmtCanonicalizesPrograms) {
  const std::string messy =
      dir_.write("messy.pop", "# heading\n\n0[011:=10]\n  0[001 :=   00]\n").string();
  const auto r = tool("fmt --program " + messy);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "0[011 := 10]\n0[001 := 00]\n");
}

TEST_F(Cli, FmtRejectsMalformedProgram) {
  const std::string bad = dir_.write("bad2.pop", "0[:=]\n").string();
  const auto r = tool_with_stderr("fmt --program " + bad);
  EXPECT_EQ(r.exit_code, 4);
}

TEST_F(Cli, GadgetVerifyPassesForAllGates) {
  for (const char* gate : {"not", "and", "or", "cond"}) {
    const auto r = tool(std::string("gadget verify --gate ") + gate + " --seeds 5");
    EXPECT_EQ(r.exit_code, 0) << gate;
    EXPECT_NE(r.out.find("PASS"), std::string::npos) << gate;
  }
}

TEST_F(Cli, OracleSweepPasses) {
  const auto r = tool("oracle --nodes 2 --max-path 2 --samples 50");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("postconditions:"), std::string::npos);
  EXPECT_NE(r.out.find("fixed-point-iff:"), std::string::npos);
  EXPECT_NE(r.out.find("fixed-construction:"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST_F(Cli, OracleDumpEmitsCaseLines) {
  const auto r = tool("oracle --nodes 2 --max-path 1 --samples 10 --dump");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\tok\n"), std::string::npos);
}

TEST_F(Cli, UnknownFlagsAreErrors) {
  const auto r = tool_with_stderr("run --graph " + cycle_pg_ + " --program " + cycle_pop_ +
                                  " --frobnicate");
  EXPECT_EQ(r.exit_code, 4);
}

TEST_F(Cli, UnknownSubcommandIsAnError) {
  const auto r = tool_with_stderr("explode");
  EXPECT_EQ(r.exit_code, 4);
}

}  // namespace

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--tool=", 0) == 0) {
      g_tool = arg.substr(7);
    }
  }
  return RUN_ALL_TESTS();
}
