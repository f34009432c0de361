#include "cli.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ybfk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, VerifyBuiltinJordanian) {
  const auto r = run({"verify-r", "--builtin", "sl2-jordanian"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["cybe_defect_nnz"], 0);
  EXPECT_EQ(j["carrier_dim"], 2);
  EXPECT_EQ(j["frobenius_scalar"], "1/4"); // against −2E*
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["config"]["seed"], 0);
  EXPECT_EQ(j["config"]["samples"], 1000);
  EXPECT_EQ(j["config"]["dt"], 1e-3);
}

TEST(Cli, VerifyNonsolutionFileFails) {
  const auto r = run({"verify-r", "--file", YBFK_FIXTURES "/nonsolution.json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_GT(r.json()["cybe_defect_nnz"].get<int>(), 0);
  EXPECT_NE(r.err.find("FAIL"), std::string::npos);
}

TEST(Cli, LeafAtZPoint) {
  const auto r = run({"leaf", "--n", "2", "--point", "1,5;0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["coset"], "B");
  EXPECT_EQ(j["rank"], 0);
  EXPECT_EQ(j["leaf"], "ZPoint");
}

TEST(Cli, LeafAtS) {
  const auto j = run({"leaf", "--point", "0,1;-1,0"}).json();
  EXPECT_EQ(j["coset"], "BsB");
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["leaf"], "Ratio[1:0]");
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"verify-r", "--bogus"}).code, 2);
  EXPECT_EQ(run({"verify-r"}).code, 2);
  EXPECT_EQ(run({"verify-r", "--builtin", "sl2-jordanian", "--file", "x.json"}).code, 2);
  EXPECT_EQ(run({"verify-r", "--file", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"leaf", "--point", "1,2;3,4"}).code, 2);
  EXPECT_EQ(run({"leaf", "--point", "1,2,3"}).code, 2);
  EXPECT_EQ(run({"leaf", "--n", "3", "--point", "1,5;0,1"}).code, 2);
  EXPECT_EQ(run({"reduce", "--t", "w"}).code, 2);
  EXPECT_EQ(run({"flow", "--hamiltonian", "T1"}).code, 2);
  EXPECT_EQ(run({"sample-ranks", "--samples", "abc"}).code, 2);
  const auto usage = run({"verify-r", "--bogus"});
  EXPECT_NE(usage.err.find("Usage"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, SameSeedSameBytes) {
  const std::vector<std::vector<std::string>> cmds{
      {"sample-ranks", "--samples", "200", "--seed", "9"},
      {"reduce", "--t", "s", "--samples", "100", "--seed", "3"},
      {"cocycle", "--samples", "50", "--seed", "1"},
      {"flow", "--steps", "500"},
  };
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  EXPECT_NE(run({"sample-ranks", "--samples", "50", "--seed", "1"}).out,
            run({"sample-ranks", "--samples", "50", "--seed", "2"}).out);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const std::vector<std::string> cmd{"sample-ranks", "--samples", "300", "--seed", "4"};
  setenv("YBFK_THREADS", "1", 1);
  const auto one = run(cmd);
  setenv("YBFK_THREADS", "7", 1);
  const auto seven = run(cmd);
  unsetenv("YBFK_THREADS");
  EXPECT_EQ(one.out, seven.out);
}

TEST(Cli, OutFlagWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "ybfk_cli_out.json";
  std::filesystem::remove(path);
  const auto r = run({"jordanian", "--n", "3", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["carrier_dim"], 6);
  EXPECT_EQ(j["cross_check"]["proportional"], true);
  std::filesystem::remove(path);
}

TEST(Cli, ReduceReportShape) {
  for (const char* t : {"e", "s"}) {
    const auto r = run({"reduce", "--t", t, "--samples", "100"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["samples"], 100);
    EXPECT_EQ(j["max_residual"], "0");
    EXPECT_TRUE(j["failures"].empty());
  }
}

TEST(Cli, CocycleCheckPair) {
  const auto r = run({"cocycle", "--check", "2,1;0,1/2", "1,3;0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["defect"], "0");
  EXPECT_EQ(run({"cocycle", "--check", "0,1;-1,0", "1,3;0,1"}).code, 2);
}

TEST(Cli, FlowDriftCheckCanFail) {
  // A very coarse step with a tight tolerance must be reported as a check failure.
  const auto r = run({"flow", "--hamiltonian", "T11*T21 + T12", "--point", "2,1;3,2", "--dt", "0.2", "--steps",
                      "50", "--float-tol", "1e-12"});
  EXPECT_EQ(r.code, 1) << r.out;
}

TEST(Cli, FlowTrajectoryFile) {
  const auto path = std::filesystem::temp_directory_path() / "ybfk_traj.jsonl";
  const auto r = run({"flow", "--steps", "100", "--record-every", "50", "--trajectory", path.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line))
    ++lines;
  EXPECT_EQ(lines, 3);
  std::filesystem::remove(path);
}
