#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "altkit/altkit.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(ALTKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, GoldenExitCodes) {
  EXPECT_EQ(run("check --algebra quaternions --identity associative").code, 0);
  EXPECT_EQ(run("check --algebra ak --param k=1 --param a11=1 --param a12=1 --identity left-alt").code, 1);
  EXPECT_EQ(run("check --algebra octonions").code, 2);
  EXPECT_EQ(run("check --algebra ak --param k=1 --param a11=-1").code, 2);
  EXPECT_EQ(run("check --algebra tn --param a").code, 2);
  EXPECT_EQ(run("check --algebra quaternions --identity moufang").code, 2);
  EXPECT_EQ(run("describe --file /nonexistent.json").code, 2);
  EXPECT_EQ(run("describe").code, 2);
  EXPECT_EQ(run("describe --algebra quaternions --file x.json").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("decompose --algebra quaternions --map 1,1,1,1").code, 1);
  EXPECT_EQ(run("decompose --algebra quaternions --map 1,1,-1,-1").code, 0);
  EXPECT_EQ(run("verify-paper --only nothing").code, 2);
}

TEST(Cli, CheckWitnessJson) {
  CliRun r = run("check --algebra ak --param k=1 --param a11=1 --param a12=1 --identity left-alt --format json");
  auto j = altkit::Json::parse(r.out);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["witness"]["x"], altkit::Json({"0", "0", "1", "0"}));
  EXPECT_EQ(j["witness"]["z"], altkit::Json({"0", "0", "0", "1"}));
}

TEST(Cli, PartialChecksWireUnitsAutomatically) {
  CliRun r = run("check --algebra ak --param k=2 --identity partial-left-alt --identity partial-flexible --format json");
  EXPECT_EQ(r.code, 0);
  CliRun t = run("check --algebra tn --param a=-1 --param g=1 --param h=1 --identity partial-right-alt");
  EXPECT_EQ(t.code, 1);
}

TEST(Cli, ClassifyTnAsQuaternions) {
  CliRun r = run("classify --family tn --param a=-1 --param g=1 --format json");
  EXPECT_EQ(r.code, 0);
  auto j = altkit::Json::parse(r.out);
  EXPECT_EQ(j["type"], "H");
  EXPECT_EQ(j["witness_verified"], true);
}

TEST(Cli, ClassifyTpLie) {
  auto j = altkit::Json::parse(run("classify --algebra tp --param delta1=1 --format json").out);
  EXPECT_EQ(j["type"], "g49_zero");
}

TEST(Cli, DescribeJsonRoundTrips) {
  CliRun r = run("describe --algebra tp --param alpha1=3/2 --param gamma2=-7/3 --format json");
  ASSERT_EQ(r.code, 0);
  const std::string path = "cli_roundtrip.json";
  std::ofstream(path) << r.out;
  CliRun again = run("describe --file " + path + " --format json");
  EXPECT_EQ(again.out, r.out);
  auto A = altkit::load_algebra(path);
  auto B = altkit::build(altkit::Family::Tp, {{"alpha1", altkit::Rational(3, 2)}, {"gamma2", altkit::Rational(-7, 3)}});
  EXPECT_TRUE(A.structure_constants() == B.structure_constants());
}

TEST(Cli, UnitsEmitsAtMostFiftyPoints) {
  auto j = altkit::Json::parse(run("units --algebra quaternions --samples 300 --format json").out);
  EXPECT_EQ(j["kind"], "sampled-cloud");
  EXPECT_LE(j["points"].size(), 50u);
  auto t = altkit::Json::parse(run("units --algebra tn --param a=0 --format json").out);
  EXPECT_EQ(t["kind"], "parallel-planes");
}

TEST(Cli, VerifyPaperFilterAndListing) {
  CliRun all = run("verify-paper");
  std::size_t claims = 0;
  for (std::size_t pos = 0; (pos = all.out.find("\n", pos)) != std::string::npos; ++pos) ++claims;
  EXPECT_GE(claims, 21u);  // >= 20 claims plus the summary line
  CliRun lie = run("verify-paper --only lie --format json");
  std::size_t lines = 0;
  std::string line;
  std::istringstream is(lie.out);
  while (std::getline(is, line)) {
    auto j = altkit::Json::parse(line);
    if (j.contains("module")) {
      EXPECT_EQ(j["module"], "lie");
    }
    ++lines;
  }
  EXPECT_GT(lines, 1u);
}

TEST(Cli, VerdictsAreRobustToLooseTolerance) {
  CliRun tight = run("verify-paper --format json");
  CliRun loose = run("verify-paper --format json --eps 1e-3");
  auto verdicts = [](const std::string& s) {
    std::vector<std::pair<std::string, bool>> v;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) {
      auto j = altkit::Json::parse(line);
      if (j.contains("id")) v.emplace_back(j["id"], j["pass"]);
    }
    return v;
  };
  EXPECT_EQ(verdicts(tight.out), verdicts(loose.out));
  EXPECT_EQ(tight.code, loose.code);
}
