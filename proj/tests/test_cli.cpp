#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "duval_cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "duval");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = duval::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(DUVAL_SOURCE_DIR) + "/tests/fixtures/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

class EnvGuard {
 public:
  explicit EnvGuard(const std::string& value) { ::setenv(duval::cli::kCatalogEnv, value.c_str(), 1); }
  ~EnvGuard() { ::unsetenv(duval::cli::kCatalogEnv); }
};

}  // namespace

TEST(CliBasket, Examples) {
  const Result r = run({"basket", "1", "2", "3", "3", "--degree", "9"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "basket: A_1 3A_2\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "sigma: -9\n"));

  const Result smooth = run({"basket", "1", "1", "1", "1"});
  EXPECT_EQ(smooth.code, 0);
  EXPECT_TRUE(contains(smooth.out, "basket: (empty)\n"));
  EXPECT_TRUE(contains(smooth.out, "sigma: -16\n"));

  const Result tsv = run({"basket", "5", "6", "8", "11", "--format", "tsv"});
  EXPECT_EQ(tsv.code, 0);
  EXPECT_EQ(tsv.out, "F_30 ⊂ P(5,6,8,11)\t5 6 8 11\t30\tA_1 A_7 A_10\t2\n");
}

TEST(CliBasket, Rejections) {
  EXPECT_EQ(run({"basket", "2", "2", "2", "3"}).code, 2);
  EXPECT_EQ(run({"basket", "1", "2", "3", "7", "--degree", "13"}).code, 2);
  EXPECT_EQ(run({"basket", "1", "2", "3"}).code, 64);
  EXPECT_EQ(run({"basket", "1", "2", "3", "0"}).code, 64);
  EXPECT_EQ(run({"basket", "1", "1", "1", "1", "--format", "json"}).code, 64);
}

TEST(CliSigma, NovikovLines) {
  const Result r = run({"sigma", "--basket", "3A_3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "tubes: -3 -3 -3\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "complement: -7\n"));
  EXPECT_TRUE(contains(r.out, "sigma: -7\n"));
  EXPECT_TRUE(contains(run({"sigma", "--q", "1"}).out, "sigma: 0\n"));
  EXPECT_EQ(run({"sigma", "--basket", "E_8 E_8 A_4"}).code, 2);
  EXPECT_EQ(run({"sigma", "--basket", "B_3"}).code, 64);
  EXPECT_EQ(run({"sigma", "--q", "3"}).code, 64);
}

TEST(CliPlumbing, TypeAndExplicitGraph) {
  const Result e8 = run({"plumbing", "--type", "E_8"});
  EXPECT_EQ(e8.code, 0) << e8.err;
  EXPECT_TRUE(contains(e8.out, "inertia: (0,8,0)\n"));
  EXPECT_TRUE(contains(e8.out, "negative definite: yes\n"));

  const Result g = run({"plumbing", "--euler", "-1,3,0", "--edges", "0-1 1-2"});
  EXPECT_EQ(g.code, 0) << g.err;
  EXPECT_TRUE(contains(g.out, "-1 1 0\n1 3 1\n0 1 0\n")) << g.out;
  EXPECT_TRUE(contains(g.out, "tree: yes\n"));

  EXPECT_EQ(run({"plumbing"}).code, 64);
  EXPECT_EQ(run({"plumbing", "--euler", "-2,-2", "--edges", "0-5"}).code, 64);
  EXPECT_EQ(run({"plumbing", "--type", "E_8", "--euler", "-2"}).code, 64);
}

TEST(CliTableVerify, EmbeddedCatalogPasses) {
  const Result r = run({"table", "verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "19/19 rows verified\n"));
  const Result tsv = run({"table", "verify", "--format", "tsv"});
  EXPECT_EQ(tsv.code, 0);
  EXPECT_TRUE(contains(tsv.out, "F_30 ⊂ P(5,6,8,11)\tPASS\n"));
}

TEST(CliTableVerify, ShippedFileAndCorruptedFixture) {
  EXPECT_EQ(run({"table", "verify", "--catalog", std::string(DUVAL_SOURCE_DIR) + "/data/k3_signatures.cat"}).code, 0);
  const Result bad = run({"table", "verify", "--catalog", fixture("corrupted.cat")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(contains(bad.out, "FAIL F_5"));
  EXPECT_TRUE(contains(bad.out, "1/2 rows verified\n"));
}

TEST(CliTableVerify, DataErrors) {
  EXPECT_EQ(run({"table", "verify", "--catalog", "/nonexistent/x.cat"}).code, 66);
  const Result m = run({"table", "verify", "--catalog", fixture("malformed.cat")});
  EXPECT_EQ(m.code, 65);
  EXPECT_TRUE(contains(m.err, "line 2")) << m.err;
  EXPECT_EQ(run({"table", "verify", "--catalog", fixture("inconsistent.cat")}).code, 65);
  EXPECT_EQ(run({"table"}).code, 64);
}

TEST(CliTableVerify, EnvironmentVariableSelectsCatalog) {
  {
    EnvGuard g(fixture("corrupted.cat"));
    EXPECT_EQ(run({"table", "verify"}).code, 1);
    // An explicit flag wins over the environment.
    EXPECT_EQ(run({"table", "verify", "--catalog", std::string(DUVAL_SOURCE_DIR) + "/data/k3_signatures.cat"}).code, 0);
  }
  EXPECT_EQ(run({"table", "verify"}).code, 0);
}

TEST(CliBsy, Examples) {
  const Result r = run({"bsy", "--q", "1", "--basket", "5A_1", "--degree", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "(-11/2)·p_*[pt_F×E] + [X]")) << r.out;
  EXPECT_TRUE(contains(r.out, "PASS\n"));
  EXPECT_TRUE(contains(r.out, "transfer p_! L_*(X) = L_*(F×E): yes\n"));

  const Result three = run({"bsy", "--q", "3", "--degree", "4"});
  EXPECT_EQ(three.code, 0);
  EXPECT_TRUE(contains(three.out, "PASS\n"));
  EXPECT_EQ(run({"bsy", "--q", "2"}).code, 0);
}

TEST(CliBsy, UsageErrors) {
  EXPECT_EQ(run({"bsy", "--q", "4"}).code, 64);
  EXPECT_EQ(run({"bsy", "--q", "0"}).code, 64);
  EXPECT_EQ(run({"bsy", "--q", "2", "--basket", "A_1"}).code, 64);
  EXPECT_EQ(run({"bsy", "--q", "1", "--fiber-q", "1", "--basket", "A_1"}).code, 64);
  EXPECT_EQ(run({"bsy", "--degree", "0"}).code, 64);
  EXPECT_EQ(run({"bsy", "--basket", "E_8 E_8 A_4"}).code, 2);
}

TEST(CliSearch, StabilizedCountAndOpenTarget) {
  const Result all = run({"search", "--stabilize", "--jobs", "4"});
  EXPECT_EQ(all.code, 0) << all.err;
  EXPECT_TRUE(contains(all.out, "# families: 95 (weights up to 60)\n")) << all.out;
  EXPECT_TRUE(contains(all.out, "# stabilization (bound:count): 40:95 50:95 60:95\n"));
  EXPECT_TRUE(contains(all.out, "# realized signatures: -16 -15 -14 -13 -11 -10 -9 -8 -7 -6 -5 -4 -3 -2 -1 0 1 2\n"));

  const Result three = run({"search", "--target", "3", "--stabilize", "--jobs", "4"});
  EXPECT_EQ(three.code, 0);
  EXPECT_TRUE(contains(three.out, "# families: 0 (weights up to 60)\n"));
  EXPECT_TRUE(contains(three.out, "it is not a proof"));

  const Result m12 = run({"search", "--target", "-12", "--max-weight", "60"});
  EXPECT_TRUE(contains(m12.out, "# families: 0 (weights up to 60)\n"));
}

TEST(CliSearch, OutputDoesNotDependOnJobs) {
  const Result a = run({"search", "--max-weight", "50", "--jobs", "1"});
  for (const char* j : {"2", "3", "8"}) EXPECT_EQ(run({"search", "--max-weight", "50", "--jobs", j}).out, a.out) << j;
  const Result t1 = run({"search", "--max-weight", "50", "--format", "tsv", "--jobs", "1"});
  EXPECT_EQ(run({"search", "--max-weight", "50", "--format", "tsv", "--jobs", "5"}).out, t1.out);
}

TEST(CliSearch, UsageErrors) {
  EXPECT_EQ(run({"search", "--max-weight", "0"}).code, 64);
  EXPECT_EQ(run({"search", "--max-weight", "401"}).code, 64);
  EXPECT_EQ(run({"search", "--jobs", "0"}).code, 64);
  EXPECT_EQ(run({"search", "--target", "x"}).code, 64);
}

TEST(Cli, TopLevelUsage) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({"--help"}).code, 0);
}
