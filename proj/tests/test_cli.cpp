#include <gtest/gtest.h>

#include "tcalab/cli.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>

using namespace tcalab;

namespace {

struct Invocation {
  int code;
  std::string out, err;
  json body() const { return json::parse(out); }
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "tcalab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string shell(const std::string& cmd) {
  std::string s;
  std::array<char, 4096> buf{};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return s;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) s.append(buf.data(), n);
  pclose(p);
  return s;
}

}  // namespace

TEST(Cli, Charpoly) {
  const Invocation r = run({"charpoly", "2,1"});
  ASSERT_EQ(r.code, 0);
  const json b = r.body();
  EXPECT_EQ(b["schema"], "tcalab.charpoly/1");
  EXPECT_EQ(b["text"], char_poly_simple({2, 1}).poly.str());
  EXPECT_EQ(b["text"], "1/3*a1^3 - 2*a1^2 + 8/3*a1 - a3");
  EXPECT_EQ(run({"charpoly", "1"}).body()["text"], "a1 - 1");
  EXPECT_EQ(run({"--format", "table", "charpoly", "1"}).out, "a1 - 1\n");
  EXPECT_EQ(run({"charpoly", "1", "--format", "table"}).out, "a1 - 1\n");
}

TEST(Cli, DepthAndModify) {
  const Invocation d = run({"depth", "3", "5"});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(d.body()["depth"], 1);
  const Invocation m = run({"modify", "1", "1"});
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(m.body()["result"], "zero");
  EXPECT_EQ(run({"--format", "table", "modify", "2", "2"}).out, "-(1,1)\n");
}

TEST(Cli, LocalCohomologyAndBgg) {
  const json b = run({"localcoh", "2,1", "2"}).body();
  EXPECT_EQ(b["depth"], 2);
  EXPECT_EQ(run({"--format", "table", "bgg", "2,1"}).out, "I^0: Q(2,1)\nI^1: Q(2) Q(1,1)\nI^2: Q(1)\n");
  EXPECT_EQ(run({"--format", "table", "localcoh", "2", "2"}).out, "H^2: (1) (1,1)\ndepth 2\n");
}

TEST(Cli, KTheory) {
  EXPECT_EQ(run({"--format", "table", "ktheory", "conv", "Q[1]"}).out, run({"--format", "table", "ktheory", "conv", "Q[1]", "--to", "L"}).out);
  EXPECT_EQ(run({"ktheory", "pair", "Q[2]", "Q[1]"}).body()["result"], 1);
  EXPECT_EQ(run({"ktheory", "pair", "Q[1]", "Q[2]"}).body()["result"], 0);
  const Invocation bad = run({"ktheory", "mult", "L[1]", "Q[1]"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(json::parse(bad.err)["error"], "BasisMismatch");
}

TEST(Cli, HilbertFourierEfwPoincare) {
  EXPECT_EQ(run({"hilbert", "P[2,1]-S[1]"}).code, 0);
  const Invocation f = run({"fourier", "P[2]"});
  ASSERT_EQ(f.code, 0);
  EXPECT_TRUE(f.body()["hilbert_check"].get<bool>());
  const json e = run({"efw", "1", "1"}).body();
  EXPECT_EQ(e["regularity"], 2);
  EXPECT_EQ(e["depth"], 0);
  const json p = run({"poincare", "", "2", "--trunc", "6"}).body();
  EXPECT_TRUE(p["closed_form_matches"].get<bool>());
}

TEST(Cli, Quiver) {
  EXPECT_EQ(run({"quiver", "hom", "Q[2]", "Q[1]"}).body()["dimension"], 1);
  EXPECT_EQ(run({"quiver", "hom", "Q[1]", "Q[2]"}).body()["dimension"], 0);
  EXPECT_EQ(run({"quiver", "hom", "Q[1]", "Q[1]+L[]"}).body()["dimension"], 2);
  EXPECT_EQ(run({"--format", "table", "quiver", "socle", "Q[2,1]+Q[3]"}).out, "(2,1): 1\n(3): 1\n");
  const Invocation v = run({"quiver", "verify-bgg", "2,1"});
  ASSERT_EQ(v.code, 0);
  EXPECT_TRUE(v.body()["resolution"].get<bool>());
}

TEST(Cli, InputErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"charpoly", "1,2"},
                                                                {"depth", "3", "2"},
                                                                {"bogus"},
                                                                {},
                                                                {"modify", "1", "x"},
                                                                {"selftest", "--size", "20"},
                                                                {"hilbert", "X[1]"}}) {
    const Invocation r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NO_THROW(json::parse(r.err));
  }
  EXPECT_EQ(json::parse(run({"depth", "3", "2"}).err)["error"], "InvalidD");
}

TEST(Cli, InvariantViolationsExitThree) {
  EXPECT_EQ(cli::exit_code_for(Errc::InvariantViolation), 3);
  EXPECT_EQ(cli::exit_code_for(Errc::NotAComplex), 3);
  EXPECT_EQ(cli::exit_code_for(Errc::InvalidInput), 2);
}

TEST(Cli, Selftest) {
  const Invocation r = run({"selftest", "--size", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(r.body()["ok"].get<bool>());
}

TEST(Cli, OutputIsByteStable) {
  const std::vector<std::string> cmds[] = {{"localcoh", "3,1", "4"}, {"poincare", "1", "2", "--trunc", "8"}, {"bgg", "3,2,1"}};
  for (const auto& c : cmds) EXPECT_EQ(run(c).out, run(c).out);
  const std::string bin = TCALAB_CLI_PATH;
  const std::string a = shell(bin + " localcoh 3,1 4"), b = shell(bin + " localcoh 3,1 4");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, run({"localcoh", "3,1", "4"}).out);
}

TEST(Cli, TruncationFromEnvironment) {
  ::setenv("TCALAB_TRUNC", "4", 1);
  const json p = run({"poincare", "", "2"}).body();
  const Invocation bad = [] {
    ::setenv("TCALAB_TRUNC", "-1", 1);
    return run({"poincare", "", "2"});
  }();
  ::unsetenv("TCALAB_TRUNC");
  EXPECT_EQ(p["series"], to_json(poincare_truncated(efw_resolution({}, 2, 4), 4)));
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(cli::default_truncation(), 12);
}

TEST(Cli, HelpGoesToStdout) {
  const Invocation r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("charpoly"), std::string::npos);
}
