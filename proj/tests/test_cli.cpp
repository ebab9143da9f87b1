#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(GRPI_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(GRPI_DATA_DIR) + "/" + name; }

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Codim) {
  auto r = run("codim --algebra " + data("gz2.json") + " --signature 0,2");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "\"codimension\": 1"));
  EXPECT_TRUE(has(r.out, "\"version\""));
  EXPECT_TRUE(has(r.out, "\"budget\": 10000000"));
  EXPECT_TRUE(has(r.out, "\"field\": \"rational\""));
  auto csv = run("codim --algebra " + data("m2_elementary.json") + " --max-degree 2 --format csv");
  EXPECT_EQ(csv.code, 0);
  EXPECT_TRUE(has(csv.out, "\"1,1\",2,2,0,"));
  auto p = run("codim --algebra " + data("gz2.json") + " --signature 1,1 --field p:3");
  EXPECT_TRUE(has(p.out, "\"field\": \"p:3\""));
}

TEST(Cli, Counterexample) {
  auto r = run("counterexample --max-degree 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "\"no_identities\": true"));
}

TEST(Cli, ChecksAndVerdictCodes) {
  EXPECT_EQ(run("check --algebra " + data("m2_elementary.json") + " --poly '[x1{0},x2{0}]'").code, 0);
  auto r = run("check --algebra " + data("m2_elementary.json") + " --poly '[x1{1},x2{1}]'");
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r.out, "\"counterexample\""));
  EXPECT_EQ(run("check --algebra " + data("gz2.json") + " --poly 'x1{0}*x1{0} - x1{0}'").code, 1);
  EXPECT_EQ(run("semi-check --algebra " + data("semi_example.json") + " --poly 'y1{1}'").code, 0);
  EXPECT_EQ(run("semi-check --algebra " + data("semi_example.json") + " --poly 'z1{1}'").code, 1);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("codim --nope").code, 2);
  EXPECT_EQ(run("semi-check --algebra " + data("gz2.json") + " --poly 'y1{1}'").code, 2);
  EXPECT_EQ(run("check --algebra " + data("gz2.json") + " --poly 'x1{9}'").code, 2);
  EXPECT_EQ(run("check --algebra /nonexistent.json --poly 'x1{0}'").code, 2);
  EXPECT_EQ(run("bound --d1 1 --d2 1 --elt-order 1 --group-order 2").code, 2);
  EXPECT_EQ(run("blocks --group cyclic:3 --d 2").code, 2);
}

TEST(Cli, ResourceGuard) {
  EXPECT_EQ(run("codim --algebra " + data("semi_example.json") + " --signature 2,2 --budget 5").code, 3);
}

TEST(Cli, Bound) {
  auto r = run("bound --d1 2 --d2 2 --elt-order 2 --group-order 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "\"coefficient\": \"1800\""));
  EXPECT_TRUE(has(r.out, "4892.907"));
  auto exact = run("bound --d1 1 --d2 1 --elt-order 2 --group-order 2 --exact");
  EXPECT_EQ(exact.code, 0);
  EXPECT_TRUE(has(exact.out, "\"n\": \""));
}

TEST(Cli, GoodpermsCsv) {
  auto r = run("goodperms --max-degree 5 --d 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "n,d,good_count,bound\n"));
  EXPECT_TRUE(has(r.out, "5,3,42,1024\n"));
}

TEST(Cli, OtherVerbs) {
  EXPECT_EQ(run("blocks --group symmetric:3 --seq g1,g1,g2,g3,g4,g5 --d 1").code, 0);
  auto w = run("witness --poly 'x1{0}*x2{1}' --w 'x3{1}'");
  EXPECT_EQ(w.code, 0);
  EXPECT_TRUE(has(w.out, "\"nonzero\": true"));
  auto s = run("split --algebra " + data("semi_example.json") + " --poly 'y1{1}*z2{1} + z1{1}*y2{1}'");
  EXPECT_EQ(s.code, 0);
  auto c = run("compose --algebra " + data("ut2.json") + " --mode ordinary --outer 'x1{0}*x2{0}' --poly 'x1{1}'");
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(has(c.out, "\"identity\": true"));
}

TEST(Cli, DeterministicOutput) {
  for (auto args : {std::string("blocks --group symmetric:3 --d 3 --seed 17"),
                    "codim --algebra " + data("m2_elementary.json") + " --max-degree 3",
                    std::string("counterexample --max-degree 2 --format csv")}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
  EXPECT_NE(run("blocks --group symmetric:3 --d 3 --seed 17").out, run("blocks --group symmetric:3 --d 3 --seed 18").out);
}
