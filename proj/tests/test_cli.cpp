#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hertz/cli.hpp"
#include "hertz/rewrite.hpp"
#include "oracles.hpp"

using namespace hertz;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HERTZ_TEST_DATA) + "/" + name; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string w; in >> w;) v.push_back(w);
  return v;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("omega and olap") {
  const Result r = run({"omega", "53412", "563421"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "x^4 + x^2\n");
  CHECK(run({"olap", "321", "321"}).out == "4321 54321\n");
  CHECK(run({"olap", "2341", "321"}).out == "456321\n");
}

TEST_CASE("avoid reproduces the Hertzsprung sequence") {
  const Result r = run({"avoid", "-p", "12", "-p", "21", "-N", "9"});
  CHECK(r.code == cli::kExitOk);
  CHECK(words(r.out) ==
        std::vector<std::string>{"1", "1", "0", "0", "2", "14", "90", "646", "5242", "47622"});
  CHECK(run({"avoid", "-p", "12", "-p", "21", "-N", "8", "--check", "8"}).code == cli::kExitOk);
}

TEST_CASE("default order from the environment") {
  ::setenv("HERTZ_DEFAULT_N", "4", 1);
  CHECK(words(run({"avoid", "-p", "12", "-p", "21"}).out) ==
        std::vector<std::string>{"1", "1", "0", "0", "2"});
  ::setenv("HERTZ_DEFAULT_N", "abc", 1);
  CHECK(run({"avoid", "-p", "12"}).code == cli::kExitUsage);
  ::unsetenv("HERTZ_DEFAULT_N");
  CHECK(words(run({"avoid", "-p", "12", "-p", "21"}).out).size() == 21);
}

TEST_CASE("rewrite check on EQ2") {
  const Result r = run({"rewrite", "check", "--eq", "EQ2"});
  CHECK(r.code == cli::kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() >= 2);
  CHECK(ls[0] == "confluent");
  CHECK(contains(ls[1], "terminating-up-to-8"));
}

TEST_CASE("rewrite check reports a non-confluent witness") {
  const std::string path = "cli_not_confluent.rules";
  std::ofstream(path) << "321 -> 123\n";
  const Result r = run({"rewrite", "check", "--rules", path, "--statistic", "sigma:123",
                        "--expect-confluent"});
  CHECK(r.code == cli::kExitMismatch);
  CHECK(lines(r.out).front() == "not-confluent");
  CHECK(contains(r.out, "counterexample: 2341 <- 4321 -> 4123"));
  CHECK(run({"rewrite", "check", "--rules", path, "--statistic", "sigma:123"}).code ==
        cli::kExitOk);
  std::remove(path.c_str());
}

TEST_CASE("rule files") {
  const Result ok = run({"rewrite", "check", "--rules", data("eq1.rules"), "--statistic",
                         "sigma:12"});
  CHECK(ok.code == cli::kExitOk);
  CHECK(contains(ok.out, "olap: 321 3421"));
  const Result bad = run({"rewrite", "check", "--rules", data("bad.rules")});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(contains(bad.err, "line 3, column 3"));
  CHECK(run({"rewrite", "check", "--rules", data("missing.rules")}).code == cli::kExitUsage);
  CHECK(run({"rewrite", "check", "--rules", data("eq1.rules"), "--eq", "EQ1"}).code ==
        cli::kExitUsage);
}

TEST_CASE("normal forms and classes") {
  const Result nf = run({"rewrite", "nf", "--eq", "EQ1", "321", "4321"});
  CHECK(nf.code == cli::kExitOk);
  CHECK(contains(nf.out, "321 -> 312"));
  const Result c = run({"rewrite", "classes", "--eq", "EQ5", "-N", "6", "--check", "6"});
  CHECK(c.code == cli::kExitOk);
  CHECK(lines(c.out).front() == "1 1 2 4 16 84 536");
}

TEST_CASE("table2 equals the tabulated class counts") {
  std::ifstream in(data("table2.txt"));
  REQUIRE(in);
  std::vector<std::vector<std::string>> expected;
  for (std::string l; std::getline(in, l);)
    if (!l.empty() && l[0] != '#') expected.push_back(words(l));
  REQUIRE(expected.size() == 20);
  const Result r = run({"table2", "-N", "20"});
  CHECK(r.code == cli::kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 21);
  CHECK(words(ls[0]) ==
        std::vector<std::string>{"n", "EQ2", "EQ3", "EQ4", "EQ5", "EQ6", "EQ7"});
  for (int n = 1; n <= 20; ++n) CHECK(words(ls[n]) == expected[n - 1]);
}

TEST_CASE("oeis comparison") {
  const Result a = run({"oeis-compare", "--bfile", data("b002464.txt"), "-p", "12", "-p", "21"});
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == "match: 10 terms, n=0..9\n");
  const Result b = run({"oeis-compare", "--bfile", data("b212433.txt"), "--eq", "EQ6"});
  CHECK(b.code == cli::kExitOk);
  CHECK(b.out == "match: 20 terms, n=1..20\n");
  const Result c = run({"oeis-compare", "--bfile", data("b212433.txt"), "--eq", "EQ5"});
  CHECK(c.code == cli::kExitMismatch);
  CHECK(contains(c.out, "MISMATCH at n=3"));
}

TEST_CASE("conjecture subcommands") {
  const Result w = run({"conj", "wilf", "--kmax", "7"});
  CHECK(w.code == cli::kExitOk);
  CHECK(contains(w.out, "k=7 a=7 b(k+1)=7 equal"));
  CHECK(run({"conj", "mesh-p", "--nmax", "6"}).code == cli::kExitOk);
  CHECK(run({"conj", "bona", "-k", "3", "--nmax", "10"}).code == cli::kExitOk);
  CHECK(run({"conj", "palindrome", "--kmax", "10"}).code == cli::kExitOk);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"avoid", "-p", "1223", "-N", "3"}).code == cli::kExitUsage);
  CHECK(run({"avoid", "-p", "12", "-p", "123", "-N", "3"}).code == cli::kExitOk);
  CHECK(run({"dist", "-p", "123", "-N", "4", "--check", "6"}).code == cli::kExitUsage);
  CHECK(run({"omega", "12"}).code == cli::kExitUsage);
  const Result e = run({"avoid", "-p", "12x", "-N", "3"});
  CHECK(e.code == cli::kExitUsage);
  CHECK(contains(e.err, "column 3"));
}

TEST_CASE("json output shape") {
  const Result r = run({"--json", "avoid", "-p", "12", "-p", "21", "-N", "5"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["series"]["variable"] == "x");
  CHECK(j["series"]["order"] == 5);
  CHECK(j["series"]["coefficients"] == nlohmann::json::array({1, 1, 0, 0, 2, 14}));
  const auto big = nlohmann::json::parse(
      run({"--json", "avoid", "-p", "12", "-N", "25"}).out);
  CHECK(big["series"]["coefficients"][25].is_string());
  const auto chk = nlohmann::json::parse(run({"--json", "rewrite", "check", "--eq", "EQ2"}).out);
  CHECK(chk["confluence"]["verdict"] == "confluent");
  CHECK(chk["termination"]["verified_up_to"] == 8);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::vector<std::string>> invocations = {
      {"cluster-gf", "-p", "321", "-p", "2341", "--digraph"},
      {"dist", "-p", "123", "-p", "132", "-N", "7"},
      {"--json", "rewrite", "check", "--eq", "EQ7"},
      {"end-in", "-p", "123", "--alpha", "123", "-N", "8"},
      {"rewrite", "classes", "--eq", "EQ3", "-N", "10"}};
  for (const auto& args : invocations) {
    const Result a = run(args);
    const Result b = run(args);
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("printed permutations and rules re-parse") {
  for (const auto& tok : words(run({"olap", "321", "321"}).out))
    CHECK(Permutation::parse(tok).str() == tok);
  const Result r = run({"--json", "rewrite", "check", "--eq", "EQ7"});
  const auto j = nlohmann::json::parse(r.out);
  std::string text;
  for (const auto& rule : j["rules"]) text += rule.get<std::string>() + "\n";
  const RewriteSystem sys = RewriteSystem::parse(text);
  CHECK(sys.str() == builtin_system("EQ7").str());
  for (const auto& p : j["olap"]) CHECK(Permutation::parse(p.get<std::string>()).str() == p);
}
