#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(EMAX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("emax_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST(Cli, TableCsvRow) {
  const CliRun r = run("bounds table --surface nonorientable --gmin 10 --gmax 10 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "g,surface,schedule,impurity,edge_bound_offset\n10,N10,10;9;8;8;8;8;7;7;7,699,675\n");
  const CliRun o = run("bounds table --surface orientable --gmin 10 --gmax 10 --format csv");
  ASSERT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("10,S5,"), std::string::npos);
  EXPECT_NE(o.out.find(",559,535"), std::string::npos);
}

TEST(Cli, TableIsDeterministic) {
  const CliRun a = run("bounds table --surface nonorientable --gmax 20 --format json");
  const CliRun b = run("bounds table --surface nonorientable --gmax 20 --format json");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out).size(), 20u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("construct prop2 --genus 3 --orientable").code, 2);
  EXPECT_EQ(run("bounds f --g 3 --s 0").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("analyze /nonexistent/file.json").code, 2);
  const fs::path bad = temp_file("bad.json", "{\"n\": 2, \"edges\": [[0, 1, 1]");
  EXPECT_EQ(run("analyze " + bad.string()).code, 2);
  fs::remove(bad);
}

TEST(Cli, ConstructAnalyzeRoundTrip) {
  const CliRun c = run("construct prop2 --genus 2");
  ASSERT_EQ(c.code, 0);
  const fs::path p = temp_file("prop2.json", c.out);
  const CliRun a = run("analyze " + p.string() + " --format json");
  ASSERT_EQ(a.code, 0);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["genus"], 2);
  EXPECT_EQ(j["orientable"], false);
  EXPECT_EQ(j["maximal"], true);
  EXPECT_EQ(j["edges_short"], 6);
  const CliRun piped = run("pipeline " + p.string() + " --mode nonorientable --format json");
  EXPECT_EQ(piped.code, 0);
  EXPECT_FALSE(nlohmann::json::parse(piped.out)["apexes"].empty());
  const CliRun t = run("triangulate " + p.string());
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(nlohmann::json::parse(t.out)["edges_added"], 6);
  fs::remove(p);
}

TEST(Cli, FixtureAnalysis) {
  const CliRun a = run("analyze " + std::string(EMAX_DATA_DIR) + "/k8c5_torus.json");
  ASSERT_EQ(a.code, 0);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["genus"], 2);
  EXPECT_EQ(j["orientable"], true);
  EXPECT_EQ(j["edges_short"], 1);
}

TEST(Cli, OrderedSequence) {
  const CliRun c = run("construct kmn --m 3 --n 4");
  ASSERT_EQ(c.code, 0);
  const fs::path p = temp_file("k34.txt", c.out);
  const auto one = nlohmann::json::parse(run("ordered-seq " + p.string() + " --s 1 --g 1").out);
  EXPECT_EQ(one["found"], true);
  const CliRun two = run("ordered-seq " + p.string() + " --s 2 --g 1");
  EXPECT_EQ(two.code, 0);
  EXPECT_EQ(nlohmann::json::parse(two.out)["found"], false);
  fs::remove(p);
}

TEST(Cli, VerifyAndClaim1) {
  EXPECT_EQ(run("bounds verify --theorem 84 --gmax 50").code, 0);
  EXPECT_EQ(run("bounds claim1 --g 2 --gmax 20").code, 0);
  const auto j = nlohmann::json::parse(run("bounds analytic --g 10").out);
  EXPECT_TRUE(j.contains("k"));
}
