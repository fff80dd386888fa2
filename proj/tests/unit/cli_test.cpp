#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zdx/bounds/catalog.hpp"
#include "zdx/bounds/serialize.hpp"
#include "zdx/cli/commands.hpp"
#include "zdx/cli/config.hpp"

using namespace zdx;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result zdx_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty() && l[0] != '#') lines.push_back(l);
  return lines;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Density, Zd2ThresholdRow) {
  const Result r = zdx_run({"density", "--sigma", "23/29", "--strategy", "zd2"});
  EXPECT_EQ(r.code, 0);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "sigma, zd2, zd2_verdict, best");
  EXPECT_EQ(lines[1].rfind("23/29, 9/23, pass", 0), 0u);
}

TEST(Density, HalfIsOutOfRange) {
  const Result r = zdx_run({"density", "--sigma", "1/2", "--strategy", "zd2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1/2, out of range, n/a"), std::string::npos);
}

TEST(Density, Zd1GridAllPass) {
  const Result r = zdx_run({"density", "--grid", "127/168:107/138:1/168", "--strategy", "zd1"});
  EXPECT_EQ(r.code, 0);
  const auto lines = data_lines(r.out);
  ASSERT_GT(lines.size(), 3u);
  EXPECT_EQ(lines[1].rfind("127/168, ", 0), 0u);
  for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_NE(lines[i].find(", pass"), std::string::npos) << lines[i];
}

TEST(Density, CompareAddsColumns) {
  const Result r = zdx_run({"density", "--sigma", "4/5", "--compare"});
  EXPECT_EQ(r.code, 0);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_NE(lines[0].find("ivic, jutila2"), std::string::npos);
  EXPECT_NE(lines[0].find("jutila8, best"), std::string::npos);
  EXPECT_NE(lines[1].find("3/8, pass"), std::string::npos);
}

TEST(Density, JsonKeepsExactStrings) {
  const Result r = zdx_run({"--format", "json", "density", "--sigma", "4/5", "--strategy", "zd2"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["tool"], "zdx");
  EXPECT_EQ(doc["verdict"], "pass");
  EXPECT_EQ(doc["rows"][0]["sigma"], "4/5");
  EXPECT_EQ(doc["rows"][0]["replays"][0]["target"], "3/8");
}

TEST(Density, UsageErrorsExitTwo) {
  EXPECT_EQ(zdx_run({"density", "--sigma", "0.8"}).code, 2);
  EXPECT_EQ(zdx_run({"density", "--sigma", "4/0"}).code, 2);
  EXPECT_EQ(zdx_run({"density", "--grid", "1/2:3/4"}).code, 2);
  EXPECT_EQ(zdx_run({"density", "--sigma", "4/5", "--grid", "1/2:3/4:1/8"}).code, 2);
  EXPECT_EQ(zdx_run({"density", "--sigma", "4/5", "--strategy", "zd3"}).code, 2);
  EXPECT_EQ(zdx_run({"nonsense"}).code, 2);
  EXPECT_EQ(zdx_run({}).code, 2);
}

TEST(Catalog, TextListsSixBounds) {
  const Result r = zdx_run({"catalog"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# 6 large-value bounds"), std::string::npos);
  for (const char* id : {"\nbourgain\n", "\ncompletion\n", "\nhuxley\n", "\nmain1 (k >= 2)\n", "\nmain12\n", "\nmain4\n"})
    EXPECT_NE(r.out.find(id), std::string::npos) << id;
  EXPECT_NE(r.out.find("(k + 4/3)*nu"), std::string::npos);
}

TEST(Catalog, JsonRoundTrips) {
  const Result r = zdx_run({"catalog", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto parsed = catalog_from_json(r.out);
  ASSERT_EQ(parsed.size(), catalog().size());
  EXPECT_EQ(catalog_to_json(parsed), catalog_to_json(catalog()));
}

TEST(Lab, VerifyExactSeedOne) {
  const Result r = zdx_run({"lab", "verify", "--suite", "exact", "--seed", "1"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("# seed: 1"), std::string::npos);
  EXPECT_NE(r.out.find("# verdict: pass"), std::string::npos);
}

TEST(Lab, LargeValuesRow) {
  const Result r = zdx_run({"lab", "largevalues", "--n", "64", "--v-exp", "4/5", "--t", "4096"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].rfind("N, T, V, count, count_exponent, bourgain_exponent", 0), 0u);
  EXPECT_EQ(lines[1].rfind("64, 4096, ", 0), 0u);
  EXPECT_NE(r.out.find("# nu = 1/2, sigma = 4/5"), std::string::npos);
}

TEST(Lab, LargeValuesWritesGrid) {
  const auto path = (std::filesystem::temp_directory_path() / "zdx_cli_grid.csv").string();
  ASSERT_EQ(zdx_run({"lab", "largevalues", "--n", "16", "--v-exp", "3/4", "--t", "64", "--grid-csv", path}).code, 0);
  std::ifstream in(path);
  std::string head;
  std::getline(in, head);
  EXPECT_EQ(head, "t,abs_value");
}

TEST(Lab, WindowViolationsExitTwo) {
  EXPECT_EQ(zdx_run({"lab", "largevalues", "--n", "100000", "--v-exp", "4/5", "--t", "4096"}).code, 2);
  EXPECT_EQ(zdx_run({"lab", "largevalues", "--n", "64", "--v-exp", "4/5", "--t", "1e7"}).code, 2);
  EXPECT_EQ(zdx_run({"lab", "largevalues", "--n", "64", "--v-exp", "1/3", "--t", "4096"}).code, 2);
  EXPECT_EQ(zdx_run({"lab", "verify", "--suite", "fast"}).code, 2);
  EXPECT_EQ(zdx_run({"lab"}).code, 2);
}

TEST(Lab, VerifyFailureExitsOne) {
  // a slack budget this small makes the harness ratios fail
  const auto cfg = temp_file("zdx_cli_tight.json", R"({"tolerances": {"harness": 1e-9}})");
  EXPECT_EQ(zdx_run({"--config", cfg, "lab", "verify", "--suite", "asymptotic"}).code, 1);
}

TEST(Determinism, VerifyAllTwice) {
  const Result a = zdx_run({"lab", "verify", "--suite", "all", "--seed", "0"});
  const Result b = zdx_run({"lab", "verify", "--suite", "all", "--seed", "0"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Determinism, LargeValuesJsonTwice) {
  const std::vector<std::string> args{"--format", "json", "--seed", "5", "lab", "largevalues", "--n", "128", "--v-exp", "3/4", "--t", "2048"};
  const Result a = zdx_run(args), b = zdx_run(args);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["seed"], 5);
  EXPECT_EQ(doc["predictions"].size(), 6u);
}

TEST(Config, UnknownKeyRejected) {
  EXPECT_THROW(cli::parse_config(R"({"sead": 3})", "test"), cli::UsageError);
  EXPECT_THROW(cli::parse_config(R"({"tolerances": {"other": 1}})", "test"), cli::UsageError);
  const auto cfg = temp_file("zdx_cli_bad.json", R"({"sead": 3})");
  const Result r = zdx_run({"--config", cfg, "catalog"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("sead"), std::string::npos);
}

TEST(Config, SeedPrecedence) {
  const auto cfg = temp_file("zdx_cli_seed.json", R"({"seed": 7, "format": "csv"})");
  ::setenv("ZDX_SEED", "42", 1);
  EXPECT_NE(zdx_run({"catalog"}).out.find("# seed: 42\n"), std::string::npos);
  EXPECT_NE(zdx_run({"--config", cfg, "catalog"}).out.find("# seed: 7\n"), std::string::npos);
  EXPECT_NE(zdx_run({"--config", cfg, "--seed", "9", "catalog"}).out.find("# seed: 9\n"), std::string::npos);
  ::setenv("ZDX_SEED", "not-a-seed", 1);
  EXPECT_EQ(zdx_run({"catalog"}).code, 2);
  ::unsetenv("ZDX_SEED");
  EXPECT_NE(zdx_run({"catalog"}).out.find("# seed: 0\n"), std::string::npos);
}

TEST(Output, EmbedsVersionAndCommand) {
  const Result r = zdx_run({"--seed", "3", "density", "--sigma", "9/10", "--strategy", "zd2"});
  EXPECT_EQ(r.out.rfind("# zdx " + cli::version() + "\n# command: --seed 3 density --sigma 9/10 --strategy zd2\n# seed: 3\n", 0), 0u);
  EXPECT_NE(r.out.find("9/10, 1/6, pass"), std::string::npos);
}
