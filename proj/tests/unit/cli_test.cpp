#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = tau::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
  std::string t = text;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

}  // namespace

TEST(Cli, Compute) {
  EXPECT_EQ(run({"compute", "--g", "2", "--d", "2,3"}).out, "29/5760\n");
  EXPECT_EQ(run({"compute", "--g", "1", "--d", "0,0"}).out, "0\n");
  const Result r = run({"compute", "--g", "1", "--d", "1"});
  EXPECT_EQ(r.code, tau::cli::kOk);
  EXPECT_EQ(r.out, "1/24\n");
}

TEST(Cli, ComputeKappa) {
  EXPECT_EQ(run({"compute-kappa", "--g", "1", "--n", "1", "--a", "1"}).out, "1/24\n");
  EXPECT_EQ(run({"compute-kappa", "--g", "2", "--a", "1,1,1"}).out, "43/2880\n");
  EXPECT_EQ(run({"compute-kappa", "--g", "2", "--n", "2", "--a", "1", "--d", "0"}).code, tau::cli::kUsage);
}

TEST(Cli, VerifySweep) {
  const Result r = run({"--no-timing", "verify", "eq4", "--gmax", "3", "--nmax", "3"});
  EXPECT_EQ(r.code, tau::cli::kOk);
  const std::string tail = last_line(r.out);
  const auto reports = nlohmann::json::parse(r.out.substr(0, r.out.size() - tail.size() - 1));
  ASSERT_TRUE(reports.is_array());
  EXPECT_EQ(tail, "PASS " + std::to_string(reports.size()) + "/" + std::to_string(reports.size()));
  for (const auto& rep : reports) EXPECT_EQ(rep["ms"], 0.0);
}

TEST(Cli, VerifyOutputIndependentOfJobs) {
  const Result one = run({"--no-timing", "--jobs", "1", "verify", "c35", "--gmax", "3"});
  const Result four = run({"--no-timing", "--jobs", "4", "verify", "c35", "--gmax", "3"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
}

TEST(Cli, OtherVerifyIds) {
  for (const char* id : {"decomp", "n1sums", "c41", "c42", "c43", "ds", "c51", "c52", "c53", "c54", "c32a", "eq7"}) {
    const Result r = run({"--no-timing", "verify", id, "--gmax", "3", "--nmax", "2"});
    EXPECT_EQ(r.code, 0) << id << '\n' << r.err;
  }
}

TEST(Cli, DenomAndNpoint) {
  EXPECT_EQ(run({"denom", "--g", "2"}).out, "5760 = 2^7 · 3^2 · 5\n");
  EXPECT_EQ(run({"denom", "--g", "1", "--n", "1", "--json"}).out, R"({"factors":[[2,3],[3,1]],"g":1,"n":1,"value":"24"})"
                                                                   "\n");
  const Result np = run({"npoint", "--n", "2", "--gmax", "1"});
  EXPECT_EQ(np.code, 0);
  EXPECT_EQ(np.out, "1,1 -> 1/12\n");
}

TEST(Cli, MonotoneTwoPointStreamsProgress) {
  const Result r = run({"--no-timing", "monotone", "--n", "2", "--gmax", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "PASS 5/5");
  EXPECT_NE(r.err.find("g=5"), std::string::npos);
  EXPECT_EQ(run({"monotone", "--lambda", "lambda_g", "--n", "3", "--gmax", "4"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, tau::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, tau::cli::kUsage);
  EXPECT_EQ(run({"compute", "--g", "2"}).code, tau::cli::kUsage);
  EXPECT_EQ(run({"compute", "--g", "2", "--d", "2,x"}).code, tau::cli::kUsage);
  EXPECT_EQ(run({"verify", "eq9"}).code, tau::cli::kUsage);
  EXPECT_EQ(run({"cache"}).code, tau::cli::kUsage);
}

TEST(Cli, CacheExportImportAndWarmRun) {
  const auto dir = std::filesystem::temp_directory_path() / "tau_cli_test";
  std::filesystem::create_directories(dir);
  const std::string cache = (dir / "warm.cache").string();
  const std::string exported = (dir / "export.cache").string();
  std::filesystem::remove(cache);

  const Result cold = run({"--no-timing", "--cache", cache, "verify", "eq5", "--gmax", "4", "--nmax", "3"});
  ASSERT_TRUE(std::filesystem::exists(cache));
  const Result warm = run({"--no-timing", "--cache", cache, "verify", "eq5", "--gmax", "4", "--nmax", "3"});
  EXPECT_EQ(cold.out, warm.out);

  EXPECT_EQ(run({"--cache", cache, "cache", "--export", exported}).code, 0);
  std::ifstream a(cache);
  std::ifstream b(exported);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());

  const std::string fresh = (dir / "fresh.cache").string();
  std::filesystem::remove(fresh);
  const Result imported = run({"--cache", fresh, "--verify-cache", "cache", "--import", exported});
  EXPECT_EQ(imported.code, 0) << imported.err;

  {
    std::ofstream bad(dir / "bad.cache");
    bad << "TAUCACHE v1\n1|1|1/25\n";
  }
  EXPECT_EQ(run({"--verify-cache", "cache", "--import", (dir / "bad.cache").string()}).code, tau::cli::kUsage);
  std::filesystem::remove_all(dir);
}
