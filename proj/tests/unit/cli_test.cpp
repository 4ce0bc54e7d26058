#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"

namespace lagcert::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "lagcert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("lagcert_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

const std::string kPhi = "x^2-x+17";

TEST(Construct, GoldenText) {
  const CliRun r = run({"construct", "-m", "2", "-u", "1", "-v", "1", "--am", "3", "--a", "1", "--a0", "-4", "--phi", kPhi});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_EQ(r.out,
            "m = 2\nu = 1\nv = 1\na_m = 3\na_1 = 1\na_0 = -4\nphi = x^2 - x + 17\n"
            "alpha = 1/1\n"
            "b_0..b_m = 6/1 6/1 3/1\n"
            "f(x) = 3x^4 - 6x^3 + 111x^2 - 108x + 945\n"
            "L(x) = f(x)/2 = (3/2)x^4 - 3x^3 + (111/2)x^2 - 54x + 945/2\n"
            "hypothesis violated: content-constant: 2 divides content(a_0)\n"
            "hypothesis violated: content-leading: 3 divides a_m\n");
}

TEST(Construct, ValidInstanceAndJson) {
  const CliRun r = run({"construct", "-m", "3", "-u", "2", "--phi", kPhi, "--json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["hypotheses_ok"], true);
  EXPECT_EQ(j["b"], nlohmann::json({"60/1", "60/1", "15/1", "1/1"}));
  EXPECT_EQ(run({"construct", "-m", "3", "-u", "2", "--phi", kPhi}).out,
            run({"construct", "-m", "3", "-u", "2", "--phi", kPhi}).out);
}

TEST(Construct, UsageErrors) {
  EXPECT_EQ(run({"construct", "-m", "2", "-u", "1"}).code, kExitInvalid);
  const CliRun neg = run({"construct", "-m", "2", "-u", "-1", "-v", "1", "--phi", kPhi});
  EXPECT_EQ(neg.code, kExitInvalid);
  EXPECT_TRUE(neg.out.empty());
  EXPECT_NE(neg.err.find("negative integer"), std::string::npos);
  EXPECT_EQ(run({"construct", "-m", "3", "--a", "1", "1", "1", "--phi", kPhi}).code, kExitInvalid);
  EXPECT_EQ(run({"construct", "-m", "two", "--phi", kPhi}).code, kExitInvalid);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInvalid);
  EXPECT_EQ(run({}).code, kExitInvalid);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Polygon, GoldenAndErrors) {
  const CliRun r = run({"polygon", "--f", "x^2+8x+12", "--phi", "x", "-p", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "vertices: (0,0) (2,2)\nedge (0,0) -> (2,2) slope 1/1\n");
  const CliRun j = run({"polygon", "--f", "x^2+8x+12", "--phi", "x", "-p", "2", "--json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["slopes"], nlohmann::json({"1/1"}));
  EXPECT_EQ(run({"polygon", "--f", "x^2+8x+12", "--phi", "x", "-p", "6"}).code, kExitInvalid);
  const CliRun div = run({"polygon", "--f", "x^3+1", "--phi", kPhi, "-p", "3"});
  EXPECT_EQ(div.code, kExitOk);
  const CliRun phi_div = run({"polygon", "--f", "x^4-2x^3+35x^2-34x+289", "--phi", kPhi, "-p", "3"});
  EXPECT_EQ(phi_div.code, kExitInvalid);
  EXPECT_NE(phi_div.err.find("divisible by phi"), std::string::npos);
}

TEST(Certify, WritesAndVerifiesCertificate) {
  TempDir dir;
  const CliRun r = run({"certify", "-m", "5", "-u", "2", "--phi", kPhi, "--cert-dir", dir.path().string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("k=2 p=7 slope 1/5 < 1/2 (product)"), std::string::npos);
  const fs::path file = dir.path() / "certificate_m5_u2_v1.json";
  ASSERT_TRUE(fs::exists(file));
  EXPECT_EQ(run({"certify", "--verify", file.string()}).code, kExitOk);

  std::ifstream in(file);
  auto j = nlohmann::json::parse(in);
  j["witnesses"][1]["p"] = 11;
  const fs::path tampered = dir.path() / "tampered.json";
  std::ofstream(tampered) << j.dump();
  EXPECT_EQ(run({"certify", "--verify", tampered.string()}).code, kExitUncovered);
  const fs::path malformed = dir.path() / "malformed.json";
  std::ofstream(malformed) << "{\"m\": ";
  EXPECT_EQ(run({"certify", "--verify", malformed.string()}).code, kExitInvalid);
  EXPECT_EQ(run({"certify", "--verify", (dir.path() / "missing.json").string()}).code, kExitInvalid);
}

TEST(Certify, UncoveredWritesNothing) {
  TempDir dir;
  const CliRun r = run({"certify", "-m", "2", "-u", "2", "--phi", kPhi, "--cert-dir", dir.path().string()});
  EXPECT_EQ(r.code, kExitUncovered);
  EXPECT_NE(r.out.find("k=1 uncovered"), std::string::npos);
  EXPECT_TRUE(fs::is_empty(dir.path()));
  EXPECT_EQ(run({"certify", "-m", "3", "-u", "1", "--am", "2", "--phi", kPhi}).code, kExitInvalid);
}

TEST(Certify, EnvironmentDirectory) {
  TempDir flag_dir, env_dir;
  ::setenv("LAGUERRE_CERT_HOME", env_dir.path().c_str(), 1);
  EXPECT_EQ(certificate_directory(""), env_dir.path().string());
  EXPECT_EQ(certificate_directory(flag_dir.path().string()), flag_dir.path().string());
  EXPECT_EQ(run({"certify", "-m", "3", "-u", "0", "--phi", kPhi}).code, kExitOk);
  EXPECT_TRUE(fs::exists(env_dir.path() / "certificate_m3_u0_v1.json"));
  ::unsetenv("LAGUERRE_CERT_HOME");
  EXPECT_EQ(certificate_directory(""), ".");
}

TEST(Oracle, Verdicts) {
  EXPECT_EQ(run({"oracle", "--f", kPhi}).code, kExitOk);
  const CliRun red = run({"oracle", "-m", "2", "-u", "2", "--a", "1", "--a0", "1", "--phi", kPhi});
  EXPECT_EQ(red.code, kExitReducible);
  EXPECT_NE(red.out.find("(x^2 - x + 23) * (x^2 - x + 19)"), std::string::npos);
  const CliRun low = run({"oracle", "--f", kPhi, "--budget", "0", "--json"});
  EXPECT_EQ(low.code, kExitUncovered);
  EXPECT_EQ(nlohmann::json::parse(low.out)["low_confidence"], true);
  EXPECT_EQ(run({"oracle", "--f", "4x^2-4"}).code, kExitReducible);
  EXPECT_EQ(run({"oracle", "--f", "7"}).code, kExitInvalid);
  EXPECT_EQ(run({"oracle"}).code, kExitInvalid);
}

TEST(Tables, SelectedSections) {
  const CliRun r = run({"tables", "--only", "s3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("PASS st-sets/S3", 0), 0u);
  EXPECT_EQ(run({"tables", "--only", "primes"}).code, kExitUncovered);
  EXPECT_EQ(run({"tables", "--only", "nonsense"}).code, kExitInvalid);
  EXPECT_EQ(run({"tables", "--st-bound", "0"}).code, kExitInvalid);
  const CliRun j = run({"tables", "--only", "exp", "--json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["failures"], 0);
}

TEST(WitnessSearch, FoundAndNotFound) {
  const CliRun hit = run({"witness-search", "-m", "2", "-u", "2", "--phi", kPhi, "--bound", "1"});
  EXPECT_EQ(hit.code, kExitReducible);
  EXPECT_NE(hit.out.find("a_1 = 1"), std::string::npos);
  EXPECT_EQ(run({"witness-search", "-m", "3", "-u", "1", "--phi", kPhi, "--bound", "1"}).code, kExitOk);
  EXPECT_EQ(run({"witness-search", "-m", "5", "-u", "-2", "--phi", kPhi}).code, kExitInvalid);
}

}  // namespace
}  // namespace lagcert::cli
