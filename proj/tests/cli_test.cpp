#include "json.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  std::string out;
  int code = -1;
};

CliRun jkv(const std::string& args) {
  CliRun r;
  FILE* pipe = popen((std::string(JKV_CLI_PATH) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(JKV_DATA_DIR) + "/" + name; }

nlohmann::json parsed(const CliRun& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, JkvTorusOnTwoWeightLine) {
  const CliRun r = jkv("jkv torus --file " + data("line.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = parsed(r);
  EXPECT_EQ(j["format_version"], 1);
  EXPECT_EQ(j["decomposition"]["lambda"], nlohmann::json::array({1}));
  EXPECT_EQ(j["decomposition"]["s"], nlohmann::json::parse(R"([{"chi": [0], "coords": ["2"]}])"));
  EXPECT_EQ(j["decomposition"]["n"], nlohmann::json::parse(R"([{"chi": [1], "coords": ["3"]}])"));
}

TEST(Cli, ConjugacyVerdicts) {
  const CliRun no = jkv("conjugacy --file " + data("non_conjugate_pair.json"));
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(parsed(no)["verdict"], "not conjugate");
  const CliRun yes = jkv("conjugacy --file " + data("conjugate_pair.json"));
  EXPECT_EQ(yes.code, 0);
  EXPECT_TRUE(parsed(yes).contains("witness"));
}

TEST(Cli, VerifySuite) {
  const CliRun r = jkv("verify --suite theorem --seed 42 --count 500");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parsed(r)["instances"], 500);
  EXPECT_EQ(parsed(r)["failures"].size(), 0u);
  EXPECT_EQ(jkv("verify --suite bruhat --count 0").code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(jkv("").code, 2);
  EXPECT_EQ(jkv("verify --suite no-such-suite").code, 2);
  EXPECT_EQ(jkv("jkv cube --file " + data("line.json")).code, 2);
  EXPECT_EQ(jkv("jkv torus --file " + data("missing.json")).code, 2);
  EXPECT_EQ(jkv("jkv torus --file " + data("mixed.json")).code, 2);
  EXPECT_EQ(jkv("limit torus --file " + data("plane.json") + " --lambda 1").code, 2);
  EXPECT_EQ(jkv("limit torus --file " + data("plane.json") + " --lambda 1,x").code, 2);
  EXPECT_EQ(jkv("lambda-min --file " + data("plane.json") + " --box 0").code, 2);
  EXPECT_EQ(jkv("nilpotent gln --file " + data("mixed.json") + " --fixed 1").code, 2);
}

TEST(Cli, UnsupportedExitsThree) {
  EXPECT_EQ(jkv("jkv gln --file " + data("rotation.json")).code, 3);
  const CliRun small = jkv("lambda-min --file " + data("steep_cone.json") + " --box 8");
  EXPECT_EQ(small.code, 3);
  EXPECT_EQ(parsed(small)["box_too_small"], true);
  const CliRun enough = jkv("lambda-min --file " + data("steep_cone.json") + " --box 9");
  EXPECT_EQ(enough.code, 0);
  EXPECT_EQ(parsed(enough)["witnesses"], nlohmann::json::parse("[[2, 9]]"));
}

TEST(Cli, FalseVerdictsExitOne) {
  EXPECT_EQ(jkv("semisimple torus --file " + data("line.json")).code, 1);
  EXPECT_EQ(jkv("semisimple torus --file " + data("negation.json")).code, 0);
  EXPECT_EQ(jkv("limit torus --file " + data("line.json") + " --lambda -1").code, 1);
  EXPECT_EQ(jkv("nilpotent gln --file " + data("nilpotent.json")).code, 0);
  EXPECT_EQ(jkv("nilpotent gln --file " + data("mixed.json")).code, 1);
}

TEST(Cli, CertifyJkv) {
  EXPECT_EQ(jkv("certify-jkv torus --file " + data("line.json") + " --certificate " + data("line_certificate.json")).code, 0);
  EXPECT_EQ(jkv("certify-jkv gln --file " + data("jordan_block.json") + " --certificate " + data("jordan_block_certificate.json")).code, 0);
  EXPECT_EQ(jkv("certify-jkv gln --file " + data("mixed.json") + " --certificate " + data("jordan_block_certificate.json")).code, 2);
}

TEST(Cli, OrbitEqAndComposeMu) {
  const CliRun r = jkv("orbit-eq --file " + data("negation.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parsed(r)["witness"]["finite_index"], 1);
  const CliRun mu = jkv("compose-mu --file " + data("plane.json") + " --lambda0 1,0 --lambda 0,1");
  EXPECT_EQ(mu.code, 0);
  EXPECT_EQ(parsed(mu)["mu"], nlohmann::json::parse("[1, 1]"));
}
