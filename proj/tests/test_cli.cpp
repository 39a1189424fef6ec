#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "brb/brb.hpp"
#include "cli_app.hpp"

using namespace brb;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string source_path(const std::string& rel) { return std::string(BRB_SOURCE_DIR) + "/" + rel; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, DecomposeMatchesFixtureBytes) {
  const Outcome r = run_cli({"decompose", "--config", source_path("configs/ladder_poles.toml")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, read_file(source_path("tests/fixtures/ladder_decompose.json")));
}

TEST(Cli, FixtureAgreesWithRecursiveOracle) {
  const json fixture = json::parse(read_file(source_path("tests/fixtures/ladder_decompose.json")));
  const auto spec = ladder_spec(3);
  std::map<std::size_t, AlgebraElement> gens;
  for (int n = 1; n <= 3; ++n) gens.emplace(static_cast<std::size_t>(n - 1), AlgebraElement::laurent(-n));
  const UnitalLinMap phi = Character(spec, BasisKind::Laurent, gens).to_map();
  const BrbDecomposition d = brb_recursive(phi, RotaBaxterSplit::pole_part());
  ASSERT_EQ(fixture["values"].size(), spec->monomials().size());
  for (const auto& m : spec->monomials()) {
    if (m.is_unit()) continue;
    const json& v = fixture["values"].at(spec->render(m));
    EXPECT_EQ(v["plus"].get<std::string>(), to_string(d.plus(m)));
    EXPECT_EQ(v["minus"].get<std::string>(), to_string(d.minus(m)));
    EXPECT_EQ(v["input"].get<std::string>(), to_string(phi(m)));
  }
}

TEST(Cli, CheckOracleOnlyAddsVerification) {
  const std::string config = source_path("configs/ladder_poles.toml");
  json plain = json::parse(run_cli({"decompose", "--config", config}).out);
  const Outcome checked = run_cli({"decompose", "--config", config, "--check-oracle"});
  ASSERT_EQ(checked.code, 0) << checked.err;
  json with = json::parse(checked.out);
  ASSERT_TRUE(with.contains("verification"));
  EXPECT_TRUE(with["verification"]["plus_equal"].get<bool>());
  EXPECT_TRUE(with["verification"]["minus_equal"].get<bool>());
  with.erase("verification");
  EXPECT_EQ(with, plain);
}

TEST(Cli, CommandLineEqualsConfig) {
  const Outcome a = run_cli({"decompose", "--config", source_path("configs/ladder_poles.toml")});
  const Outcome b = run_cli({"decompose", "--hopf", "ladder", "--degree", "3", "--char", "l1=e^-1", "--char", "l2=e^-2",
                             "--char", "l3=e^-3"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ValueOptionAcceptsNonCharacters) {
  const Outcome r = run_cli({"decompose", "--hopf", "ladder", "--degree", "2", "--value", "l1=e^-1", "--value",
                             "l1^2=5", "--value", "l2=e^-2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["input_is_character"].get<bool>());
  // bar(l1^2) = 5 - 2 e^-1 e^-1
  EXPECT_EQ(j["values"]["l1^2"]["minus"], "2*e^-2");
  EXPECT_EQ(j["values"]["l1^2"]["plus"], "5");
}

TEST(Cli, MalformedValueExitsTwoWithColumn) {
  const Outcome r = run_cli({"decompose", "--hopf", "ladder", "--degree", "2", "--char", "l1=e^-1 +* 2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("column"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("l1"), std::string::npos) << r.err;
}

TEST(Cli, ConfigurationErrorsExitTwo) {
  EXPECT_EQ(run_cli({"decompose", "--hopf", "trees", "--degree", "2", "--char", "t1=1"}).code, 2);
  EXPECT_EQ(run_cli({"decompose", "--hopf", "ladder", "--degree", "3", "--char", "l5=e^-1"}).code, 2);
  EXPECT_EQ(run_cli({"decompose", "--hopf", "ladder", "--degree", "2", "--split", "sideways", "--char", "l1=1"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--suite", "nonsense"}).code, 2);
  EXPECT_EQ(run_cli({"decompose", "--hopf", "ladder", "--degree", "2", "--format", "xml", "--char", "l1=1"}).code, 2);
  EXPECT_EQ(run_cli({"diffeo", "--order", "3", "--coef", "7=e"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
}

TEST(Cli, TomlSyntaxErrorReportsLocation) {
  const std::string path = write_temp("brb_bad_syntax.toml", "command = \"decompose\"\n[hopf\nname = \"ladder\"\n");
  const Outcome r = run_cli({"--config", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(path + ":2:"), std::string::npos) << r.err;
}

TEST(Cli, TomlValueErrorReportsKey) {
  const std::string path = write_temp("brb_bad_value.toml",
                                      "command = \"decompose\"\n[hopf]\nname = \"ladder\"\ndegree = 2\n"
                                      "[character]\nl1 = \"e^^1\"\n");
  const Outcome r = run_cli({"--config", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(path + ":6:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("l1"), std::string::npos) << r.err;
}

TEST(Cli, VerifySingleSuite) {
  const Outcome r = run_cli({"verify", "--suite", "stuffle-axioms", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  ASSERT_EQ(j["suites"].size(), 1u);
  EXPECT_EQ(j["suites"][0]["name"], "stuffle-axioms");
  EXPECT_EQ(run_cli({"verify", "--suite", "rb-identity", "--seed", "3"}).code, 0);
}

TEST(Cli, DiffeoConfig) {
  const Outcome r = run_cli({"diffeo", "--config", source_path("configs/diffeo_simple_pole.toml"), "--check-oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["order"], 5);
  EXPECT_TRUE(j["verification"]["composed_equals_plus"].get<bool>());
  EXPECT_TRUE(j["verification"]["minus_polar"].get<bool>());
  EXPECT_TRUE(j["verification"]["plus_pole_free"].get<bool>());
  EXPECT_TRUE(j["verification"]["recursive_route_equal"].get<bool>());
}

TEST(Cli, SymbolicInverse) {
  const Outcome r = run_cli({"inverse", "--config", source_path("configs/fdb_inverse.toml")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  // inverse of x + u x^2 + v x^3 + w x^4 at x^3 is 2u^2 - v
  EXPECT_EQ(j["values"]["a1"]["inverse"], "-u");
  EXPECT_EQ(j["values"]["a2"]["inverse"], "2*u^2 - v");
}

TEST(Cli, CoproductDump) {
  const Outcome r = run_cli({"coproduct", "--hopf", "faadibruno", "--degree", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["generators"].size(), 3u);
  EXPECT_TRUE(j["generators"][0]["reduced_coproduct"].empty());
  EXPECT_EQ(j["generators"][1]["reduced_coproduct"].size(), 1u);
}

TEST(Cli, TextFormat) {
  const Outcome r = run_cli({"decompose", "--config", source_path("configs/ladder_poles.toml"), "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("l1"), std::string::npos);
  EXPECT_FALSE(json::accept(r.out));
}

TEST(Cli, BinaryIsDeterministic) {
  const std::string cmd = std::string("'") + BRB_CLI_PATH + "' decompose --config '" +
                          source_path("configs/ladder_poles.toml") + "' 2>/dev/null";
  std::string outputs[2];
  for (auto& o : outputs) {
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) o.append(buf, n);
    const int status = pclose(pipe);
    ASSERT_TRUE(WIFEXITED(status));
    EXPECT_EQ(WEXITSTATUS(status), 0);
  }
  EXPECT_EQ(outputs[0], outputs[1]);
  EXPECT_EQ(outputs[0], read_file(source_path("tests/fixtures/ladder_decompose.json")));
}
