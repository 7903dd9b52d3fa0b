#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "growth/pipeline.hpp"
#include "growth/serialize.hpp"
#include "growth_cli/cli.hpp"
#include "growth_cli/fixtures.hpp"

using namespace growth;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_copy_of_fixtures(const std::string& name) {
  const auto dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& e : fs::directory_iterator(cli::default_fixture_dir())) fs::copy(e.path(), dir / e.path().filename());
  return dir;
}

}  // namespace

TEST(Cli, ParseIds) {
  EXPECT_EQ(cli::parse_ids("1,3"), std::vector<int>({1, 3}));
  EXPECT_EQ(cli::parse_ids("1 3"), std::vector<int>({1, 3}));
  EXPECT_TRUE(cli::parse_ids("").empty());
  EXPECT_EQ(cli::parse_ids("{2}"), std::vector<int>({2}));
  EXPECT_THROW(cli::parse_ids("1,x"), std::invalid_argument);
  EXPECT_EQ(cli::to_subset({1, 3}, 3), 0b101u);
  EXPECT_THROW(cli::to_subset({4}, 3), std::invalid_argument);
  EXPECT_THROW(cli::to_subset({0}, 3), std::invalid_argument);
}

TEST(Cli, FqSingleSubset) {
  const auto r = run({"fq", "--type", "A2", "--Q", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t^6/(1 - t^6)\n");
}

TEST(Cli, FqAllSubsetsJson) {
  const auto r = run({"fq", "--type", "B3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.at("f").size(), 7u);
  for (const auto& e : doc.at("f"))
    if (e.at("Q") == nlohmann::json::array()) {
      EXPECT_EQ(e.at("display"), "t^22*(1 + t^14)/((1 - t^8)*(1 - t^10)*(1 - t^18))");
      EXPECT_EQ(e.at("points").size(), 2u);
    }
}

TEST(Cli, SeriesJsonSchemaAndRoundTrip) {
  const auto r = run({"series", "--type", "A2", "--J", "", "--K", "", "--expand", "0", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("type"), "A2");
  EXPECT_EQ(doc.at("J"), nlohmann::json::array());
  EXPECT_EQ(doc.at("K"), nlohmann::json::array());
  ASSERT_EQ(doc.at("expansion").size(), 1u);
  EXPECT_EQ(doc.at("expansion")[0], 1);
  const RatFun parsed = ratfun_from_json(doc.at("series"));
  EXPECT_EQ(parsed, AffineSeries(RootSystem::from_label("A2")).growth_series());
  EXPECT_EQ(to_json(parsed), doc.at("series"));
}

TEST(Cli, SeriesVariants) {
  auto p = run({"series", "--type", "A2", "--J", "1", "--K", "1", "--Q", "1", "--format", "json"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(nlohmann::json::parse(p.out).at("Q"), nlohmann::json::array({1}));
  auto n = run({"series", "--type", "A2", "--J", "1", "--normalizer"});
  EXPECT_EQ(n.code, 0);
  EXPECT_EQ(n.out, "(1 + t + t^6 + t^7)/(1 - t^6)\n");
  auto latex = run({"series", "--type", "A2", "--J", "1,2", "--K", "1,2", "--format", "latex"});
  EXPECT_EQ(latex.code, 0);
  EXPECT_EQ(latex.out.rfind("\\frac{", 0), 0u);
  EXPECT_EQ(run({"series", "--type", "A2", "--K", "1", "--Q", "2"}).code, 2);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"matrix", "--type", "G2", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"fq"}).code, 2);
  EXPECT_EQ(run({"fq", "--type", "H3"}).code, 2);
  EXPECT_EQ(run({"fq", "--type", "A2", "--Q", "3"}).code, 2);
  EXPECT_EQ(run({"fq", "--type", "A2", "--Q", "1,2"}).code, 2);
  EXPECT_EQ(run({"fq", "--type", "A2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"finite", "--type", "E7"}).code, 2);  // past the group-order cap
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("selftest"), std::string::npos);
}

TEST(Cli, Cartan) {
  const auto r = run({"cartan", "G2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("det"), 1);
  EXPECT_EQ(doc.at("positive_roots"), 6);
  EXPECT_EQ(doc.at("cone_generators"), nlohmann::json::parse("[[2,1],[3,2]]"));
  EXPECT_NE(run({"cartan", "B3"}).out.find("det: 2"), std::string::npos);
}

TEST(Cli, Finite) {
  EXPECT_EQ(run({"finite", "--type", "A2"}).out, "1 + 2*t + 2*t^2 + t^3\n");
  EXPECT_EQ(run({"finite", "--type", "B3", "--subset", "1,2"}).out, "1 + 2*t + 2*t^2 + t^3\n");
  const auto pm = run({"finite", "--type", "A2", "--what", "pmatrix", "--K", "1", "--format", "json"});
  ASSERT_EQ(pm.code, 0);
  EXPECT_EQ(nlohmann::json::parse(pm.out).at("entries")[1][2], nlohmann::json::parse(R"(["0","0","1"])"));
  EXPECT_EQ(run({"finite", "--type", "A2", "--what", "hmatrix", "--J", "1"}).code, 0);
  EXPECT_EQ(run({"finite", "--type", "G2", "--what", "check"}).code, 0);
}

TEST(Cli, OracleVerifyCheck) {
  const auto o = run({"oracle", "--type", "A2", "--J", "1", "--K", "1", "--max-length", "6", "--format", "json"});
  ASSERT_EQ(o.code, 0);
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc.at("by_Q").size(), 2u);
  EXPECT_EQ(doc.at("total").size(), 7u);
  EXPECT_EQ(run({"verify", "--type", "G2", "--max-length", "15"}).code, 0);
  EXPECT_EQ(run({"check", "--type", "A1", "--degree", "10", "--cross-check"}).code, 0);
}

TEST(Cli, CacheDirectoryFromEnvironment) {
  const auto dir = fs::temp_directory_path() / "growth_cli_cache";
  fs::remove_all(dir);
  ::setenv("GROWTH_CACHE_DIR", dir.c_str(), 1);
  EXPECT_EQ(run({"matrix", "--type", "A2"}).code, 0);
  ::unsetenv("GROWTH_CACHE_DIR");
  EXPECT_TRUE(fs::exists(dir / "M_S-A2.json"));
  fs::remove_all(dir);
}

TEST(Selftest, BundledFixturesPass) {
  const auto r = run({"selftest", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("passed"), true);
  EXPECT_GT(doc.at("checks").size(), 100u);
}

TEST(Selftest, FixtureCarriesKnownMSEntry) {
  std::ifstream in(cli::default_fixture_dir() / "A2.json");
  const auto doc = nlohmann::json::parse(in);
  // row {1}, column {2}: t^4 (1 - t^2) / ((1 - t^2)(1 - t^6))
  const RatFun entry = ratfun_from_json(doc.at("matrix_M_affine")[1][2].at("series"));
  EXPECT_EQ(entry, RatFun(IntPoly::t_power(4), IntPoly::one_minus_t_power(6)));
}

TEST(Selftest, CorruptedFixtureIsNamed) {
  const auto dir = scratch_copy_of_fixtures("growth_fixtures_corrupt");
  {
    std::ifstream in(dir / "B3.json");
    auto doc = nlohmann::json::parse(in);
    doc["f"][0]["series"]["num"][22] = "2";
    std::ofstream(dir / "B3.json") << doc.dump(1);
  }
  const auto r = run({"selftest", "--fixtures", dir.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL  B3/f Q={}"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("FAIL  A2"), std::string::npos);

  std::ofstream(dir / "G2.json") << "{ not json";
  const auto broken = run({"selftest", "--fixtures", dir.string()});
  EXPECT_EQ(broken.code, 1);
  EXPECT_NE(broken.out.find("FAIL  G2"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Selftest, EmptyDirectoryFails) {
  const auto dir = fs::temp_directory_path() / "growth_fixtures_empty";
  fs::create_directories(dir);
  EXPECT_EQ(run({"selftest", "--fixtures", dir.string()}).code, 1);
  fs::remove_all(dir);
}
