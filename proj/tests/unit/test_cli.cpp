#include <gtest/gtest.h>

#include <json.hpp>

#include "cli.hpp"
#include "climate_stress/app.hpp"
#include "test_support.hpp"

using namespace climate_stress;
namespace t = climate_stress::testing;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "stress");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> input_args(const t::InputFiles& f) {
  return {"--portfolio", f.portfolio.string(), "--hazards", f.hazards.string(),
          "--fragility", f.fragility.string(), "--geounits", f.geounits.string()};
}

std::vector<std::string> run_args(const t::InputFiles& f, const fs::path& out,
                                  std::vector<std::string> extra) {
  std::vector<std::string> args{"run"};
  for (auto& a : input_args(f)) args.push_back(a);
  args.push_back("--out");
  args.push_back(out.string());
  for (auto& a : extra) args.push_back(a);
  return args;
}

}  // namespace

TEST(Cli, IdentityScenarioReportsBaselineLosses) {
  auto dir = t::scratch_dir("cli_identity");
  auto out = dir / "report.json";
  auto r = invoke(run_args(t::fixture_files(), out,
                           {"--scenario", t::data_path("scenarios/identity.json").string()}));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("scenario identity: total_el="), std::string::npos);

  auto doc = nlohmann::json::parse(t::read_file(out));
  auto linked = t::load_linked(t::fixture_files());
  double baseline = 0.0;
  for (const auto& x : linked.portfolio.instruments) baseline += x.pd0 * x.lgd0 * x.ead;
  EXPECT_TRUE(t::rel_close(doc[0]["total_el"].get<double>(), baseline, 1e-11));
  EXPECT_FALSE(fs::exists(dir / "report.json.tmp"));
}

TEST(Cli, UnknownGeoExitsTwoWithoutOutput) {
  auto dir = t::scratch_dir("cli_unknown_geo");
  t::write_file(dir / "portfolio.csv",
                "id,geo_id,sector,ead,pd0,lgd0,value,adaptation\n"
                "A,g01,ag,1,0.1,0.4,1,0\nB,g99,ag,1,0.1,0.4,1,0\n");
  auto files = t::fixture_files();
  files.portfolio = dir / "portfolio.csv";
  auto out = dir / "report.json";
  auto r = invoke(run_args(files, out, {"--builtin", "all"}));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnresolvedGeo"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("portfolio.csv:3"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(out));
  EXPECT_FALSE(fs::exists(dir / "report.json.tmp"));
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  auto dir = t::scratch_dir("cli_determinism");
  for (const char* fmt : {"json", "csv"}) {
    auto a = dir / (std::string("a.") + fmt);
    auto b = dir / (std::string("b.") + fmt);
    ASSERT_EQ(invoke(run_args(t::fixture_files(), a, {"--builtin", "all", "--format", fmt})).code, 0);
    ASSERT_EQ(invoke(run_args(t::fixture_files(), b, {"--builtin", "all", "--format", fmt})).code, 0);
    EXPECT_EQ(t::read_file(a), t::read_file(b)) << fmt;
  }
}

TEST(Cli, ScenarioFilesThenBuiltinsInOrder) {
  auto dir = t::scratch_dir("cli_order");
  auto out = dir / "r.json";
  auto r = invoke(run_args(t::fixture_files(), out,
                           {"--scenario", t::data_path("scenarios/identity.json").string(),
                            "--builtin", "compound", "--builtin", "orderly", "--top-k", "3"}));
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(t::read_file(out));
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_EQ(doc[0]["scenario_id"], "identity");
  EXPECT_EQ(doc[1]["scenario_id"], "compound");
  EXPECT_EQ(doc[2]["scenario_id"], "orderly");
  EXPECT_EQ(doc[1]["exposure"]["top_contributors"].size(), 3u);
}

TEST(Cli, InputErrorsExitTwo) {
  auto dir = t::scratch_dir("cli_errors");
  auto out = dir / "r.json";
  // Duplicate scenario id.
  EXPECT_EQ(invoke(run_args(t::fixture_files(), out, {"--builtin", "all", "--builtin", "physical"})).code, 2);
  // No scenario at all.
  EXPECT_EQ(invoke(run_args(t::fixture_files(), out, {})).code, 2);
  // Unknown builtin selector.
  EXPECT_EQ(invoke(run_args(t::fixture_files(), out, {"--builtin", "mild"})).code, 2);
  // Bad scenario file names the file.
  t::write_file(dir / "bad.json", R"({"id":"x","kind":"physical_shock","lambda":-1})");
  auto r = invoke(run_args(t::fixture_files(), out, {"--scenario", (dir / "bad.json").string()}));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bad.json: NegativeParameter"), std::string::npos) << r.err;
  // Missing file.
  auto files = t::fixture_files();
  files.hazards = dir / "nope.csv";
  EXPECT_EQ(invoke(run_args(files, out, {"--builtin", "all"})).code, 2);
  // Usage errors.
  EXPECT_EQ(invoke({"run", "--portfolio", "x"}).code, 2);
  EXPECT_EQ(invoke(run_args(t::fixture_files(), out, {"--builtin", "all", "--format", "xml"})).code, 2);
  EXPECT_EQ(invoke(run_args(t::fixture_files(), out, {"--builtin", "all", "--top-k", "0"})).code, 2);
  EXPECT_FALSE(fs::exists(out));
}

TEST(Cli, MalformedHazardRowNamesFileAndLine) {
  auto dir = t::scratch_dir("cli_bad_hazard");
  t::write_file(dir / "hazards.csv", "geo_id,hazard,intensity\ng01,wildfire,0.8\ng01,smog,0.1\n");
  auto files = t::fixture_files();
  files.hazards = dir / "hazards.csv";
  auto r = invoke(run_args(files, dir / "r.json", {"--builtin", "all"}));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("hazards.csv:3: UnknownHazardToken"), std::string::npos) << r.err;
}

TEST(Cli, ScenariosPrintEmitsBuiltins) {
  auto r = invoke({"scenarios", "print"});
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 4u);
  auto builtins = builtin_scenarios();
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(parse_scenario(doc[i].dump()), builtins[i]);
  }
}

TEST(Cli, Validate) {
  std::vector<std::string> args{"validate"};
  for (auto& a : input_args(t::fixture_files())) args.push_back(a);
  auto ok = invoke(args);
  EXPECT_EQ(ok.code, 0) << ok.err;

  auto portfolio_only = invoke({"validate", "--portfolio", t::data_path("fixture/portfolio.csv").string()});
  EXPECT_EQ(portfolio_only.code, 0);

  auto dir = t::scratch_dir("cli_validate");
  t::write_file(dir / "p.csv", "id,geo_id,sector,ead,pd0,lgd0,value,adaptation\nA,g01,ag,1,1.5,0.4,1,0\n");
  auto bad = invoke({"validate", "--portfolio", (dir / "p.csv").string()});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("p.csv:2: InvariantViolation"), std::string::npos) << bad.err;
  EXPECT_NE(bad.err.find("pd0 ∈ [0,1]"), std::string::npos) << bad.err;
}
