#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "netshare/cli.hpp"
#include "netshare/json_io.hpp"
#include "netshare/report.hpp"
#include "support.hpp"

using namespace netshare;
using netshare::testing::fixtures;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string use_case() { return fixtures() + "/paper_use_case.json"; }

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("netshare_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Report, CsvHeaderAndSingleRow) {
  Scenario s;
  s.name = "one";
  s.areas.push_back({AreaProfile::reference(AreaKind::Urban), netshare::testing::Gen(61).table()});
  s.configurations.push_back(preset("GWCN").with_name("GWCN, renamed"));
  const auto csv = lines(emit_report(run_scenario(s), Format::Csv));
  ASSERT_EQ(csv.size(), 2u);
  EXPECT_EQ(csv[0], "area,configuration,capex_saving_pct,opex_saving_pct,total_saving_pct,horizon_years");
  const auto f = fields(csv[1]);
  ASSERT_EQ(f.size(), 6u);
  EXPECT_EQ(f[1], "GWCN, renamed");
  EXPECT_EQ(f[5], "5");
}

TEST(Report, JsonRoundTripIsExact) {
  const auto result = run_scenario(load_scenario_file(use_case()));
  const auto doc = json_io::parse(emit_report(result, Format::Json), ErrorCode::MalformedDocument);
  EXPECT_EQ(doc["schema_version"], 1);
  ASSERT_EQ(doc["cells"].size(), result.grid.size());
  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    const auto& cell = doc["cells"][i];
    EXPECT_EQ(cell["total_saving_pct"].get<double>(), result.grid[i].report.total_saving_pct);
    EXPECT_EQ(cell["capex_saving_pct"].get<double>(), result.grid[i].report.capex_saving_pct);
    EXPECT_EQ(cell["opex_saving_pct"].get<double>(), result.grid[i].report.opex_saving_pct);
  }
  const auto* urban = result.find(AreaKind::Urban, "GWCN + Backhaul");
  ASSERT_NE(urban, nullptr);
  EXPECT_EQ(doc["cells"][4]["configuration"], "GWCN + Backhaul");
  EXPECT_EQ(doc["cells"][4]["total_saving_pct"].get<double>(), urban->report.total_saving_pct);
}

TEST(Report, CsvRoundTripAtStoredPrecision) {
  const auto result = run_scenario(load_scenario_file(use_case()));
  const auto csv = lines(emit_report(result, Format::Csv));
  ASSERT_EQ(csv.size(), result.grid.size() + 1);
  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    const auto f = fields(csv[i + 1]);
    EXPECT_NEAR(std::stod(f[2]), result.grid[i].report.capex_saving_pct, 5e-5);
    EXPECT_NEAR(std::stod(f[3]), result.grid[i].report.opex_saving_pct, 5e-5);
    EXPECT_NEAR(std::stod(f[4]), result.grid[i].report.total_saving_pct, 5e-5);
  }
}

TEST(Report, TableUsesTwoDecimals) {
  auto result = run_scenario(load_scenario_file(use_case()));
  const auto text = emit_report(result, Format::Table, EmitOptions{false});
  EXPECT_NE(text.find("27.12"), std::string::npos);
  EXPECT_EQ(text.find("generated:"), std::string::npos);
}

TEST(Report, SweepCsvSortedByValue) {
  Scenario s = load_scenario_file(use_case());
  s.sweep = SweepSpec{SweepParameter::SplitRatio, std::nullopt, 0.2, 0.8, 7};
  auto points = sweep(s);
  std::reverse(points.begin(), points.end());  // emission must not depend on input order
  const auto csv = lines(emit_report(points, SweepParameter::SplitRatio, Format::Csv));
  ASSERT_EQ(csv.size(), 1 + 7 * 18u);
  EXPECT_EQ(csv[0], "sweep_parameter,sweep_value," + std::string(kCsvHeader));
  std::vector<double> values;
  for (std::size_t i = 1; i < csv.size(); ++i) values.push_back(std::stod(fields(csv[i])[1]));
  std::vector<double> sorted = values;
  std::stable_sort(sorted.begin(), sorted.end());
  EXPECT_EQ(values, sorted);
}

TEST(Report, AdvisorHasNoCsv) {
  EXPECT_THROW(emit_report(recommend(AreaKind::Rural, Technology::G3), Format::Csv), Error);
}

TEST(Report, UnwritableTarget) {
  std::ostringstream sink;
  try {
    write_document("x", "/nonexistent-dir/for/sure/out.csv", sink);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoFailure);
  }
}

TEST(Cli, RunCsvHasEighteenRows) {
  const auto r = call({"run", use_case(), "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto csv = lines(r.out);
  ASSERT_EQ(csv.size(), 19u);
  EXPECT_EQ(csv[0], kCsvHeader);
}

TEST(Cli, RelativeScenarioFallsBackToFixtures) {
  const auto r = call({"run", "paper_use_case.json", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 19u);
}

TEST(Cli, DeterministicWithoutProvenance) {
  for (const std::string format : {"csv", "json"}) {
    const auto a = call({"run", use_case(), "--format", format, "--no-provenance"});
    const auto b = call({"run", use_case(), "--format", format, "--no-provenance"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
  EXPECT_EQ(call({"run", use_case(), "--format", "json", "--no-provenance"}).out.find("timestamp"), std::string::npos);
  EXPECT_NE(call({"run", use_case(), "--format", "json"}).out.find("timestamp"), std::string::npos);
}

TEST(Cli, OutFile) {
  const auto dir = temp_dir("out");
  const auto file = (dir / "grid.json").string();
  const auto r = call({"run", use_case(), "--format", "json", "--out", file});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(json_io::parse(ss.str(), ErrorCode::MalformedDocument)["cells"].size(), 18u);

  const auto bad = call({"run", use_case(), "--out", "/nonexistent-dir/for/sure/x.csv"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("IoFailure"), std::string::npos);
}

TEST(Cli, Sweep) {
  const auto r = call({"sweep", "split_ratio_sweep.json", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 1 + 5 * 2u);
  const auto none = call({"sweep", use_case()});
  EXPECT_EQ(none.code, 1);
  EXPECT_NE(none.err.find("paper_use_case"), std::string::npos);
}

TEST(Cli, Presets) {
  const auto r = call({"presets"});
  EXPECT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 9u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(l[i].substr(0, l[i].find(':')), table3_preset_names()[i]);
  const auto j = json_io::parse(call({"presets", "--format", "json"}).out, ErrorCode::MalformedDocument);
  EXPECT_EQ(j.size(), 9u);
}

TEST(Cli, Recommend) {
  const auto r = call({"recommend", "--area", "rural", "--tech", "3g"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("StronglyRecommended"), std::string::npos);
  const auto j = json_io::parse(call({"recommend", "--area", "urban", "--tech", "2g", "--format", "json"}).out,
                                ErrorCode::MalformedDocument);
  EXPECT_EQ(j["verdict"], "NotRecommended");
  EXPECT_EQ(call({"recommend", "--area", "mars", "--tech", "3g"}).code, 2);
}

TEST(Cli, CompareLteAndChecklist) {
  auto r = call({"compare-lte", "--inter-rat", "--cs-fallback", "--roaming", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json_io::parse(r.out, ErrorCode::MalformedDocument)["preferred"], "MOCN");
  EXPECT_EQ(call({"compare-lte", "--cost-weight", "2"}).code, 2);

  r = call({"checklist", "--state", "existing", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto doc = json_io::parse(r.out, ErrorCode::MalformedDocument);
  doc["items"][1]["answered"] = true;
  const auto dir = temp_dir("checklist");
  const auto answers = (dir / "answers.json").string();
  json_io::write_file(answers, doc.dump());
  r = call({"checklist", "--state", "existing", "--answers", answers});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("[x]"), std::string::npos);
  EXPECT_EQ(call({"checklist", "--state", "new", "--answers", answers}).code, 1);
}

TEST(Cli, ValidateAndStrict) {
  auto r = call({"validate", use_case()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("valid"), std::string::npos);
  EXPECT_NE(r.err.find("NonContiguousLadder"), std::string::npos);
  EXPECT_EQ(call({"--strict", "validate", use_case()}).code, 1);
  EXPECT_EQ(call({"--strict", "run", use_case()}).code, 1);

  const auto dir = temp_dir("invalid");
  const auto bad = (dir / "bad.json").string();
  json_io::write_file(bad, R"({"name":"bad","areas":["urban"],"cost_tables":{"urban":")" + fixtures() +
                               R"(/reference_costs_urban.json"},"configurations":[{"name":"core","shared":{"core_sgsn":true}}]})");
  r = call({"validate", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("GwcnWithoutRan"), std::string::npos);
  EXPECT_NE(r.err.find("core"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"run", use_case(), "--bogus"}).code, 2);
  EXPECT_EQ(call({"run", use_case(), "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"run"}).code, 2);
  EXPECT_EQ(call({"presets", "run"}).code, 2);
}

TEST(Cli, DomainErrors) {
  auto r = call({"run", "no_such_scenario.json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("no_such_scenario.json"), std::string::npos);
  r = call({"run", use_case(), "--carrier-unit-factor", "0"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, HelpForEverySubcommand) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
      {"run", {"--format", "--out", "--no-provenance", "--no-site-coupling", "--carrier-unit-factor"}},
      {"sweep", {"--format", "--out", "--no-provenance"}},
      {"validate", {"scenario"}},
      {"presets", {"--format"}},
      {"recommend", {"--area", "--tech", "--format"}},
      {"compare-lte", {"--inter-rat", "--cs-fallback", "--ims-voice", "--roaming", "--cost-weight"}},
      {"checklist", {"--state", "--answers"}},
      {"calibrate", {"targets", "--out"}},
  };
  for (const auto& [cmd, flags] : commands) {
    const auto r = call({cmd, "--help"});
    EXPECT_EQ(r.code, 0) << cmd;
    for (const auto& f : flags) EXPECT_NE(r.out.find(f), std::string::npos) << cmd << " " << f;
  }
  const auto top = call({"--help"});
  EXPECT_EQ(top.code, 0);
  EXPECT_NE(top.out.find("--strict"), std::string::npos);
  EXPECT_NE(top.out.find("--verbose"), std::string::npos);
}

TEST(Cli, FixtureEnvOverride) {
  const auto dir = temp_dir("env");
  for (const char* f : {"paper_use_case.json", "reference_costs_urban.json", "reference_costs_suburban.json",
                        "reference_costs_rural.json"})
    std::filesystem::copy_file(fixtures() + "/" + f, dir / f);
  ::setenv("NETSHARE_FIXTURES", dir.c_str(), 1);
  EXPECT_EQ(fixture_dir(), dir);
  const auto r = call({"run", "paper_use_case.json", "--format", "csv"});
  ::unsetenv("NETSHARE_FIXTURES");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 19u);
}

TEST(Cli, CalibrateReproducesFixtures) {
  const auto dir = temp_dir("calibrate");
  const auto r = call({"calibrate", fixtures() + "/calibration_targets.json", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  for (auto a : kAllAreas) {
    const std::string name = "reference_costs_" + std::string(to_string(a)) + ".json";
    const auto fresh = json_io::read_file(dir / name, ErrorCode::MalformedDocument);
    const auto committed = json_io::read_file(fixtures() + "/" + name, ErrorCode::MalformedDocument);
    EXPECT_EQ(fresh, committed) << name;
  }
}

TEST(Cli, CalibrateInfeasible) {
  const auto dir = temp_dir("infeasible");
  const auto targets = (dir / "targets.json").string();
  json_io::write_file(targets, R"({"iterations":500,"restarts":1,"targets":[
    {"area":"urban","kind":"point","ledger":"total","configuration":"MOCN","value":49.0,"tolerance_pp":0.5}]})");
  const auto r = call({"calibrate", targets, "--out", dir.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("InfeasibleCalibration"), std::string::npos);
}
