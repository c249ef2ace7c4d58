#include "netshare/cli.hpp"

#include <filesystem>
#include <sstream>

#include "CLI11.hpp"

#include "netshare/advisor.hpp"
#include "netshare/calibration.hpp"
#include "netshare/json_io.hpp"
#include "netshare/report.hpp"
#include "netshare/scenario.hpp"

namespace netshare::cli {

namespace {

namespace fs = std::filesystem;

struct Globals {
  bool verbose = false;
  bool strict = false;
};

struct ScenarioArgs {
  std::string path;
  std::string format = "table";
  std::string out;
  bool no_provenance = false;
  bool no_site_coupling = false;
  double carrier_unit_factor = 1.0;
};

const std::map<std::string, Format> kScenarioFormats = {{"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
const std::map<std::string, Format> kAdvisorFormats = {{"table", Format::Table}, {"json", Format::Json}};

fs::path resolve(const std::string& path) {
  fs::path p(path);
  if (fs::exists(p) || p.is_absolute()) return p;
  fs::path bundled = fixture_dir() / p;
  return fs::exists(bundled) ? bundled : p;
}

void print_findings(const std::string& config, const ValidationReport& report, std::ostream& err) {
  for (const auto& f : report.errors) err << "error: " << config << ": " << to_string(f.code) << ": " << f.message << "\n";
  for (const auto& f : report.warnings)
    err << "warning: " << config << ": " << to_string(f.code) << ": " << f.message << "\n";
}

/// Warnings of every configuration; a non-empty result fails the run under --strict.
std::size_t collect_warnings(const Scenario& s, std::ostream& err) {
  std::size_t count = 0;
  for (const auto& cfg : s.configurations) {
    ValidationReport report = validate_configuration(cfg, {}, s.policy);
    report.errors.clear();
    print_findings(cfg.name(), report, err);
    count += report.warnings.size();
  }
  return count;
}

Scenario load(const ScenarioArgs& a, const Globals& g, std::ostream& err) {
  const fs::path path = resolve(a.path);
  Scenario s = load_scenario_file(path);
  if (a.no_site_coupling) s.rules.share_site_coupled = false;
  s.rules.carrier_unit_factor = a.carrier_unit_factor;
  if (g.verbose)
    err << "loaded " << path.string() << ": " << s.areas.size() << " areas, " << s.configurations.size()
        << " configurations, horizon " << s.horizon_years << " years\n";
  return s;
}

void add_scenario_options(CLI::App* cmd, ScenarioArgs& a, bool with_output) {
  cmd->add_option("scenario", a.path, "Scenario JSON file (relative names also resolve against the fixture directory)")
      ->required();
  if (!with_output) return;
  cmd->add_option("--format", a.format, "Output format")
      ->transform(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", a.out, "Write the report to this file instead of stdout");
  cmd->add_flag("--no-provenance", a.no_provenance, "Omit timestamps so output is byte-stable");
  cmd->add_flag("--no-site-coupling", a.no_site_coupling, "Do not share site rent and power with passive sites");
  cmd->add_option("--carrier-unit-factor", a.carrier_unit_factor, "NodeB CAPEX multiplier when spectrum is shared")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
}

RepartitionConstraintSet constraints_named(const std::string& name) {
  if (name == "use_case") {
    return default_constraints(Market::Emerging, ConstraintLedger::UseCaseCapex)
        .merged(default_constraints(Market::Emerging, ConstraintLedger::UseCaseOpex));
  }
  throw Error(ErrorCode::MalformedDocument, "calibration targets: unknown constraint set '" + name + "'");
}

int calibrate_command(const std::string& targets_path, const std::string& out_dir, std::ostream& out,
                      std::ostream& err, const Globals& g) {
  const fs::path path = resolve(targets_path);
  const json_io::Json doc = json_io::read_file(path, ErrorCode::MalformedDocument);
  json_io::require_known_keys(doc,
                              {"constraints", "seed", "iterations", "restarts", "horizon_years", "capex_scale",
                               "currency", "targets"},
                              path.string(), ErrorCode::MalformedDocument);
  CalibrationOptions options;
  const std::string label = doc.value("constraints", std::string("use_case"));
  options.seed = doc.value("seed", options.seed);
  options.iterations = doc.value("iterations", options.iterations);
  options.restarts = doc.value("restarts", options.restarts);
  options.horizon_years = doc.value("horizon_years", options.horizon_years);
  options.capex_scale = doc.value("capex_scale", options.capex_scale);
  options.currency = doc.value("currency", options.currency);
  if (!doc.contains("targets") || !doc["targets"].is_array())
    throw Error(ErrorCode::MalformedDocument, path.string() + ": 'targets' must be an array");
  std::vector<CalibrationTarget> targets;
  for (const auto& t : doc["targets"]) targets.push_back(json_io::calibration_target_from_json(t));

  const CalibrationResult result = calibrate_reference(constraints_named(label), targets, options);
  fs::create_directories(out_dir);
  for (const auto& area : result.areas) {
    const fs::path file = fs::path(out_dir) / ("reference_costs_" + std::string(to_string(area.table.area())) + ".json");
    json_io::write_file(file, json_io::to_json(area, result, label).dump(2) + "\n");
    if (g.verbose) err << "wrote " << file.string() << "\n";
    out << to_string(area.table.area()) << " (capex share " << area.capex_share << ")\n";
    for (const auto& r : area.residuals) {
      out << "  " << (r.target.label.empty() ? std::string(to_string(r.target.kind)) : r.target.label)
          << ": achieved " << r.achieved;
      if (r.target.kind == TargetKind::Band) out << " .. " << r.achieved_max;
      out << ", residual " << r.residual << " pp\n";
    }
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Infrastructure-sharing cost model for mobile networks", "netshare"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Globals g;
  app.add_flag("-v,--verbose", g.verbose, "Print progress diagnostics to stderr");
  app.add_flag("--strict", g.strict, "Treat validation warnings as errors");

  ScenarioArgs run_args, sweep_args, validate_args;
  auto* run = app.add_subcommand("run", "Evaluate every area x configuration cell of a scenario");
  add_scenario_options(run, run_args, true);
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate the scenario across its sweep grid");
  add_scenario_options(sweep_cmd, sweep_args, true);
  auto* validate = app.add_subcommand("validate", "Check a scenario without evaluating it");
  add_scenario_options(validate, validate_args, false);

  std::string presets_format = "table";
  auto* presets_cmd = app.add_subcommand("presets", "List the named sharing configurations");
  presets_cmd->add_option("--format", presets_format, "Output format")
      ->transform(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  std::string rec_area, rec_tech;
  std::string rec_format = "table";
  auto* recommend_cmd = app.add_subcommand("recommend", "Sharing recommendation for an area and technology");
  recommend_cmd
      ->add_option("--area", rec_area, "urban, suburban or rural")
      ->required()
      ->transform(CLI::IsMember({"urban", "suburban", "rural"}, CLI::ignore_case));
  recommend_cmd->add_option("--tech", rec_tech, "2g or 3g")
      ->required()
      ->transform(CLI::IsMember({"2g", "3g"}, CLI::ignore_case));
  recommend_cmd->add_option("--format", rec_format, "Output format")
      ->transform(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  LteContext lte;
  std::string lte_format = "table";
  auto* lte_cmd = app.add_subcommand("compare-lte", "Compare LTE MOCN and GWCN for an operator context");
  lte_cmd->add_flag("--inter-rat", lte.needs_inter_rat_mobility, "Inter-RAT mobility with legacy networks is required");
  lte_cmd->add_flag("--cs-fallback", lte.needs_cs_fallback, "Voice relies on CS fallback");
  lte_cmd->add_flag("--ims-voice", lte.voice_via_ims, "Voice is delivered over IMS");
  lte_cmd->add_flag("--roaming", lte.needs_roaming, "Roaming agreements must be supported");
  lte_cmd->add_option("--cost-weight", lte.cost_priority_weight, "Weight of the cost criterion")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  lte_cmd->add_option("--format", lte_format, "Output format")
      ->transform(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  std::string state_label;
  std::string answers_path;
  std::string checklist_format = "table";
  auto* checklist_cmd = app.add_subcommand("checklist", "Deployment constraints to verify before sharing");
  checklist_cmd->add_option("--state", state_label, "existing or new")
      ->required()
      ->transform(CLI::IsMember({"existing", "new"}, CLI::ignore_case));
  checklist_cmd->add_option("--answers", answers_path, "Checklist JSON with answered items")->check(CLI::ExistingFile);
  checklist_cmd->add_option("--format", checklist_format, "Output format")
      ->transform(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  std::string targets_path;
  std::string calibrate_out = ".";
  auto* calibrate_cmd = app.add_subcommand("calibrate", "Fit reference cost tables to calibration targets");
  calibrate_cmd->add_option("targets", targets_path, "Calibration targets JSON")->required();
  calibrate_cmd->add_option("--out", calibrate_out, "Directory for reference_costs_<area>.json")->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("netshare");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed() || sweep_cmd->parsed()) {
      const ScenarioArgs& a = run->parsed() ? run_args : sweep_args;
      const Scenario s = load(a, g, err);
      if ((g.verbose || g.strict) && collect_warnings(s, err) > 0 && g.strict) {
        err << "error: warnings present and --strict given\n";
        return kExitDomain;
      }
      const Format format = kScenarioFormats.at(a.format);
      const EmitOptions emit{.provenance = !a.no_provenance};
      std::string doc;
      if (run->parsed()) {
        doc = emit_report(run_scenario(s), format, emit);
      } else {
        if (!s.sweep) throw Error(ErrorCode::InvalidSweepParameter, "scenario '" + s.name + "' declares no sweep");
        const auto points = sweep(s);
        doc = emit_report(points, s.sweep->parameter, format, emit);
      }
      write_document(doc, a.out, out);
      return kExitOk;
    }
    if (validate->parsed()) {
      const Scenario s = load(validate_args, g, err);
      const std::size_t warnings = collect_warnings(s, err);
      if (warnings > 0 && g.strict) {
        err << "error: " << warnings << " warning(s) and --strict given\n";
        return kExitDomain;
      }
      out << "valid: " << s.name << " (" << s.areas.size() << " areas, " << s.configurations.size()
          << " configurations, " << warnings << " warnings)\n";
      return kExitOk;
    }
    if (presets_cmd->parsed()) {
      if (presets_format == "json") {
        json_io::Json arr = json_io::Json::array();
        for (auto name : preset_names()) arr.push_back(json_io::to_json(preset(name)));
        out << arr.dump(2) << "\n";
      } else {
        for (auto name : preset_names()) {
          out << name << ":";
          for (auto c : preset(name).shared().members()) out << " " << to_string(c);
          out << "\n";
        }
      }
      return kExitOk;
    }
    if (recommend_cmd->parsed()) {
      out << emit_report(recommend(*area_from_string(rec_area), *technology_from_string(rec_tech)), kAdvisorFormats.at(rec_format));
      return kExitOk;
    }
    if (lte_cmd->parsed()) {
      out << emit_report(compare_lte(lte), kAdvisorFormats.at(lte_format));
      return kExitOk;
    }
    if (checklist_cmd->parsed()) {
      const NetworkState state = *network_state_from_string(state_label);
      ConstraintChecklist list = checklist(state);
      if (!answers_path.empty()) {
        list = json_io::checklist_from_json(json_io::read_file(answers_path, ErrorCode::MalformedDocument));
        if (list.state != state)
          throw Error(ErrorCode::MalformedDocument,
                      answers_path + ": answers are for a " + std::string(to_string(list.state)) + " network");
      }
      out << emit_report(list, kAdvisorFormats.at(checklist_format));
      return kExitOk;
    }
    if (calibrate_cmd->parsed()) return calibrate_command(targets_path, calibrate_out, out, err, g);
  } catch (const InvalidScenarioError& e) {
    err << "error: " << e.what() << "\n";
    print_findings(e.configuration(), e.report(), err);
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: IoFailure: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace netshare::cli
