#include "netshare/scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "netshare/json_io.hpp"

#ifndef NETSHARE_DEFAULT_FIXTURE_DIR
#define NETSHARE_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace netshare {

using json_io::Json;

std::string_view to_string(SweepParameter p) noexcept {
  switch (p) {
    case SweepParameter::SplitRatio: return "split_ratio";
    case SweepParameter::HorizonYears: return "horizon_years";
    case SweepParameter::IntlShared: return "intl_shared";
    case SweepParameter::ClassCostFraction: return "class_cost_fraction";
  }
  return "split_ratio";
}

std::optional<SweepParameter> sweep_parameter_from_string(std::string_view s) noexcept {
  for (auto p : {SweepParameter::SplitRatio, SweepParameter::HorizonYears, SweepParameter::IntlShared,
                 SweepParameter::ClassCostFraction})
    if (to_string(p) == s) return p;
  return std::nullopt;
}

void SweepSpec::validate() const {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidSweepParameter, std::string(to_string(parameter)) + ": " + why);
  };
  if (steps < 2 || steps > kMaxSteps) fail("steps must lie in [2, " + std::to_string(kMaxSteps) + "]");
  if (!(from < to)) fail("from must be < to");
  if (target_class && parameter != SweepParameter::ClassCostFraction) fail("'class' only applies to class_cost_fraction");
  switch (parameter) {
    case SweepParameter::SplitRatio:
      if (!(from > 0.0 && to < 1.0)) fail("split ratio range must lie strictly inside (0,1)");
      break;
    case SweepParameter::HorizonYears:
      if (from < 1.0) fail("horizon must be >= 1");
      break;
    case SweepParameter::IntlShared:
      if (from != 0.0 || to != 1.0 || steps != 2) fail("intl_shared sweeps exactly from 0 to 1 in 2 steps");
      break;
    case SweepParameter::ClassCostFraction:
      if (!target_class) fail("class_cost_fraction needs a 'class'");
      if (!(from >= 0.0 && to <= 1.0)) fail("fraction range must lie in [0,1]");
      break;
  }
}

std::vector<double> SweepSpec::values() const {
  validate();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double v = i == steps - 1 ? to : from + (to - from) * i / (steps - 1);
    out.push_back(v);
  }
  if (parameter == SweepParameter::HorizonYears) {
    for (double& v : out) {
      if (std::abs(v - std::round(v)) > 1e-9)
        throw Error(ErrorCode::InvalidSweepParameter, "horizon_years grid point " + std::to_string(v) + " is not a whole year");
      v = std::round(v);
    }
  }
  return out;
}

void validate_scenario(const Scenario& s) {
  auto invalid = [&](const std::string& why) { throw InvalidScenarioError(s.name + ": " + why, "", {}); };
  if (s.areas.empty()) invalid("at least one area is required");
  if (s.configurations.empty()) invalid("at least one configuration is required");
  if (s.horizon_years < 1) invalid("horizon_years must be >= 1");

  std::set<AreaKind> seen_areas;
  for (const auto& a : s.areas) {
    a.profile.validate();
    if (!seen_areas.insert(a.profile.kind).second)
      invalid("area " + std::string(to_string(a.profile.kind)) + " listed twice");
    if (a.costs.area() != a.profile.kind)
      invalid("cost table for " + std::string(to_string(a.profile.kind)) + " is labelled " +
              std::string(to_string(a.costs.area())));
    if (!a.costs.usable()) invalid("cost table for " + std::string(to_string(a.profile.kind)) + " has no costs");
  }

  std::set<std::string> seen_names;
  for (const auto& cfg : s.configurations) {
    if (!seen_names.insert(cfg.name()).second) invalid("configuration '" + cfg.name() + "' listed twice");
    ValidationReport report = validate_configuration(cfg, {}, s.policy);
    if (!report.valid()) {
      std::string msg = "configuration '" + cfg.name() + "' is invalid:";
      for (const auto& e : report.errors) msg += " " + std::string(to_string(e.code)) + " (" + e.message + ")";
      throw InvalidScenarioError(s.name + ": " + msg, cfg.name(), std::move(report));
    }
  }
  if (s.sweep) s.sweep->validate();
}

namespace {

constexpr auto kMalformed = ErrorCode::MalformedScenario;

std::filesystem::path resolve(const std::string& relative, const LoadOptions& options) {
  const std::filesystem::path p(relative);
  if (p.is_absolute()) return p;
  for (const auto& dir : options.search_dirs) {
    const auto candidate = dir / p;
    if (std::filesystem::exists(candidate)) return candidate;
  }
  throw Error(ErrorCode::IoFailure, "cost table '" + relative + "' not found");
}

CostTable cost_table_entry(const Json& entry, const AreaProfile& profile, const LoadOptions& options) {
  const std::string area_label(to_string(profile.kind));
  if (entry.is_string()) {
    const auto path = resolve(entry.get<std::string>(), options);
    return json_io::cost_table_from_json(json_io::read_file(path, kMalformed), kMalformed);
  }
  if (entry.is_object() && entry.contains("unit_costs")) {
    json_io::require_known_keys(entry, {"unit_costs", "currency"}, "cost_tables." + area_label);
    UnitCostMap units;
    for (const auto& [label, u] : entry["unit_costs"].items()) {
      const auto c = element_class_from_string(label);
      if (!c) throw Error(kMalformed, "cost_tables." + area_label + ".unit_costs: unknown element class '" + label + "'");
      json_io::require_known_keys(u, {"capex", "opex_annual"}, "cost_tables." + area_label + ".unit_costs." + label);
      units[*c] = UnitCost{u.value("capex", 0.0), u.value("opex_annual", 0.0)};
    }
    return build_inventory(profile, units, entry.value("currency", std::string{}));
  }
  if (entry.is_object()) return json_io::cost_table_from_json(entry, kMalformed);
  throw Error(kMalformed, "cost_tables." + area_label + ": expected a path, a cost table or unit costs");
}

SweepSpec sweep_from_json(const Json& j) {
  json_io::require_known_keys(j, {"parameter", "class", "from", "to", "steps"}, "sweep");
  SweepSpec spec;
  const std::string p = j.value("parameter", std::string{});
  const auto parameter = sweep_parameter_from_string(p);
  if (!parameter) throw Error(kMalformed, "sweep: unknown parameter '" + p + "'");
  spec.parameter = *parameter;
  if (j.contains("class")) {
    const std::string label = j["class"].get<std::string>();
    spec.target_class = element_class_from_string(label);
    if (!spec.target_class) throw Error(kMalformed, "sweep: unknown element class '" + label + "'");
  }
  if (!j.contains("from") || !j.contains("to") || !j.contains("steps"))
    throw Error(kMalformed, "sweep: 'from', 'to' and 'steps' are required");
  spec.from = j["from"].get<double>();
  spec.to = j["to"].get<double>();
  spec.steps = j["steps"].get<int>();
  return spec;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Scenario load_scenario(std::string_view document, const LoadOptions& options) {
  const Json j = json_io::parse(document, kMalformed, "scenario");
  json_io::require_known_keys(j, {"name", "horizon_years", "areas", "cost_tables", "configurations", "policy", "sweep"},
                              "scenario");
  Scenario s;
  try {
    s.name = j.value("name", std::string("unnamed"));
    if (j.contains("horizon_years")) {
      if (!j["horizon_years"].is_number_integer()) throw Error(kMalformed, "scenario: 'horizon_years' must be an integer");
      s.horizon_years = j["horizon_years"].get<int>();
    }
    if (j.contains("policy")) s.policy = json_io::policy_from_json(j["policy"], kMalformed);

    const Json areas = j.value("areas", Json::array());
    const Json tables = j.value("cost_tables", Json::object());
    if (!areas.is_array()) throw Error(kMalformed, "scenario: 'areas' must be an array");
    if (!tables.is_object()) throw Error(kMalformed, "scenario: 'cost_tables' must be an object");
    for (const auto& [key, _] : tables.items())
      if (!area_from_string(key)) throw Error(kMalformed, "cost_tables: unknown area '" + key + "'");
    for (const Json& a : areas) {
      const AreaProfile profile = json_io::area_profile_from_json(a, kMalformed);
      const std::string label(to_string(profile.kind));
      if (!tables.contains(label))
        throw InvalidScenarioError(s.name + ": no cost table for area '" + label + "'", "", {});
      s.areas.push_back({profile, cost_table_entry(tables[label], profile, options)});
    }

    const Json configs = j.value("configurations", Json::array());
    if (!configs.is_array()) throw Error(kMalformed, "scenario: 'configurations' must be an array");
    for (const Json& c : configs) {
      if (c.is_string()) {
        try {
          s.configurations.push_back(preset(c.get<std::string>()));
        } catch (const Error& e) {
          throw Error(kMalformed, std::string("configurations: ") + e.what());
        }
      } else {
        s.configurations.push_back(json_io::configuration_from_json(c, kMalformed));
      }
    }
    if (j.contains("sweep")) s.sweep = sweep_from_json(j["sweep"]);
  } catch (const nlohmann::json::exception& e) {
    throw Error(kMalformed, std::string("scenario: ") + e.what());
  }
  validate_scenario(s);
  return s;
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("NETSHARE_FIXTURES"); env && *env) return env;
  return NETSHARE_DEFAULT_FIXTURE_DIR;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream probe(path);
  if (!probe) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  std::stringstream ss;
  ss << probe.rdbuf();
  LoadOptions options;
  options.search_dirs = {path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path(), fixture_dir()};
  try {
    return load_scenario(ss.str(), options);
  } catch (const InvalidScenarioError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + std::string(e.what()).substr(to_string(e.code()).size() + 2));
  }
}

const GridCell* ScenarioResult::find(AreaKind area, std::string_view configuration) const {
  for (const auto& cell : grid)
    if (cell.area == area && cell.configuration == configuration) return &cell;
  return nullptr;
}

const GridCell* ScenarioResult::best_total(AreaKind area) const {
  const GridCell* best = nullptr;
  for (const auto& cell : grid)
    if (cell.area == area && (!best || cell.report.total_saving_pct > best->report.total_saving_pct)) best = &cell;
  return best;
}

ScenarioResult run_scenario(const Scenario& s) {
  validate_scenario(s);
  ScenarioResult result;
  result.provenance.scenario = s.name;
  result.provenance.timestamp = utc_timestamp();
  result.grid.reserve(s.areas.size() * s.configurations.size());
  for (const auto& area : s.areas) {
    for (const auto& cfg : s.configurations) {
      try {
        result.grid.push_back({area.profile.kind, cfg.name(), evaluate(area.costs, cfg, s.horizon_years, 0, s.rules)});
      } catch (const Error& e) {
        throw Error(e.code(), "cell (" + std::string(to_string(area.profile.kind)) + ", " + cfg.name() + "): " + e.what());
      }
    }
  }
  return result;
}

Scenario substitute(const Scenario& s, const SweepSpec& spec, double value) {
  Scenario out = s;
  out.sweep.reset();
  switch (spec.parameter) {
    case SweepParameter::SplitRatio:
      for (auto& cfg : out.configurations) {
        const int n = cfg.operator_count();
        std::vector<double> split(static_cast<std::size_t>(n), (1.0 - value) / (n - 1));
        split[0] = value;
        cfg = cfg.with_split(std::move(split));
      }
      break;
    case SweepParameter::HorizonYears:
      out.horizon_years = static_cast<int>(std::lround(value));
      break;
    case SweepParameter::IntlShared:
      for (auto& cfg : out.configurations) cfg = cfg.with_intl_shared(value >= 0.5);
      break;
    case SweepParameter::ClassCostFraction: {
      const ElementClass c = *spec.target_class;
      bool present = false;
      for (auto& area : out.areas) {
        CostTable::Amounts amounts = area.costs.amounts();
        for (int l = 0; l < 2; ++l) {
          const double own = amounts(index_of(c), l);
          const double total = amounts.col(l).sum();
          if (!(own > 0.0)) continue;
          present = true;
          const double others = total - own;
          if (!(others > 0.0) && value < 1.0)
            throw Error(ErrorCode::InvalidSweepParameter, std::string(to_string(c)) + " is the only " +
                                                              std::string(to_string(static_cast<Ledger>(l))) +
                                                              " cost in " + std::string(to_string(area.profile.kind)));
          const double k = others > 0.0 ? (1.0 - value) * total / others : 0.0;
          amounts.col(l) *= k;
          amounts(index_of(c), l) = value * total;
        }
        area.costs = CostTable(area.costs.area(), amounts, area.costs.currency());
      }
      if (!present)
        throw Error(ErrorCode::InvalidSweepParameter, std::string(to_string(c)) + " has no cost in any area");
      break;
    }
  }
  return out;
}

std::vector<SweepPoint> sweep(const Scenario& s) {
  if (!s.sweep) throw Error(ErrorCode::InvalidSweepParameter, s.name + ": scenario has no sweep");
  std::vector<SweepPoint> points;
  for (double v : s.sweep->values()) points.push_back({v, run_scenario(substitute(s, *s.sweep, v))});
  return points;
}

}  // namespace netshare
