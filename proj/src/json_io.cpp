#include "netshare/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace netshare::json_io {

namespace {

std::string squote(std::string_view s) { return "'" + std::string(s) + "'"; }

const Json& member(const Json& j, std::string_view key, std::string_view ctx, ErrorCode code) {
  const auto it = j.find(std::string(key));
  if (it == j.end()) throw Error(code, std::string(ctx) + ": missing key " + squote(key));
  return *it;
}

void require_object(const Json& j, std::string_view ctx, ErrorCode code) {
  if (!j.is_object()) throw Error(code, std::string(ctx) + ": expected an object");
}

double number(const Json& j, std::string_view key, std::string_view ctx, ErrorCode code) {
  const Json& v = member(j, key, ctx, code);
  if (!v.is_number()) throw Error(code, std::string(ctx) + ": key " + squote(key) + " must be a number");
  return v.get<double>();
}

double number_or(const Json& j, std::string_view key, double fallback, std::string_view ctx, ErrorCode code) {
  return j.contains(std::string(key)) ? number(j, key, ctx, code) : fallback;
}

int integer(const Json& j, std::string_view key, std::string_view ctx, ErrorCode code) {
  const Json& v = member(j, key, ctx, code);
  if (!v.is_number_integer()) throw Error(code, std::string(ctx) + ": key " + squote(key) + " must be an integer");
  return v.get<int>();
}

std::string text(const Json& j, std::string_view key, std::string_view ctx, ErrorCode code) {
  const Json& v = member(j, key, ctx, code);
  if (!v.is_string()) throw Error(code, std::string(ctx) + ": key " + squote(key) + " must be a string");
  return v.get<std::string>();
}

bool boolean(const Json& j, std::string_view key, std::string_view ctx, ErrorCode code) {
  const Json& v = member(j, key, ctx, code);
  if (!v.is_boolean()) throw Error(code, std::string(ctx) + ": key " + squote(key) + " must be a boolean");
  return v.get<bool>();
}

ElementClass element_class(std::string_view label, std::string_view ctx, ErrorCode code) {
  auto c = element_class_from_string(label);
  if (!c) throw Error(code, std::string(ctx) + ": unknown element class " + squote(label));
  return *c;
}

AreaKind area(std::string_view label, std::string_view ctx, ErrorCode code) {
  auto a = area_from_string(label);
  if (!a) throw Error(code, std::string(ctx) + ": unknown area " + squote(label));
  return *a;
}

Json breakdown_totals(const CostBreakdown& b) {
  return Json{{"capex_total", b.capex_total()},
              {"opex_cumulative_total", b.opex_cumulative_total()},
              {"grand_total", b.grand_total()}};
}

}  // namespace

Json parse(std::string_view text_in, ErrorCode code, std::string_view source) {
  try {
    return Json::parse(text_in.begin(), text_in.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text_in.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text_in[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(code, std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) +
                          ": parse error: " + e.what());
  }
}

Json read_file(const std::filesystem::path& path, ErrorCode code) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), code, path.string());
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::IoFailure, "write failed for " + path.string());
}

void require_known_keys(const Json& object, std::initializer_list<std::string_view> allowed, std::string_view context,
                        ErrorCode code) {
  require_object(object, context, code);
  for (const auto& [key, _] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw Error(code, std::string(context) + ": unknown key " + squote(key));
  }
}

// --- cost tables -------------------------------------------------------------

Json to_json(const CostTable& table) {
  Json entries = Json::object();
  for (auto c : kAllClasses) {
    entries[std::string(to_string(c))] = Json{{"capex", table.capex(c)}, {"opex_annual", table.opex_annual(c)}};
  }
  return Json{{"area", to_string(table.area())}, {"currency", table.currency()}, {"entries", entries}};
}

CostTable cost_table_from_json(const Json& j, ErrorCode code) {
  require_known_keys(j, {"area", "currency", "entries", "calibration"}, "cost table", code);
  const AreaKind a = area(text(j, "area", "cost table", code), "cost table", code);
  const std::string currency = j.contains("currency") ? text(j, "currency", "cost table", code) : "";
  const Json& entries = member(j, "entries", "cost table", code);
  require_object(entries, "cost table entries", code);

  CostTable::Amounts amounts = CostTable::Amounts::Zero();
  for (const auto& [label, entry] : entries.items()) {
    const std::string ctx = "cost table entry " + squote(label);
    const ElementClass c = element_class(label, "cost table", code);
    require_known_keys(entry, {"capex", "opex_annual"}, ctx, code);
    amounts(index_of(c), 0) = number_or(entry, "capex", 0.0, ctx, code);
    amounts(index_of(c), 1) = number_or(entry, "opex_annual", 0.0, ctx, code);
  }
  return CostTable(a, amounts, currency);
}

Json to_json(const CalibratedArea& calibrated, const CalibrationResult& run, std::string_view constraint_label) {
  Json doc = to_json(calibrated.table);
  Json residuals = Json::array();
  for (const auto& r : calibrated.residuals) {
    Json t = to_json(r.target);
    t["achieved"] = r.achieved;
    if (r.target.kind == TargetKind::Band) t["achieved_max"] = r.achieved_max;
    t["residual"] = r.residual;
    residuals.push_back(std::move(t));
  }
  doc["calibration"] = Json{{"method", run.method},
                            {"seed", run.seed},
                            {"iterations", run.iterations},
                            {"restarts", run.restarts},
                            {"horizon_years", run.horizon_years},
                            {"capex_share", calibrated.capex_share},
                            {"constraints", constraint_label},
                            {"residuals", residuals}};
  return doc;
}

std::optional<CalibrationRecord> calibration_record_from_json(const Json& doc) {
  if (!doc.contains("calibration")) return std::nullopt;
  const Json& c = doc["calibration"];
  constexpr auto code = ErrorCode::MalformedDocument;
  require_known_keys(c, {"method", "seed", "iterations", "restarts", "horizon_years", "capex_share", "constraints",
                         "residuals"},
                     "calibration", code);
  CalibrationRecord rec;
  rec.method = text(c, "method", "calibration", code);
  rec.seed = member(c, "seed", "calibration", code).get<std::uint64_t>();
  rec.iterations = integer(c, "iterations", "calibration", code);
  rec.restarts = integer(c, "restarts", "calibration", code);
  rec.horizon_years = integer(c, "horizon_years", "calibration", code);
  rec.capex_share = number(c, "capex_share", "calibration", code);
  rec.constraints = text(c, "constraints", "calibration", code);
  for (const Json& r : member(c, "residuals", "calibration", code)) {
    Json target = r;
    const double achieved = number(r, "achieved", "calibration residual", code);
    const double achieved_max = number_or(r, "achieved_max", achieved, "calibration residual", code);
    const double residual = number(r, "residual", "calibration residual", code);
    target.erase("achieved");
    target.erase("achieved_max");
    target.erase("residual");
    rec.residuals.push_back({calibration_target_from_json(target, code), achieved, achieved_max, residual});
  }
  return rec;
}

// --- profiles, policies, configurations ---------------------------------------

Json to_json(const AreaProfile& p) {
  return Json{{"kind", to_string(p.kind)},        {"nodeb_count", p.nodeb_count}, {"subscriber_count", p.subscriber_count},
              {"rnc_count", p.rnc_count},         {"sgsn_count", p.sgsn_count},   {"ggsn_count", p.ggsn_count}};
}

AreaProfile area_profile_from_json(const Json& j, ErrorCode code) {
  constexpr std::string_view ctx = "area profile";
  if (j.is_string()) return AreaProfile::reference(area(j.get<std::string>(), ctx, code));
  require_known_keys(j, {"kind", "nodeb_count", "subscriber_count", "rnc_count", "sgsn_count", "ggsn_count"}, ctx,
                     code);
  const AreaKind kind = area(text(j, "kind", ctx, code), ctx, code);
  AreaProfile p = AreaProfile::reference(kind);
  if (j.contains("nodeb_count")) p.nodeb_count = integer(j, "nodeb_count", ctx, code);
  if (j.contains("subscriber_count")) p.subscriber_count = integer(j, "subscriber_count", ctx, code);
  if (j.contains("rnc_count")) p.rnc_count = integer(j, "rnc_count", ctx, code);
  if (j.contains("sgsn_count")) p.sgsn_count = integer(j, "sgsn_count", ctx, code);
  if (j.contains("ggsn_count")) p.ggsn_count = integer(j, "ggsn_count", ctx, code);
  p.validate();
  return p;
}

Json to_json(const RegulatoryPolicy& p) {
  Json j{{"min_own_coverage_fraction", p.min_own_coverage_fraction},
         {"spectrum_pooling_allowed", p.spectrum_pooling_allowed}};
  j["max_level"] = p.max_level ? Json(to_string(*p.max_level)) : Json(nullptr);
  return j;
}

RegulatoryPolicy policy_from_json(const Json& j, ErrorCode code) {
  constexpr std::string_view ctx = "policy";
  require_known_keys(j, {"min_own_coverage_fraction", "spectrum_pooling_allowed", "max_level"}, ctx, code);
  RegulatoryPolicy p;
  p.min_own_coverage_fraction = number_or(j, "min_own_coverage_fraction", 0.0, ctx, code);
  if (j.contains("spectrum_pooling_allowed")) p.spectrum_pooling_allowed = boolean(j, "spectrum_pooling_allowed", ctx, code);
  if (j.contains("max_level") && !j["max_level"].is_null()) {
    const std::string label = text(j, "max_level", ctx, code);
    p.max_level = level_from_string(label);
    if (!p.max_level) throw Error(code, "policy: unknown level " + squote(label));
  }
  if (!(p.min_own_coverage_fraction >= 0.0 && p.min_own_coverage_fraction <= 1.0))
    throw Error(code, "policy: min_own_coverage_fraction must lie in [0,1]");
  return p;
}

Json to_json(const SharingConfiguration& cfg) {
  Json shared = Json::object();
  for (auto c : kAllClasses) shared[std::string(to_string(c))] = cfg.is_shared(c);
  Json j{{"name", cfg.name()},
         {"shared", shared},
         {"operators", cfg.operator_count()},
         {"split", cfg.split_ratios()},
         {"intl_shared", cfg.intl_shared()}};
  if (cfg.policy()) j["policy"] = to_json(*cfg.policy());
  return j;
}

SharingConfiguration configuration_from_json(const Json& j, ErrorCode code) {
  constexpr std::string_view ctx = "configuration";
  require_known_keys(j, {"name", "shared", "operators", "split", "intl_shared", "policy"}, ctx, code);
  const std::string name = text(j, "name", ctx, code);
  const std::string named_ctx = "configuration " + squote(name);
  ClassSet shared;
  const Json& matrix = member(j, "shared", named_ctx, code);
  require_object(matrix, named_ctx, code);
  for (const auto& [label, flag] : matrix.items()) {
    const ElementClass c = element_class(label, named_ctx, code);
    if (!flag.is_boolean()) throw Error(code, named_ctx + ": shared." + label + " must be a boolean");
    if (flag.get<bool>()) shared.insert(c);
  }
  const int operators = j.contains("operators") ? integer(j, "operators", named_ctx, code) : 2;
  std::vector<double> split;
  if (j.contains("split")) {
    const Json& s = j["split"];
    if (!s.is_array()) throw Error(code, named_ctx + ": split must be an array");
    for (const Json& v : s) {
      if (!v.is_number()) throw Error(code, named_ctx + ": split entries must be numbers");
      split.push_back(v.get<double>());
    }
  }
  const bool intl = j.contains("intl_shared") ? boolean(j, "intl_shared", named_ctx, code) : false;
  std::optional<RegulatoryPolicy> policy;
  if (j.contains("policy")) policy = policy_from_json(j["policy"], code);
  return SharingConfiguration(name, shared, operators, std::move(split), intl, std::move(policy));
}

// --- calibration targets --------------------------------------------------------

Json to_json(const CalibrationTarget& t) {
  Json j{{"area", to_string(t.area)}, {"kind", netshare::to_string(t.kind)}, {"ledger", netshare::to_string(t.ledger)}};
  switch (t.kind) {
    case TargetKind::Point:
      j["configuration"] = t.configuration;
      j["value"] = t.value;
      break;
    case TargetKind::Delta:
      j["configuration"] = t.configuration;
      j["reference"] = t.reference;
      j["value"] = t.value;
      break;
    case TargetKind::Band:
      j["lower"] = t.lower;
      j["upper"] = t.upper;
      if (!t.band_configurations.empty()) j["configurations"] = t.band_configurations;
      break;
  }
  j["tolerance_pp"] = t.tolerance_pp;
  if (!t.label.empty()) j["label"] = t.label;
  return j;
}

CalibrationTarget calibration_target_from_json(const Json& j, ErrorCode code) {
  constexpr std::string_view ctx = "calibration target";
  require_known_keys(j, {"area", "kind", "ledger", "configuration", "reference", "value", "lower", "upper",
                         "configurations", "tolerance_pp", "label"},
                     ctx, code);
  CalibrationTarget t;
  t.area = area(text(j, "area", ctx, code), ctx, code);
  const std::string kind = text(j, "kind", ctx, code);
  if (kind == "point")
    t.kind = TargetKind::Point;
  else if (kind == "delta")
    t.kind = TargetKind::Delta;
  else if (kind == "band")
    t.kind = TargetKind::Band;
  else
    throw Error(code, "calibration target: unknown kind " + squote(kind));
  const std::string ledger = text(j, "ledger", ctx, code);
  if (ledger == "capex")
    t.ledger = TargetLedger::Capex;
  else if (ledger == "opex")
    t.ledger = TargetLedger::Opex;
  else if (ledger == "total")
    t.ledger = TargetLedger::Total;
  else
    throw Error(code, "calibration target: unknown ledger " + squote(ledger));
  if (t.kind != TargetKind::Band) {
    t.configuration = text(j, "configuration", ctx, code);
    t.value = number(j, "value", ctx, code);
  }
  if (t.kind == TargetKind::Delta) t.reference = text(j, "reference", ctx, code);
  if (t.kind == TargetKind::Band) {
    t.lower = number(j, "lower", ctx, code);
    t.upper = number(j, "upper", ctx, code);
    if (t.lower > t.upper) throw Error(code, "calibration target: lower > upper");
    if (j.contains("configurations")) t.band_configurations = j["configurations"].get<std::vector<std::string>>();
  }
  t.tolerance_pp = number_or(j, "tolerance_pp", 2.0, ctx, code);
  if (j.contains("label")) t.label = text(j, "label", ctx, code);
  return t;
}

// --- reports -------------------------------------------------------------------

Json to_json(const ConstraintReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json classes = Json::array();
    for (auto cls : c.constraint.classes.members()) classes.push_back(to_string(cls));
    checks.push_back(Json{{"label", c.constraint.label},
                          {"ledger", to_string(c.constraint.ledger)},
                          {"classes", classes},
                          {"lower", c.constraint.bound.lower},
                          {"upper", c.constraint.bound.upper},
                          {"scope", c.constraint.scope ? Json(to_string(*c.constraint.scope)) : Json("all")},
                          {"observed_fraction", c.observed_fraction},
                          {"satisfied", c.satisfied}});
  }
  return Json{{"overall", report.overall}, {"checks", checks}};
}

Json to_json(const ValidationReport& report) {
  auto findings = [](const std::vector<Finding>& fs) {
    Json out = Json::array();
    for (const auto& f : fs) out.push_back(Json{{"code", to_string(f.code)}, {"message", f.message}});
    return out;
  };
  return Json{{"valid", report.valid()}, {"errors", findings(report.errors)}, {"warnings", findings(report.warnings)}};
}

Json to_json(const SavingsReport& r) {
  Json per_class = Json::object();
  for (auto c : kAllClasses)
    per_class[std::string(to_string(c))] =
        Json{{"capex", r.per_class_saving(index_of(c), 0)}, {"opex_cumulative", r.per_class_saving(index_of(c), 1)}};
  return Json{{"area", to_string(r.area)},
              {"configuration", r.configuration},
              {"horizon_years", r.horizon_years()},
              {"capex_saving_pct", r.capex_saving_pct},
              {"opex_saving_pct", r.opex_saving_pct},
              {"total_saving_pct", r.total_saving_pct},
              {"currency", r.baseline.currency()},
              {"baseline", breakdown_totals(r.baseline)},
              {"shared", breakdown_totals(r.shared_cost)},
              {"per_class_saving", per_class}};
}

Json to_json(const ScenarioResult& result, bool with_provenance) {
  Json j{{"schema_version", kSchemaVersion}, {"kind", "scenario_result"}};
  Json prov{{"scenario", result.provenance.scenario}, {"engine_version", result.provenance.engine_version}};
  if (with_provenance) prov["timestamp"] = result.provenance.timestamp;
  j["provenance"] = prov;
  Json cells = Json::array();
  for (const auto& cell : result.grid) cells.push_back(to_json(cell.report));
  j["cells"] = cells;
  return j;
}

Json to_json(const Recommendation& rec) {
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "recommendation"},
              {"area", to_string(rec.area)},
              {"technology", to_string(rec.technology)},
              {"verdict", to_string(rec.verdict)},
              {"notes", rec.notes}};
}

Json to_json(const LteComparisonReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows)
    rows.push_back(Json{{"criterion", to_string(r.criterion)},
                        {"mocn", std::string(1, symbol(r.mocn))},
                        {"gwcn", std::string(1, symbol(r.gwcn))},
                        {"remark", r.remark}});
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "lte_comparison"},
              {"rows", rows},
              {"aggregate", Json{{"mocn", report.mocn_score}, {"gwcn", report.gwcn_score}}},
              {"preferred", to_string(report.preferred)}};
}

Json to_json(const ConstraintChecklist& list) {
  Json items = Json::array();
  for (const auto& item : list.items)
    items.push_back(Json{{"domain", to_string(item.domain)},
                         {"text", item.text},
                         {"answered", item.answered ? Json(*item.answered) : Json(nullptr)}});
  return Json{{"schema_version", kSchemaVersion}, {"kind", "checklist"}, {"state", to_string(list.state)}, {"items", items}};
}

ConstraintChecklist checklist_from_json(const Json& j) {
  constexpr auto code = ErrorCode::MalformedDocument;
  require_known_keys(j, {"schema_version", "kind", "state", "items"}, "checklist", code);
  const std::string state_label = text(j, "state", "checklist", code);
  const auto state = network_state_from_string(state_label);
  if (!state) throw Error(code, "checklist: unknown state " + squote(state_label));

  ConstraintChecklist list = checklist(*state);
  for (const Json& item : member(j, "items", "checklist", code)) {
    require_known_keys(item, {"domain", "text", "answered"}, "checklist item", code);
    const std::string item_text = text(item, "text", "checklist item", code);
    auto it = std::find_if(list.items.begin(), list.items.end(),
                           [&](const ChecklistItem& c) { return c.text == item_text; });
    if (it == list.items.end()) throw Error(code, "checklist: unknown item " + squote(item_text));
    if (item.contains("domain")) {
      const std::string d = text(item, "domain", "checklist item", code);
      if (to_string(it->domain) != d) throw Error(code, "checklist: item " + squote(item_text) + " is not in domain " + squote(d));
    }
    if (item.contains("answered") && !item["answered"].is_null()) it->answered = boolean(item, "answered", "checklist item", code);
  }
  return list;
}

}  // namespace netshare::json_io
