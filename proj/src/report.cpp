#include "netshare/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "netshare/json_io.hpp"

namespace netshare {

namespace {

std::string fixed(double v, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << v;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const GridCell& cell) {
  const auto& r = cell.report;
  return std::string(to_string(cell.area)) + "," + csv_field(cell.configuration) + "," + fixed(r.capex_saving_pct, 4) +
         "," + fixed(r.opex_saving_pct, 4) + "," + fixed(r.total_saving_pct, 4) + "," + std::to_string(r.horizon_years());
}

void table_rows(std::ostringstream& os, const ScenarioResult& result) {
  os << std::left << std::setw(10) << "area" << std::setw(18) << "configuration" << std::right << std::setw(9)
     << "CAPEX %" << std::setw(9) << "OPEX %" << std::setw(9) << "Total %" << "\n";
  for (const auto& cell : result.grid) {
    const auto& r = cell.report;
    os << std::left << std::setw(10) << to_string(cell.area) << std::setw(18) << cell.configuration << std::right
       << std::setw(9) << fixed(r.capex_saving_pct, 2) << std::setw(9) << fixed(r.opex_saving_pct, 2) << std::setw(9)
       << fixed(r.total_saving_pct, 2) << "\n";
  }
}

[[noreturn]] void unsupported(std::string_view what) {
  throw Error(ErrorCode::MalformedDocument, std::string(what) + " has no csv form; use table or json");
}

}  // namespace

std::optional<Format> format_from_string(std::string_view s) noexcept {
  if (s == "table" || s == "text") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

std::string emit_report(const ScenarioResult& result, Format format, const EmitOptions& options) {
  std::ostringstream os;
  switch (format) {
    case Format::Csv:
      os << kCsvHeader << "\n";
      for (const auto& cell : result.grid) os << csv_row(cell) << "\n";
      break;
    case Format::Json:
      os << json_io::to_json(result, options.provenance).dump(2) << "\n";
      break;
    case Format::Table: {
      const int horizon = result.grid.empty() ? 0 : result.grid.front().report.horizon_years();
      os << "scenario: " << result.provenance.scenario << " (horizon " << horizon << " years)\n";
      if (options.provenance) os << "generated: " << result.provenance.timestamp << "\n";
      table_rows(os, result);
      break;
    }
  }
  return os.str();
}

std::string emit_report(std::span<const SweepPoint> points, SweepParameter parameter, Format format,
                        const EmitOptions& options) {
  std::vector<const SweepPoint*> sorted;
  for (const auto& p : points) sorted.push_back(&p);
  std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->value < b->value; });
  std::ostringstream os;
  switch (format) {
    case Format::Csv:
      os << "sweep_parameter,sweep_value," << kCsvHeader << "\n";
      for (const auto* p : sorted)
        for (const auto& cell : p->result.grid)
          os << to_string(parameter) << "," << fixed(p->value, 6) << "," << csv_row(cell) << "\n";
      break;
    case Format::Json: {
      json_io::Json j{{"schema_version", json_io::kSchemaVersion}, {"kind", "sweep"}, {"parameter", to_string(parameter)}};
      json_io::Json arr = json_io::Json::array();
      for (const auto* p : sorted)
        arr.push_back(json_io::Json{{"value", p->value}, {"result", json_io::to_json(p->result, options.provenance)}});
      j["points"] = arr;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Table:
      for (const auto* p : sorted) {
        os << to_string(parameter) << " = " << fixed(p->value, 4) << "\n";
        table_rows(os, p->result);
        os << "\n";
      }
      break;
  }
  return os.str();
}

std::string emit_report(const Recommendation& rec, Format format) {
  if (format == Format::Csv) unsupported("recommendation");
  if (format == Format::Json) return json_io::to_json(rec).dump(2) + "\n";
  std::ostringstream os;
  os << "area: " << to_string(rec.area) << "  technology: " << to_string(rec.technology) << "\n";
  os << "verdict: " << to_string(rec.verdict) << "\n";
  for (const auto& n : rec.notes) os << "  - " << n << "\n";
  return os.str();
}

std::string emit_report(const LteComparisonReport& report, Format format) {
  if (format == Format::Csv) unsupported("LTE comparison");
  if (format == Format::Json) return json_io::to_json(report).dump(2) + "\n";
  std::ostringstream os;
  os << std::left << std::setw(38) << "criterion" << std::setw(6) << "MOCN" << std::setw(6) << "GWCN" << "remark\n";
  for (const auto& row : report.rows)
    os << std::left << std::setw(38) << to_string(row.criterion) << std::setw(6) << symbol(row.mocn) << std::setw(6)
       << symbol(row.gwcn) << row.remark << "\n";
  os << "aggregate: MOCN " << fixed(report.mocn_score, 2) << "  GWCN " << fixed(report.gwcn_score, 2) << "\n";
  os << "preferred: " << to_string(report.preferred) << "\n";
  return os.str();
}

std::string emit_report(const ConstraintChecklist& list, Format format) {
  if (format == Format::Csv) unsupported("checklist");
  if (format == Format::Json) return json_io::to_json(list).dump(2) + "\n";
  std::ostringstream os;
  os << "checklist (" << to_string(list.state) << " network)\n";
  for (const auto& item : list.items) {
    const char* mark = !item.answered ? "[ ]" : (*item.answered ? "[x]" : "[-]");
    os << mark << " " << std::left << std::setw(9) << to_string(item.domain) << item.text << "\n";
  }
  os << list.unanswered().size() << " of " << list.items.size() << " items unanswered\n";
  return os.str();
}

void write_document(const std::string& document, const std::string& target, std::ostream& stdout_stream) {
  if (target.empty() || target == "-") {
    stdout_stream << document;
    if (!stdout_stream) throw Error(ErrorCode::IoFailure, "cannot write to standard output");
    return;
  }
  std::ofstream out(target, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open '" + target + "' for writing");
  out << document;
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write to '" + target + "' failed");
}

}  // namespace netshare
