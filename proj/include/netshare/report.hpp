#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "netshare/advisor.hpp"
#include "netshare/scenario.hpp"

namespace netshare {

enum class Format { Table, Csv, Json };

std::optional<Format> format_from_string(std::string_view s) noexcept;

inline constexpr std::string_view kCsvHeader =
    "area,configuration,capex_saving_pct,opex_saving_pct,total_saving_pct,horizon_years";

struct EmitOptions {
  bool provenance = true;
};

std::string emit_report(const ScenarioResult& result, Format format, const EmitOptions& options = {});
/// Sweep CSV prepends `sweep_parameter,sweep_value` to the scenario columns.
std::string emit_report(std::span<const SweepPoint> points, SweepParameter parameter, Format format,
                        const EmitOptions& options = {});
std::string emit_report(const Recommendation& rec, Format format);
std::string emit_report(const LteComparisonReport& report, Format format);
std::string emit_report(const ConstraintChecklist& list, Format format);

/// Writes to `target`, or to stdout when `target` is empty or "-". Throws IoFailure.
void write_document(const std::string& document, const std::string& target, std::ostream& stdout_stream);

}  // namespace netshare
