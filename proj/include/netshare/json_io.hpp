#pragma once

#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "netshare/advisor.hpp"
#include "netshare/calibration.hpp"
#include "netshare/inventory.hpp"
#include "netshare/scenario.hpp"
#include "netshare/sharing.hpp"

namespace netshare::json_io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Parses `text`, converting parse failures into `code` errors that carry
/// line and column.
Json parse(std::string_view text, ErrorCode code, std::string_view source = "document");
Json read_file(const std::filesystem::path& path, ErrorCode code);
void write_file(const std::filesystem::path& path, const std::string& contents);

/// Throws `code` naming the first key of `object` not in `allowed`.
void require_known_keys(const Json& object, std::initializer_list<std::string_view> allowed,
                        std::string_view context, ErrorCode code = ErrorCode::MalformedScenario);

// Cost tables: { "area", "currency", "entries": { class: { "capex", "opex_annual" } }, "calibration"? }
Json to_json(const CostTable& table);
CostTable cost_table_from_json(const Json& j, ErrorCode code = ErrorCode::MalformedDocument);

/// Calibration block carried by reference fixtures.
struct CalibrationRecord {
  std::string method;
  std::uint64_t seed = 0;
  int iterations = 0;
  int restarts = 0;
  int horizon_years = 5;
  double capex_share = 0.0;
  std::string constraints;
  std::vector<TargetResidual> residuals;
};

Json to_json(const CalibratedArea& area, const CalibrationResult& run, std::string_view constraint_label);
std::optional<CalibrationRecord> calibration_record_from_json(const Json& cost_table_document);

Json to_json(const AreaProfile& profile);
AreaProfile area_profile_from_json(const Json& j, ErrorCode code = ErrorCode::MalformedDocument);

Json to_json(const RegulatoryPolicy& policy);
RegulatoryPolicy policy_from_json(const Json& j, ErrorCode code = ErrorCode::MalformedDocument);

// Configurations: { "name", "shared": { class: bool }, "operators", "split", "intl_shared" }
Json to_json(const SharingConfiguration& cfg);
SharingConfiguration configuration_from_json(const Json& j, ErrorCode code = ErrorCode::MalformedDocument);

Json to_json(const CalibrationTarget& target);
CalibrationTarget calibration_target_from_json(const Json& j, ErrorCode code = ErrorCode::MalformedDocument);

Json to_json(const ConstraintReport& report);
Json to_json(const ValidationReport& report);

Json to_json(const SavingsReport& report);
Json to_json(const ScenarioResult& result, bool with_provenance = true);

Json to_json(const Recommendation& rec);
Json to_json(const LteComparisonReport& report);
Json to_json(const ConstraintChecklist& list);
ConstraintChecklist checklist_from_json(const Json& j);

}  // namespace netshare::json_io
