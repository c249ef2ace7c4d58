#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netshare/costmodel.hpp"
#include "netshare/inventory.hpp"
#include "netshare/sharing.hpp"

namespace netshare {

inline constexpr std::string_view kEngineVersion = "1.0.0";

enum class SweepParameter { SplitRatio, HorizonYears, IntlShared, ClassCostFraction };

std::string_view to_string(SweepParameter p) noexcept;
std::optional<SweepParameter> sweep_parameter_from_string(std::string_view s) noexcept;

struct SweepSpec {
  static constexpr int kMaxSteps = 10000;

  SweepParameter parameter = SweepParameter::SplitRatio;
  std::optional<ElementClass> target_class;  // ClassCostFraction only
  double from = 0.0;
  double to = 1.0;
  int steps = 2;

  /// Evenly spaced grid from `from` to `to`, inclusive. Throws InvalidSweepParameter
  /// when the range or the parameter-specific domain is violated.
  std::vector<double> values() const;
  void validate() const;
};

struct AreaInput {
  AreaProfile profile;
  CostTable costs;
};

struct Scenario {
  std::string name;
  int horizon_years = 5;
  std::vector<AreaInput> areas;
  std::vector<SharingConfiguration> configurations;
  std::optional<RegulatoryPolicy> policy;
  std::optional<SweepSpec> sweep;
  SharingRules rules;
};

class InvalidScenarioError : public Error {
 public:
  InvalidScenarioError(const std::string& message, std::string configuration, ValidationReport report)
      : Error(ErrorCode::InvalidScenario, message), configuration_(std::move(configuration)),
        report_(std::move(report)) {}

  const std::string& configuration() const { return configuration_; }
  const ValidationReport& report() const { return report_; }

 private:
  std::string configuration_;
  ValidationReport report_;
};

/// Structural checks plus validate_configuration on every configuration under
/// the scenario policy. Throws InvalidScenarioError on the first failure.
void validate_scenario(const Scenario& s);

struct LoadOptions {
  // Relative cost-table paths are tried against these directories in order.
  std::vector<std::filesystem::path> search_dirs;
};

/// Parses and validates a scenario document. Unknown keys are rejected.
Scenario load_scenario(std::string_view document, const LoadOptions& options = {});
Scenario load_scenario_file(const std::filesystem::path& path);

/// Bundled fixture directory; NETSHARE_FIXTURES overrides the build-time default.
std::filesystem::path fixture_dir();

struct Provenance {
  std::string scenario;
  std::string timestamp;  // ISO-8601 UTC
  std::string engine_version{kEngineVersion};
};

struct GridCell {
  AreaKind area;
  std::string configuration;
  SavingsReport report;
};

struct ScenarioResult {
  std::vector<GridCell> grid;  // area-major, in scenario order
  Provenance provenance;

  const GridCell* find(AreaKind area, std::string_view configuration) const;
  /// Configuration with the largest total saving in `area`; first wins on ties.
  const GridCell* best_total(AreaKind area) const;
};

ScenarioResult run_scenario(const Scenario& s);

struct SweepPoint {
  double value;
  ScenarioResult result;
};

std::vector<SweepPoint> sweep(const Scenario& s);

/// Scenario with the sweep parameter set to `value` (exposed for tests).
Scenario substitute(const Scenario& s, const SweepSpec& spec, double value);

}  // namespace netshare
