#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netshare/class_set.hpp"
#include "netshare/element_class.hpp"

namespace netshare {

/// Rungs of the site -> antenna -> NodeB -> RNC -> core ladder. `None` is the
/// sentinel for "nothing on the ladder is shared" and orders below Site.
enum class Level { None = 0, Site = 1, Antenna = 2, NodeB = 3, RNC = 4, Core = 5 };

std::string_view to_string(Level level) noexcept;
std::optional<Level> level_from_string(std::string_view s) noexcept;

struct SharingLevel {
  Level level = Level::None;
  bool non_contiguous = false;

  bool operator==(const SharingLevel&) const = default;
};

struct RegulatoryPolicy {
  double min_own_coverage_fraction = 0.0;
  bool spectrum_pooling_allowed = true;
  std::optional<Level> max_level;

  bool operator==(const RegulatoryPolicy&) const = default;
};

class SharingConfiguration {
 public:
  /// Throws InvalidConfiguration when operator_count < 2 or the split does not
  /// have one ratio per operator, each in (0,1], summing to 1. An empty split
  /// means an equal split.
  SharingConfiguration(std::string name, ClassSet shared, int operator_count = 2,
                       std::vector<double> split_ratios = {}, bool intl_shared = false,
                       std::optional<RegulatoryPolicy> policy = std::nullopt);

  const std::string& name() const { return name_; }
  const ClassSet& shared() const { return shared_; }
  bool is_shared(ElementClass c) const { return shared_.contains(c); }
  int operator_count() const { return operator_count_; }
  const std::vector<double>& split_ratios() const { return split_; }
  bool intl_shared() const { return intl_shared_; }
  const std::optional<RegulatoryPolicy>& policy() const { return policy_; }

  SharingConfiguration with_name(std::string name) const;
  SharingConfiguration with_shared(ClassSet shared) const;
  SharingConfiguration with_split(std::vector<double> split) const;
  SharingConfiguration with_operators(int operator_count) const;  // equal split
  SharingConfiguration with_intl_shared(bool on) const;
  SharingConfiguration with_policy(std::optional<RegulatoryPolicy> policy) const;

  bool operator==(const SharingConfiguration&) const = default;

 private:
  std::string name_;
  ClassSet shared_;
  int operator_count_;
  std::vector<double> split_;
  bool intl_shared_;
  std::optional<RegulatoryPolicy> policy_;
};

namespace presets {
inline constexpr std::string_view kMocn = "MOCN";
inline constexpr std::string_view kMocnBackhaul = "MOCN + Backhaul";
inline constexpr std::string_view kMocnNoSpectrum = "MOCN - Spectrum";
inline constexpr std::string_view kGwcn = "GWCN";
inline constexpr std::string_view kGwcnBackhaul = "GWCN + Backhaul";
inline constexpr std::string_view kGwcnNoSpectrum = "GWCN - Spectrum";
inline constexpr std::string_view kPassiveOnly = "PassiveOnly";
inline constexpr std::string_view kSiteAntenna = "SiteAntenna";
inline constexpr std::string_view kGatewayRoaming = "GatewayRoaming";
inline constexpr std::string_view kMoran = "MORAN";  // alias, not listed
}  // namespace presets

/// The six use-case configurations, in table column order.
std::span<const std::string_view> table3_preset_names();
/// All nine listed presets (the six above, then PassiveOnly, SiteAntenna, GatewayRoaming).
std::span<const std::string_view> preset_names();

/// Throws UnknownPreset for anything not in preset_names() or the MORAN alias.
SharingConfiguration preset(std::string_view name);

/// Highest ladder rung whose defining class is shared, plus whether a lower
/// rung is skipped. Backhaul, spectrum and overhead classes are not on the ladder.
SharingLevel sharing_level(const SharingConfiguration& cfg);
SharingLevel sharing_level(const ClassSet& shared);

enum class FindingCode {
  GwcnWithoutRan,
  SpectrumPoolingForbidden,
  LevelExceedsPolicy,
  CoverageCountMismatch,
  NonContiguousLadder,
  CoverageBelowMinimum,
  OperatorCountAboveNodeBLimit,
};

std::string_view to_string(FindingCode code) noexcept;

struct Finding {
  FindingCode code;
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> errors;
  std::vector<Finding> warnings;

  bool valid() const { return errors.empty(); }
  bool has_error(FindingCode code) const;
  bool has_warning(FindingCode code) const;
};

/// Rule checks on a well-formed configuration. `policy` overrides the
/// configuration's own policy when given; otherwise the permissive default applies.
ValidationReport validate_configuration(const SharingConfiguration& cfg,
                                        std::span<const double> coverage = {},
                                        const std::optional<RegulatoryPolicy>& policy = std::nullopt);

}  // namespace netshare
