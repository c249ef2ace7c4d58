#include "netshare/sharing.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "netshare/error.hpp"

namespace netshare {

namespace {

constexpr double kSplitTolerance = 1e-9;
constexpr int kNodeBOperatorLimit = 4;

constexpr std::array<std::string_view, 6> kTable3Names = {
    presets::kMocn, presets::kMocnBackhaul, presets::kMocnNoSpectrum,
    presets::kGwcn, presets::kGwcnBackhaul, presets::kGwcnNoSpectrum,
};

constexpr std::array<std::string_view, 9> kPresetNames = {
    presets::kMocn,        presets::kMocnBackhaul, presets::kMocnNoSpectrum,
    presets::kGwcn,        presets::kGwcnBackhaul, presets::kGwcnNoSpectrum,
    presets::kPassiveOnly, presets::kSiteAntenna,  presets::kGatewayRoaming,
};

std::vector<double> equal_split(int n) { return std::vector<double>(static_cast<std::size_t>(n), 1.0 / n); }

// Ladder rungs and the class that defines each.
constexpr std::array<std::pair<Level, ElementClass>, 4> kLadder = {{
    {Level::Site, ElementClass::PassiveSite},
    {Level::Antenna, ElementClass::Antenna},
    {Level::NodeB, ElementClass::NodeB},
    {Level::RNC, ElementClass::RNC},
}};

bool core_shared(const ClassSet& s) {
  return s.contains(ElementClass::CoreSGSN) || s.contains(ElementClass::CoreGGSN);
}

}  // namespace

std::string_view to_string(Level level) noexcept {
  switch (level) {
    case Level::None: return "NoSharing";
    case Level::Site: return "L1_Site";
    case Level::Antenna: return "L2_Antenna";
    case Level::NodeB: return "L3_NodeB";
    case Level::RNC: return "L4_RNC";
    case Level::Core: return "L5_Core";
  }
  return "NoSharing";
}

std::optional<Level> level_from_string(std::string_view s) noexcept {
  for (auto l : {Level::None, Level::Site, Level::Antenna, Level::NodeB, Level::RNC, Level::Core})
    if (to_string(l) == s) return l;
  return std::nullopt;
}

SharingConfiguration::SharingConfiguration(std::string name, ClassSet shared, int operator_count,
                                           std::vector<double> split_ratios, bool intl_shared,
                                           std::optional<RegulatoryPolicy> policy)
    : name_(std::move(name)), shared_(shared), operator_count_(operator_count), split_(std::move(split_ratios)),
      intl_shared_(intl_shared), policy_(std::move(policy)) {
  if (operator_count_ < 2)
    throw Error(ErrorCode::InvalidConfiguration, name_ + ": operator count must be >= 2");
  if (split_.empty()) split_ = equal_split(operator_count_);
  if (static_cast<int>(split_.size()) != operator_count_)
    throw Error(ErrorCode::InvalidConfiguration, name_ + ": split has " + std::to_string(split_.size()) +
                                                     " ratios for " + std::to_string(operator_count_) + " operators");
  for (double r : split_)
    if (!(r > 0.0 && r <= 1.0))
      throw Error(ErrorCode::InvalidConfiguration, name_ + ": split ratios must lie in (0,1]");
  const double sum = std::accumulate(split_.begin(), split_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSplitTolerance)
    throw Error(ErrorCode::InvalidConfiguration, name_ + ": split ratios sum to " + std::to_string(sum));
  if (policy_) {
    const auto& p = *policy_;
    if (!(p.min_own_coverage_fraction >= 0.0 && p.min_own_coverage_fraction <= 1.0))
      throw Error(ErrorCode::InvalidConfiguration, name_ + ": min_own_coverage_fraction must lie in [0,1]");
  }
}

SharingConfiguration SharingConfiguration::with_name(std::string name) const {
  auto c = *this;
  c.name_ = std::move(name);
  return c;
}

SharingConfiguration SharingConfiguration::with_shared(ClassSet shared) const {
  auto c = *this;
  c.shared_ = shared;
  return c;
}

SharingConfiguration SharingConfiguration::with_split(std::vector<double> split) const {
  const int n = static_cast<int>(split.size());
  return SharingConfiguration(name_, shared_, n, std::move(split), intl_shared_, policy_);
}

SharingConfiguration SharingConfiguration::with_operators(int operator_count) const {
  return SharingConfiguration(name_, shared_, operator_count, {}, intl_shared_, policy_);
}

SharingConfiguration SharingConfiguration::with_intl_shared(bool on) const {
  auto c = *this;
  c.intl_shared_ = on;
  return c;
}

SharingConfiguration SharingConfiguration::with_policy(std::optional<RegulatoryPolicy> policy) const {
  return SharingConfiguration(name_, shared_, operator_count_, split_, intl_shared_, std::move(policy));
}

std::span<const std::string_view> table3_preset_names() { return kTable3Names; }
std::span<const std::string_view> preset_names() { return kPresetNames; }

SharingConfiguration preset(std::string_view name) {
  using EC = ElementClass;
  const ClassSet ran = {EC::PassiveSite, EC::NodeB, EC::RNC};
  const ClassSet backhaul = {EC::Backhaul};
  const ClassSet spectrum = {EC::SpectrumLicense};
  const ClassSet sgsn = {EC::CoreSGSN};

  ClassSet shared;
  if (name == presets::kMocn)
    shared = ran | spectrum;
  else if (name == presets::kMocnBackhaul)
    shared = ran | backhaul | spectrum;
  else if (name == presets::kMocnNoSpectrum)
    shared = ran | backhaul;
  else if (name == presets::kGwcn)
    shared = ran | spectrum | sgsn;
  else if (name == presets::kGwcnBackhaul)
    shared = ran | backhaul | spectrum | sgsn;
  else if (name == presets::kGwcnNoSpectrum)
    shared = ran | backhaul | sgsn;
  else if (name == presets::kPassiveOnly)
    shared = {EC::PassiveSite};
  else if (name == presets::kSiteAntenna)
    shared = {EC::PassiveSite, EC::Antenna};
  else if (name == presets::kGatewayRoaming)
    shared = ran | backhaul | spectrum;  // one RAN, one carrier set; cores stay separate
  else if (name == presets::kMoran)
    shared = ran;
  else
    throw Error(ErrorCode::UnknownPreset, "'" + std::string(name) + "'");
  return SharingConfiguration(std::string(name), shared);
}

SharingLevel sharing_level(const ClassSet& shared) {
  Level top = Level::None;
  for (const auto& [level, cls] : kLadder)
    if (shared.contains(cls)) top = level;
  if (core_shared(shared)) top = Level::Core;

  bool gap = false;
  for (const auto& [level, cls] : kLadder)
    if (level < top && !shared.contains(cls)) gap = true;
  return {top, gap};
}

SharingLevel sharing_level(const SharingConfiguration& cfg) { return sharing_level(cfg.shared()); }

std::string_view to_string(FindingCode code) noexcept {
  switch (code) {
    case FindingCode::GwcnWithoutRan: return "GwcnWithoutRan";
    case FindingCode::SpectrumPoolingForbidden: return "SpectrumPoolingForbidden";
    case FindingCode::LevelExceedsPolicy: return "LevelExceedsPolicy";
    case FindingCode::CoverageCountMismatch: return "CoverageCountMismatch";
    case FindingCode::NonContiguousLadder: return "NonContiguousLadder";
    case FindingCode::CoverageBelowMinimum: return "CoverageBelowMinimum";
    case FindingCode::OperatorCountAboveNodeBLimit: return "OperatorCountAboveNodeBLimit";
  }
  return "Unknown";
}

bool ValidationReport::has_error(FindingCode code) const {
  for (const auto& f : errors)
    if (f.code == code) return true;
  return false;
}

bool ValidationReport::has_warning(FindingCode code) const {
  for (const auto& f : warnings)
    if (f.code == code) return true;
  return false;
}

ValidationReport validate_configuration(const SharingConfiguration& cfg, std::span<const double> coverage,
                                        const std::optional<RegulatoryPolicy>& policy_override) {
  const RegulatoryPolicy policy = policy_override.value_or(cfg.policy().value_or(RegulatoryPolicy{}));
  const ClassSet& shared = cfg.shared();
  const SharingLevel level = sharing_level(shared);
  ValidationReport report;
  const std::string& who = cfg.name();

  if (core_shared(shared) && !shared.contains(ElementClass::RNC))
    report.errors.push_back({FindingCode::GwcnWithoutRan, who + ": core nodes shared without a shared RNC"});

  if (shared.contains(ElementClass::SpectrumLicense) && !policy.spectrum_pooling_allowed)
    report.errors.push_back(
        {FindingCode::SpectrumPoolingForbidden, who + ": spectrum is shared but pooling is not allowed"});

  if (policy.max_level && level.level > *policy.max_level)
    report.errors.push_back({FindingCode::LevelExceedsPolicy, who + ": sharing level " +
                                                                  std::string(to_string(level.level)) +
                                                                  " exceeds " + std::string(to_string(*policy.max_level))});

  if (level.non_contiguous)
    report.warnings.push_back({FindingCode::NonContiguousLadder,
                               who + ": shared ladder skips a level below " + std::string(to_string(level.level))});

  if (cfg.operator_count() > kNodeBOperatorLimit)
    report.warnings.push_back({FindingCode::OperatorCountAboveNodeBLimit,
                               who + ": " + std::to_string(cfg.operator_count()) +
                                   " operators on one NodeB exceeds the usual limit of " +
                                   std::to_string(kNodeBOperatorLimit)});

  if (!coverage.empty()) {
    if (static_cast<int>(coverage.size()) != cfg.operator_count()) {
      report.errors.push_back({FindingCode::CoverageCountMismatch,
                               who + ": " + std::to_string(coverage.size()) + " coverage values for " +
                                   std::to_string(cfg.operator_count()) + " operators"});
    } else {
      for (std::size_t i = 0; i < coverage.size(); ++i)
        if (coverage[i] < policy.min_own_coverage_fraction)
          report.warnings.push_back({FindingCode::CoverageBelowMinimum,
                                     who + ": operator " + std::to_string(i) + " own coverage " +
                                         std::to_string(coverage[i]) + " below " +
                                         std::to_string(policy.min_own_coverage_fraction)});
    }
  }
  return report;
}

}  // namespace netshare
