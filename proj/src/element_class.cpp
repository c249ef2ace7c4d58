#include "netshare/element_class.hpp"

#include <array>
#include <string_view>

#include "netshare/error.hpp"

namespace netshare {
namespace {

constexpr std::array<std::string_view, kClassCount> kClassLabels = {
    "passive_site", "antenna",         "nodeb",  "rnc",       "backhaul", "core_sgsn", "core_ggsn",
    "oam",          "spectrum_license", "international_connectivity", "site_rent", "power", "staff",
};

constexpr std::array<std::string_view, 3> kAreaLabels = {"urban", "suburban", "rural"};

}  // namespace

std::string_view to_string(ElementClass c) noexcept { return kClassLabels[static_cast<std::size_t>(index_of(c))]; }

std::optional<ElementClass> element_class_from_string(std::string_view label) noexcept {
  for (auto c : kAllClasses)
    if (to_string(c) == label) return c;
  return std::nullopt;
}

std::string_view to_string(AreaKind a) noexcept { return kAreaLabels[static_cast<std::size_t>(a)]; }

std::optional<AreaKind> area_from_string(std::string_view label) noexcept {
  for (auto a : kAllAreas)
    if (to_string(a) == label) return a;
  return std::nullopt;
}

std::string_view to_string(Ledger l) noexcept { return l == Ledger::Capex ? "capex" : "opex"; }

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingCostEntry: return "MissingCostEntry";
    case ErrorCode::InvalidAmount: return "InvalidAmount";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::ZeroTotalLedger: return "ZeroTotalLedger";
    case ErrorCode::UnknownElementClass: return "UnknownElementClass";
    case ErrorCode::UnknownArea: return "UnknownArea";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::InvalidOperatorIndex: return "InvalidOperatorIndex";
    case ErrorCode::InvalidHorizon: return "InvalidHorizon";
    case ErrorCode::ZeroBaseline: return "ZeroBaseline";
    case ErrorCode::HorizonMismatch: return "HorizonMismatch";
    case ErrorCode::AreaMismatch: return "AreaMismatch";
    case ErrorCode::MalformedScenario: return "MalformedScenario";
    case ErrorCode::InvalidScenario: return "InvalidScenario";
    case ErrorCode::InvalidSweepParameter: return "InvalidSweepParameter";
    case ErrorCode::InfeasibleCalibration: return "InfeasibleCalibration";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace netshare
