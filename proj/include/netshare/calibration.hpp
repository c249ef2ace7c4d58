#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netshare/costmodel.hpp"
#include "netshare/inventory.hpp"

namespace netshare {

enum class TargetKind { Point, Delta, Band };
enum class TargetLedger { Capex, Opex, Total };

std::string_view to_string(TargetKind k) noexcept;
std::string_view to_string(TargetLedger l) noexcept;

/// One published saving figure the calibrated tables should reproduce.
///  - Point: saving(configuration) == value
///  - Delta: saving(configuration) - saving(reference) == value (percentage points)
///  - Band:  lower <= saving(c) <= upper for every c in band_configurations
struct CalibrationTarget {
  AreaKind area = AreaKind::Urban;
  TargetKind kind = TargetKind::Point;
  TargetLedger ledger = TargetLedger::Total;
  std::string configuration;
  std::string reference;
  double value = 0.0;
  double lower = 0.0;
  double upper = 100.0;
  std::vector<std::string> band_configurations;  // empty: the six use-case presets
  double tolerance_pp = 2.0;
  std::string label;
};

struct TargetResidual {
  CalibrationTarget target;
  double achieved = 0.0;      // Band: smallest value across the band configurations
  double achieved_max = 0.0;  // Band: largest value; otherwise equals `achieved`
  double residual = 0.0;      // >= 0, in percentage points
};

/// Achieved value and residual of each target against `table`.
std::vector<TargetResidual> evaluate_targets(const CostTable& table, std::span<const CalibrationTarget> targets,
                                             int horizon_years, const SharingRules& rules = {});

struct CalibrationOptions {
  std::uint64_t seed = 20100501;
  int iterations = 60000;  // per restart
  int restarts = 4;
  int horizon_years = 5;
  double capex_scale = 1.0e6;  // total CAPEX of every calibrated table
  std::string currency = "CU";
  SharingRules rules;
  ClassSet capex_classes = {ElementClass::PassiveSite, ElementClass::NodeB,    ElementClass::RNC,
                            ElementClass::Backhaul,    ElementClass::CoreSGSN, ElementClass::CoreGGSN,
                            ElementClass::OAM,         ElementClass::SpectrumLicense, ElementClass::Power};
  ClassSet opex_classes = {ElementClass::PassiveSite, ElementClass::NodeB,     ElementClass::RNC,
                           ElementClass::Backhaul,    ElementClass::CoreSGSN,  ElementClass::CoreGGSN,
                           ElementClass::OAM,         ElementClass::SpectrumLicense,
                           ElementClass::InternationalConnectivity,           ElementClass::SiteRent,
                           ElementClass::Power,       ElementClass::Staff};
};

struct CalibratedArea {
  CostTable table;
  std::vector<TargetResidual> residuals;
  ConstraintReport constraints;
  double capex_share = 0.0;  // CAPEX / grand total at the calibration horizon
};

struct CalibrationResult {
  std::vector<CalibratedArea> areas;
  std::string method;
  std::uint64_t seed = 0;
  int iterations = 0;
  int restarts = 0;
  int horizon_years = 0;
};

/// Searches, per target area, for a cost table that satisfies every
/// repartition constraint and minimizes the squared target residuals.
/// Throws InfeasibleCalibration when the constraints cannot be met or a
/// residual ends above its tolerance.
CalibrationResult calibrate_reference(const RepartitionConstraintSet& constraints,
                                      std::span<const CalibrationTarget> targets,
                                      const CalibrationOptions& options = {});

}  // namespace netshare
