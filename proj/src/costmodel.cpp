#include "netshare/costmodel.hpp"

#include <string>

namespace netshare {

ClassSet effective_shared(const SharingConfiguration& cfg, const SharingRules& rules) {
  ClassSet s = cfg.shared();
  if (rules.share_site_coupled && s.contains(ElementClass::PassiveSite)) {
    s.insert(ElementClass::SiteRent);
    s.insert(ElementClass::Power);
  }
  if (cfg.intl_shared()) s.insert(ElementClass::InternationalConnectivity);
  return s;
}

Eigen::Array<double, kClassCount, 2> cost_factors(const SharingConfiguration& cfg, int my_index,
                                                  const SharingRules& rules) {
  if (my_index < 0 || my_index >= cfg.operator_count())
    throw Error(ErrorCode::InvalidOperatorIndex, "operator index " + std::to_string(my_index) + " outside [0, " +
                                                     std::to_string(cfg.operator_count()) + ")");
  if (!(rules.carrier_unit_factor > 0.0 && rules.carrier_unit_factor <= 1.0))
    throw Error(ErrorCode::InvalidConfiguration, "carrier_unit_factor must lie in (0,1]");

  const double ratio = cfg.split_ratios()[static_cast<std::size_t>(my_index)];
  const Eigen::Array<double, kClassCount, 1> shared = effective_shared(cfg, rules).indicator();
  const Eigen::Array<double, kClassCount, 1> column = (1.0 - shared) + ratio * shared;

  Eigen::Array<double, kClassCount, 2> factors;
  factors << column, column;
  if (cfg.is_shared(ElementClass::SpectrumLicense)) factors(index_of(ElementClass::NodeB), 0) *= rules.carrier_unit_factor;
  return factors;
}

SavingsReport evaluate(const CostTable& table, const SharingConfiguration& cfg, int horizon_years, int my_index,
                       const SharingRules& rules) {
  const CostBreakdown baseline = cumulative_cost(table, horizon_years);
  return savings_report(baseline, apply_sharing(baseline, cfg, my_index, rules), cfg.name(), table.area());
}

}  // namespace netshare
